#pragma once

#include "skein/laurent.hpp"
#include "skein/ratfunc.hpp"

namespace skein {

/// Truncated element of Z[q^{-1}][[q]]: exponents live in [low, cutoff),
/// arithmetic truncates at the cutoff.
class TruncSeries {
public:
    TruncSeries() : low_(0), cutoff_(0) {}
    TruncSeries(int low, int cutoff) : low_(low), cutoff_(cutoff) {}

    static TruncSeries from_laurent(const LaurentPoly& p, int cutoff);
    static TruncSeries one(int cutoff) { return from_laurent(LaurentPoly::one(), cutoff); }

    int low() const { return low_; }
    int cutoff() const { return cutoff_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, BigInt>& terms() const { return terms_; }
    BigInt coeff(int exp) const;
    void add_term(int exp, const BigInt& c);

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator-() const;

    /// Term-map and cutoff equality.
    bool operator==(const TruncSeries& o) const {
        return cutoff_ == o.cutoff_ && terms_ == o.terms_;
    }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }
    /// Coefficient agreement below the smaller cutoff.
    bool agrees_with(const TruncSeries& o) const;
    /// True when the series equals 1 + O(q^cutoff).
    bool is_one_modulo_cutoff() const;

    std::string str() const;

private:
    int low_, cutoff_;
    std::map<int, BigInt> terms_;
};

/// Expansion of 1/[k] into positive powers of q:
/// sum_{i>=0} (q^{(2i+1)k-1} - q^{(2i+1)k+1}), truncated.
TruncSeries s_series(int k, int cutoff);

/// Laurent-series expansion of num/den. The lowest coefficient of the
/// denominator must be +-1 after q-power normalization (true for products
/// of quantum integers); otherwise throws std::domain_error.
TruncSeries ratfunc_to_series(const RatFunc& x, int cutoff);

}  // namespace skein
