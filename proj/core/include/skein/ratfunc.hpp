#pragma once

#include "skein/laurent.hpp"

namespace skein {

/// Ratio of Laurent polynomials in canonical form: the denominator is a
/// polynomial in q with nonzero constant term and positive leading
/// coefficient, and the pair is reduced by integer content. Equality is
/// decided by cross-multiplication.
class RatFunc {
public:
    RatFunc() : num_(), den_(LaurentPoly::one()) {}
    RatFunc(LaurentPoly num, LaurentPoly den);
    /* implicit */ RatFunc(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}
    explicit RatFunc(int c) : num_(LaurentPoly(BigInt(c))), den_(LaurentPoly::one()) {}

    static RatFunc one() { return RatFunc(1); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const;
    /// Requires den == q^0-normalized unit; throws otherwise.
    LaurentPoly as_laurent() const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string str() const;

private:
    LaurentPoly num_, den_;
    void canonicalize();
};

/// [a]/[b] as an exact rational function.
RatFunc qint_ratio(int a, int b);

}  // namespace skein
