#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace skein {

using BigInt = boost::multiprecision::cpp_int;

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored; equality is term-map equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const BigInt& c);

    static LaurentPoly monomial(int exp, BigInt c = BigInt(1));
    static LaurentPoly one() { return LaurentPoly(BigInt(1)); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, BigInt>& terms() const { return terms_; }
    BigInt coeff(int exp) const;
    int min_exp() const;  // precondition: nonzero
    int max_exp() const;  // precondition: nonzero
    int term_count() const { return static_cast<int>(terms_.size()); }

    void set_coeff(int exp, const BigInt& c);
    void add_term(int exp, const BigInt& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    /// Multiply by q^k.
    LaurentPoly shifted(int k) const;
    /// Substitute q -> -q.
    LaurentPoly at_negated_q() const;
    /// Substitute q -> q^{-1}.
    LaurentPoly bar() const;
    /// gcd of all coefficients (non-negative; 0 for the zero polynomial).
    BigInt content() const;
    LaurentPoly divided_by_content() const;

    std::string str() const;

private:
    std::map<int, BigInt> terms_;
};

LaurentPoly operator*(const BigInt& c, const LaurentPoly& p);

/// Quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{-n+1}; [0] = 0.
LaurentPoly qint(int n);

bool is_prime(int p);

/// pth cyclotomic polynomial q^{p-1} + ... + q + 1 for prime p.
/// Throws std::invalid_argument on non-prime input.
LaurentPoly cyclotomic(int p);

/// Exact division in Z[q,q^{-1}]; divisible() reports whether b | a.
bool divisible(const LaurentPoly& a, const LaurentPoly& b);
/// Throws std::domain_error when b does not divide a.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// gcd over Q[q] of the polynomial parts, returned primitive over Z with
/// positive leading coefficient (1 when coprime). q-power factors ignored.
LaurentPoly rational_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace skein
