#include "skein/ratfunc.hpp"

#include <stdexcept>

namespace skein {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    // shift q-powers out of the denominator: den becomes a polynomial with
    // nonzero constant term
    int L = den_.min_exp();
    if (L != 0) {
        den_ = den_.shifted(-L);
        num_ = num_.shifted(-L);
    }
    if (den_.max_exp() > 0) {
        // cancel the polynomial gcd; keeps elimination-style arithmetic from
        // blowing up in degree
        if (divisible(num_, den_)) {
            num_ = exact_div(num_, den_);
            den_ = LaurentPoly::one();
        } else {
            LaurentPoly g = rational_gcd(num_, den_);
            if (!g.is_zero() && g.max_exp() - g.min_exp() > 0) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
                int L2 = den_.min_exp();
                if (L2 != 0) {
                    den_ = den_.shifted(-L2);
                    num_ = num_.shifted(-L2);
                }
            }
        }
    }
    if (den_.coeff(den_.max_exp()) < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    BigInt g = boost::multiprecision::gcd(num_.content(), den_.content());
    if (g > 1) {
        LaurentPoly n2, d2;
        for (const auto& [e, c] : num_.terms()) n2.set_coeff(e, c / g);
        for (const auto& [e, c] : den_.terms()) d2.set_coeff(e, c / g);
        num_ = n2;
        den_ = d2;
    }
}

bool RatFunc::is_laurent() const {
    return divisible(num_, den_);
}

LaurentPoly RatFunc::as_laurent() const {
    return exact_div(num_, den_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        canonicalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    if (den_ == o.den_) {
        num_ -= o.num_;
        canonicalize();
        return *this;
    }
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    canonicalize();
    return *this;
}

RatFunc RatFunc::operator+(const RatFunc& o) const { RatFunc r = *this; r += o; return r; }
RatFunc RatFunc::operator-(const RatFunc& o) const { RatFunc r = *this; r -= o; return r; }
RatFunc RatFunc::operator*(const RatFunc& o) const { RatFunc r = *this; r *= o; return r; }
RatFunc RatFunc::operator/(const RatFunc& o) const { RatFunc r = *this; r /= o; return r; }

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::string RatFunc::str() const {
    if (den_ == LaurentPoly::one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc qint_ratio(int a, int b) {
    return RatFunc(qint(a), qint(b));
}

}  // namespace skein
