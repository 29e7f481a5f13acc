#include "skein/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skein {

TruncSeries TruncSeries::from_laurent(const LaurentPoly& p, int cutoff) {
    TruncSeries s(p.is_zero() ? 0 : p.min_exp(), cutoff);
    for (const auto& [e, c] : p.terms())
        if (e < cutoff) s.terms_[e] = c;
    return s;
}

BigInt TruncSeries::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void TruncSeries::add_term(int exp, const BigInt& c) {
    if (c == 0 || exp >= cutoff_) return;
    low_ = std::min(low_, exp);
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    TruncSeries r(std::min(low_, o.low_), std::min(cutoff_, o.cutoff_));
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    TruncSeries r(std::min(low_, o.low_), std::min(cutoff_, o.cutoff_));
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    // a is exact through cutoff-1, so the product is reliable through
    // min(a.cutoff + b.low, b.cutoff + a.low) - 1
    TruncSeries r(low_ + o.low_, std::min(cutoff_ + o.low_, o.cutoff_ + low_));
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(low_, cutoff_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

bool TruncSeries::agrees_with(const TruncSeries& o) const {
    int d = std::min(cutoff_, o.cutoff_);
    for (const auto& [e, c] : terms_)
        if (e < d && o.coeff(e) != c) return false;
    for (const auto& [e, c] : o.terms_)
        if (e < d && coeff(e) != c) return false;
    return true;
}

bool TruncSeries::is_one_modulo_cutoff() const {
    if (terms_.size() != 1) return false;
    return coeff(0) == 1;
}

std::string TruncSeries::str() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.set_coeff(e, c);
    std::ostringstream os;
    os << p.str() << " + O(q^" << cutoff_ << ")";
    return os.str();
}

TruncSeries s_series(int k, int cutoff) {
    if (k < 1) throw std::invalid_argument("s_series: k >= 1 required");
    TruncSeries s(k - 1, cutoff);
    for (int i = 0;; ++i) {
        int base = (2 * i + 1) * k;
        if (base - 1 >= cutoff) break;
        s.add_term(base - 1, 1);
        s.add_term(base + 1, -1);
    }
    return s;
}

TruncSeries ratfunc_to_series(const RatFunc& x, int cutoff) {
    if (x.is_zero()) return TruncSeries(0, cutoff);
    const LaurentPoly& den = x.den();
    int L = den.min_exp();  // canonical form has L == 0
    BigInt unit = den.coeff(L);
    if (unit != 1 && unit != -1)
        throw std::domain_error("ratfunc_to_series: lowest denominator coefficient is not a unit");

    // solve num = den * s coefficientwise, ascending in the exponent
    const LaurentPoly& num = x.num();
    int s_low = num.min_exp() - L;
    TruncSeries s(s_low, cutoff);
    std::map<int, BigInt> acc;  // coefficients of den * (partial s)
    for (int e = s_low; e < cutoff; ++e) {
        BigInt target = num.coeff(e + L);
        auto it = acc.find(e + L);
        BigInt have = it == acc.end() ? BigInt(0) : it->second;
        BigInt c = (target - have) / unit;
        if (c != 0) {
            s.add_term(e, c);
            for (const auto& [ed, cd] : den.terms()) acc[e + ed] += c * cd;
        }
    }
    return s;
}

}  // namespace skein
