#include "skein/laurent.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace skein {

LaurentPoly::LaurentPoly(const BigInt& c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int exp, BigInt c) {
    LaurentPoly p;
    if (c != 0) p.terms_[exp] = std::move(c);
    return p;
}

BigInt LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exp() const { return terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

void LaurentPoly::set_coeff(int exp, const BigInt& c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

void LaurentPoly::add_term(int exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::at_negated_q() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = (e % 2 != 0) ? BigInt(-c) : c;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

BigInt LaurentPoly::content() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::divided_by_content() const {
    BigInt g = content();
    if (g == 0 || g == 1) return *this;
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c / g;
    return r;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || e == 0) os << a.str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly operator*(const BigInt& c, const LaurentPoly& p) {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, pc] : p.terms()) r.set_coeff(e, c * pc);
    return r;
}

LaurentPoly qint(int n) {
    LaurentPoly p;
    for (int j = 0; j < n; ++j) p.add_term(n - 1 - 2 * j, 1);
    return p;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

LaurentPoly cyclotomic(int p) {
    if (!is_prime(p)) throw std::invalid_argument("cyclotomic: p must be prime");
    LaurentPoly r;
    for (int e = 0; e < p; ++e) r.add_term(e, 1);
    return r;
}

namespace {

// Division of the polynomial parts after q-power normalization. Returns
// false when the division is not exact over Z.
bool try_exact_div(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
    if (a.is_zero()) {
        quot = LaurentPoly();
        return true;
    }
    LaurentPoly rem = a;
    LaurentPoly q;
    const int db = b.max_exp();
    const BigInt lead_b = b.coeff(db);
    while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= db - b.min_exp()) {
        const int dr = rem.max_exp();
        const BigInt lead_r = rem.coeff(dr);
        if (lead_r % lead_b != 0) return false;
        BigInt f = lead_r / lead_b;
        int shift = dr - db;
        q.add_term(shift, f);
        rem -= LaurentPoly::monomial(shift, f) * b;
    }
    if (!rem.is_zero()) return false;
    quot = q;
    return true;
}

}  // namespace

bool divisible(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly q;
    return try_exact_div(a, b, q);
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly q;
    if (!try_exact_div(a, b, q)) throw std::domain_error("exact_div: not divisible");
    return q;
}

namespace {

using Poly = std::vector<BigInt>;  // dense, index = exponent

void poly_trim(Poly& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

Poly poly_primitive(Poly v) {
    BigInt g = 0;
    for (const auto& c : v) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& c : v) c /= g;
    return v;
}

// primitive pseudo-remainder sequence gcd over Z[q]
Poly poly_gcd_prs(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        // pseudo-remainder of a by b
        BigInt lb = b.back();
        Poly r = a;
        while (r.size() >= b.size()) {
            BigInt lr = r.back();
            size_t off = r.size() - b.size();
            for (auto& c : r) c *= lb;
            for (size_t i = 0; i < b.size(); ++i) r[off + i] -= lr * b[i];
            poly_trim(r);
        }
        a = std::move(b);
        b = poly_primitive(std::move(r));
    }
    a = poly_primitive(std::move(a));
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

}  // namespace

LaurentPoly rational_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    auto to_vec = [](const LaurentPoly& p) {
        Poly v;
        if (p.is_zero()) return v;
        v.assign(p.max_exp() - p.min_exp() + 1, BigInt(0));
        for (const auto& [e, c] : p.terms()) v[e - p.min_exp()] = c;
        return v;
    };
    Poly g = poly_gcd_prs(to_vec(a), to_vec(b));
    LaurentPoly out;
    for (size_t i = 0; i < g.size(); ++i) out.set_coeff(static_cast<int>(i), g[i]);
    return out;
}

}  // namespace skein
