#include "skein/annulus.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace skein {

AnnularElement AnnularElement::x_power(int k, RatFunc c) {
    AnnularElement a;
    if (k < 0) throw std::invalid_argument("AnnularElement: negative X power");
    a.add_term(k, c);
    return a;
}

RatFunc AnnularElement::coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? RatFunc() : it->second;
}

void AnnularElement::add_term(int k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

AnnularElement AnnularElement::operator+(const AnnularElement& o) const {
    AnnularElement r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k, c);
    return r;
}

AnnularElement AnnularElement::operator-(const AnnularElement& o) const {
    AnnularElement r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k, -c);
    return r;
}

AnnularElement AnnularElement::operator*(const AnnularElement& o) const {
    AnnularElement r;
    for (const auto& [ka, ca] : coeffs_)
        for (const auto& [kb, cb] : o.coeffs_) r.add_term(ka + kb, ca * cb);
    return r;
}

AnnularElement AnnularElement::operator*(const RatFunc& c) const {
    AnnularElement r;
    if (c.is_zero()) return r;
    for (const auto& [k, x] : coeffs_) r.coeffs_.emplace(k, x * c);
    return r;
}

std::string AnnularElement::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k == 1) os << "*X";
        if (k > 1) os << "*X^" << k;
    }
    return os.str();
}

PhiElement PhiElement::phi_power(int k, RatFunc c) {
    PhiElement a;
    if (k < 0) throw std::invalid_argument("PhiElement: negative index");
    a.add_term(k, c);
    return a;
}

RatFunc PhiElement::coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? RatFunc() : it->second;
}

void PhiElement::add_term(int k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

PhiElement PhiElement::operator+(const PhiElement& o) const {
    PhiElement r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k, c);
    return r;
}

PhiElement PhiElement::operator-(const PhiElement& o) const {
    PhiElement r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k, -c);
    return r;
}

PhiElement PhiElement::operator*(const RatFunc& c) const {
    PhiElement r;
    if (c.is_zero()) return r;
    for (const auto& [k, x] : coeffs_) r.coeffs_.emplace(k, x * c);
    return r;
}

std::string PhiElement::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*phi_" << k;
    }
    return os.str();
}

AnnularElement phi(int k) {
    if (k < 0) throw std::invalid_argument("phi: k >= 0 required");
    AnnularElement prev = AnnularElement::one();      // phi_0
    if (k == 0) return prev;
    AnnularElement cur = AnnularElement::x_power(1);  // phi_1
    for (int j = 1; j < k; ++j) {
        AnnularElement next = cur * AnnularElement::x_power(1) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

PhiElement to_phi_basis(const AnnularElement& x) {
    // subtract leading phi terms: X^k = phi_k + lower X-degree corrections
    PhiElement out;
    AnnularElement rest = x;
    while (!rest.is_zero()) {
        int k = rest.coeffs().rbegin()->first;
        RatFunc c = rest.coeffs().rbegin()->second;
        out.add_term(k, c);
        rest = rest - phi(k) * c;
    }
    return out;
}

AnnularElement to_x_basis(const PhiElement& p) {
    AnnularElement out;
    for (const auto& [k, c] : p.coeffs()) out = out + phi(k) * c;
    return out;
}

PhiElement x_times(const PhiElement& p) {
    PhiElement out;
    for (const auto& [k, c] : p.coeffs()) {
        out.add_term(k + 1, c);
        if (k >= 1) out.add_term(k - 1, c);
    }
    return out;
}

AnnularElement annular_closure(const TLElement& x) {
    AnnularElement out;
    const int n = x.n();
    const RatFunc loopval = RatFunc(qint(2));
    for (const auto& [m, c] : x.terms()) {
        // seam pairing: bottom i rejoins top position i; traversing the seam
        // upward counts +1 winding, downward -1
        const int N = 2 * n;
        std::vector<char> seen(N, 0);
        int essential = 0, trivial = 0;
        for (int p = 0; p < N; ++p) {
            if (seen[p]) continue;
            int winding = 0;
            int cur = p;
            while (!seen[cur]) {
                seen[cur] = 1;
                int w = m.partner(cur);
                seen[w] = 1;
                // seam edge from w back to its vertical partner
                winding += (w < n) ? -1 : +1;
                cur = N - 1 - w;
            }
            if (winding != 0)
                ++essential;
            else
                ++trivial;
        }
        RatFunc v = c;
        for (int l = 0; l < trivial; ++l) v *= loopval;
        out.add_term(essential, v);
    }
    return out;
}

PhiElement omega(int N) {
    if (N < 0) throw std::invalid_argument("omega: N >= 0 required");
    PhiElement out;
    for (int k = 0; k <= N; ++k) out.add_term(k, RatFunc(qint(k + 1)));
    return out;
}

std::pair<PhiElement, PhiElement> spin_split(int N) {
    PhiElement even, odd;
    for (int k = 0; k <= N; ++k) {
        if (k % 2 == 0)
            even.add_term(k, RatFunc(qint(k + 1)));
        else
            odd.add_term(k, RatFunc(qint(k + 1)));
    }
    return {even, odd};
}

}  // namespace skein
