#include "skein/fusion.hpp"

#include <sstream>
#include <stdexcept>

namespace skein {

LaurentPoly level_modulus(int N) {
    if (N < 1) throw std::invalid_argument("level_modulus: N >= 1 required");
    LaurentPoly m = qint(N + 1).shifted(N);  // polynomial with constant term 1
    for (int k = 2; k <= N; ++k) {
        const LaurentPoly qk = qint(k).shifted(k - 1);
        while (true) {
            LaurentPoly g = rational_gcd(m, qk);
            if (g.is_zero() || g.max_exp() - g.min_exp() == 0) break;
            m = exact_div(m, g);
            m = m.shifted(-m.min_exp());
        }
    }
    if (m.coeff(m.max_exp()) < 0) m = -m;
    return m;
}

bool is_zero_mod_level(const RatFunc& r, int N) {
    if (r.is_zero()) return true;
    const LaurentPoly m = level_modulus(N);
    LaurentPoly g = rational_gcd(r.den(), m);
    if (!g.is_zero() && g.max_exp() - g.min_exp() > 0)
        throw std::domain_error("is_zero_mod_level: denominator shares a factor with the modulus");
    return divisible(r.num(), m);
}

std::pair<int, int> fold_phi_index(int j, int N) {
    if (j < 0) throw std::invalid_argument("fold_phi_index: j >= 0 required");
    int r = j % (2 * N + 2);
    if (r < N) return {r, +1};
    if (r == N || r == 2 * N + 1) return {0, 0};
    return {2 * N - r, -1};
}

bool FusionElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (!is_zero_mod_level(c, N_)) return false;
    return true;
}

bool FusionElement::operator==(const FusionElement& o) const {
    if (N_ != o.N_) return false;
    for (int k = 0; k < N_; ++k)
        if (!is_zero_mod_level(coeffs_[k] - o.coeffs_[k], N_)) return false;
    return true;
}

std::string FusionElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < N_; ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[k].str() << ")*phi_" << k;
    }
    if (first) os << "0";
    return os.str();
}

FusionElement fusion_reduce(const PhiElement& x, int N) {
    FusionElement out(N);
    for (const auto& [j, c] : x.coeffs()) {
        auto [k, sign] = fold_phi_index(j, N);
        if (sign == 0) continue;
        out.add(k, sign > 0 ? c : -c);
    }
    return out;
}

FusionElement fusion_reduce(const AnnularElement& x, int N) {
    return fusion_reduce(to_phi_basis(x), N);
}

bool FusionReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string FusionReport::str() const {
    std::ostringstream os;
    os << "fusion checks, N = " << N << "\n";
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.pass) os << "  lhs: " << c.lhs << "  rhs: " << c.rhs;
        os << "\n";
    }
    return os.str();
}

FusionReport eigen_check(int N) {
    FusionReport rep;
    rep.N = N;
    PhiElement om = omega(N);
    FusionElement lhs = fusion_reduce(x_times(om), N);
    FusionElement rhs = fusion_reduce(om * RatFunc(qint(2)), N);
    rep.checks.push_back({"X omega_N = [2] omega_N in the level quotient", lhs == rhs,
                          lhs.str(), rhs.str()});
    return rep;
}

FusionReport verify_slide_identities(int N) {
    if (N != 2 && N != 3) throw std::invalid_argument("verify_slide_identities: N in {2,3}");
    FusionReport rep;
    rep.N = N;
    const RatFunc two = RatFunc(qint(2));
    if (N == 2) {
        AnnularElement om = AnnularElement::x_power(1) + AnnularElement::one() * two;  // X + [2]
        AnnularElement x_om = om * AnnularElement::x_power(1);
        FusionElement lhs = fusion_reduce(x_om, 2);
        FusionElement mid = fusion_reduce(omega(2), 2);
        FusionElement rhs = fusion_reduce(om * two, 2);
        rep.checks.push_back({"X omega = omega_2 in the quotient", lhs == mid, lhs.str(), mid.str()});
        rep.checks.push_back({"omega_2 = [2] omega in the quotient", mid == rhs, mid.str(), rhs.str()});
    } else {
        // the level-truncated omega_3 = phi_0 + [2] phi_1 + [3] phi_2
        PhiElement om3 = PhiElement::phi_power(0) + PhiElement::phi_power(1, two) +
                         PhiElement::phi_power(2, RatFunc(qint(3)));
        // X omega_3 with phi_3 = 0, written in the X-basis
        PhiElement x_om3 = x_times(om3);
        PhiElement x_om3_cut;
        for (const auto& [j, c] : x_om3.coeffs())
            if (j < 3) x_om3_cut.add_term(j, c);
        AnnularElement got = to_x_basis(x_om3_cut);
        AnnularElement expect = AnnularElement::x_power(1, RatFunc(qint(3) + LaurentPoly::one())) +
                                AnnularElement::x_power(2, two);
        rep.checks.push_back({"X omega_3 = ([3]+1) X + [2] X^2", got == expect, got.str(), expect.str()});

        LaurentPoly sq = qint(2) * qint(2);
        LaurentPoly sum = qint(3) + LaurentPoly::one();
        rep.checks.push_back({"[3]+1 = [2]^2 exactly", sq == sum, sum.str(), sq.str()});

        AnnularElement om = AnnularElement::x_power(2) + AnnularElement::x_power(1, two);
        FusionElement lhs = fusion_reduce(omega(3), 3);
        FusionElement rhs = fusion_reduce(om, 3);
        rep.checks.push_back({"omega_3 = omega in the level-3 quotient", lhs == rhs, lhs.str(), rhs.str()});
    }
    return rep;
}

}  // namespace skein
