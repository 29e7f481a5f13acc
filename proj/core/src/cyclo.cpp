#include "skein/cyclo.hpp"

#include <sstream>
#include <stdexcept>

namespace skein {

namespace {

LaurentPoly phi_p_q2(int p) {
    LaurentPoly m;
    for (int e = 0; e < p; ++e) m.add_term(2 * e, 1);
    return m;
}

}  // namespace

LaurentPoly CycloElem::reduce(int p, const LaurentPoly& x) {
    const LaurentPoly m = phi_p_q2(p);
    const int dm = m.max_exp();
    LaurentPoly r = x;
    // clear negative exponents: subtracting c*q^L*m removes the lowest term
    while (!r.is_zero() && r.min_exp() < 0) {
        int L = r.min_exp();
        BigInt c = r.coeff(L);
        r -= LaurentPoly::monomial(L, c) * m;
    }
    // ordinary remainder modulo the monic modulus
    while (!r.is_zero() && r.max_exp() >= dm) {
        int e = r.max_exp();
        BigInt c = r.coeff(e);
        r -= LaurentPoly::monomial(e - dm, c) * m;
    }
    return r;
}

CycloElem::CycloElem(int p, const LaurentPoly& x) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("CycloElem: p must be prime");
    rep_ = reduce(p, x);
}

CycloElem CycloElem::operator+(const CycloElem& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycloElem: mixed moduli");
    return CycloElem(p_, rep_ + o.rep_);
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycloElem: mixed moduli");
    return CycloElem(p_, rep_ * o.rep_);
}

bool RootBridgeReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string RootBridgeReport::str() const {
    std::ostringstream os;
    os << "root bridge, p = " << p << "\n";
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.pass) os << "  difference: " << c.witness;
        os << "\n";
    }
    return os.str();
}

RootBridgeReport verify_root_bridge(int p) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("verify_root_bridge: p must be an odd prime");
    RootBridgeReport rep;
    rep.p = p;

    const LaurentPoly lhs_a = qint(p).shifted(p - 1);
    const LaurentPoly phi2 = phi_p_q2(p);
    {
        LaurentPoly diff = lhs_a - phi2;
        rep.checks.push_back({"q^{p-1}[p] = phi_p(q^2)", diff.is_zero(), diff.str()});
    }
    {
        LaurentPoly prod = cyclotomic(p) * cyclotomic(p).at_negated_q();
        LaurentPoly diff = phi2 - prod;
        rep.checks.push_back({"phi_p(q^2) = phi_p(q)phi_p(-q)", diff.is_zero(), diff.str()});
    }
    {
        // sample elements of the ideal ([p]) in Z[q,q^-1]
        std::vector<LaurentPoly> samples;
        samples.push_back(qint(p));
        samples.push_back(qint(p) * (LaurentPoly::monomial(1) + LaurentPoly(BigInt(7))));
        samples.push_back(qint(p) * (LaurentPoly::monomial(-3, -2) + LaurentPoly::monomial(5, 3)));
        bool all = true;
        std::string witness;
        for (const auto& f : samples) {
            LaurentPoly img = CycloElem::reduce(p, f);
            if (!img.is_zero()) {
                all = false;
                witness = img.str();
                break;
            }
        }
        rep.checks.push_back({"([p]) maps to 0 in K^p", all, witness});
    }
    return rep;
}

}  // namespace skein
