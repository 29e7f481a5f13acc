#pragma once

#include <string>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

/// Element of K^p = Z[q,q^{-1}] / (phi_p(q^2)), stored as the unique
/// representative with exponents in [0, 2p-2). q is invertible modulo
/// phi_p(q^2) since the modulus has constant term 1.
class CycloElem {
public:
    CycloElem(int p, const LaurentPoly& x);

    int p() const { return p_; }
    const LaurentPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    CycloElem operator+(const CycloElem& o) const;
    CycloElem operator*(const CycloElem& o) const;
    bool operator==(const CycloElem& o) const { return p_ == o.p_ && rep_ == o.rep_; }

    /// Canonical reduction map; exposed so idempotence is testable.
    static LaurentPoly reduce(int p, const LaurentPoly& x);

private:
    int p_;
    LaurentPoly rep_;
};

struct RootBridgeCheck {
    std::string name;
    bool pass;
    std::string witness;  // the offending polynomial difference when failing
};

struct RootBridgeReport {
    int p;
    std::vector<RootBridgeCheck> checks;
    bool pass() const;
    std::string str() const;
};

/// Checks, as exact Laurent-polynomial identities for odd prime p:
///   (a) q^{p-1} [p] = phi_p(q^2)
///   (b) phi_p(q^2) = phi_p(q) phi_p(-q)
///   (c) sample elements of ([p]) map to zero in K^p
RootBridgeReport verify_root_bridge(int p);

}  // namespace skein
