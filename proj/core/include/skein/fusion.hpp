#pragma once

#include <string>
#include <vector>

#include "skein/annulus.hpp"

namespace skein {

/// Modulus governing the scalar part of the level-N fusion quotient:
/// [N+1] with every factor shared with [2],...,[N] stripped. Over R^N those
/// shared factors are units, so the scalar ideal ([N+1]) R^N is generated
/// by this polynomial.
LaurentPoly level_modulus(int N);

/// Scalar zero test modulo the level ideal. Requires the denominator to be
/// coprime to the modulus (true for products of [k], k <= N).
bool is_zero_mod_level(const RatFunc& r, int N);

/// Image of phi_j in the quotient: the indices fold with period 2N+2,
/// phi_N and phi_{2N+1} die, and the upper half reflects with a sign.
/// Returns (index in 0..N-1, sign) or sign 0 when the class vanishes.
std::pair<int, int> fold_phi_index(int j, int N);

/// Element of the level-N fusion quotient: coordinates over phi_0..phi_{N-1}
/// with scalars compared modulo the level ideal.
class FusionElement {
public:
    FusionElement(int N) : N_(N), coeffs_(N) {}

    int level() const { return N_; }
    const RatFunc& coeff(int k) const { return coeffs_.at(k); }
    void add(int k, const RatFunc& c) { coeffs_.at(k) += c; }

    bool is_zero() const;
    bool operator==(const FusionElement& o) const;

    std::string str() const;

private:
    int N_;
    std::vector<RatFunc> coeffs_;
};

/// Reduces modulo the ideal generated by p_N: phi_N dies, higher indices
/// rewrite downward, scalars are read modulo the level ideal.
FusionElement fusion_reduce(const PhiElement& x, int N);
FusionElement fusion_reduce(const AnnularElement& x, int N);

struct FusionCheck {
    std::string name;
    bool pass;
    std::string lhs, rhs;
};

struct FusionReport {
    int N;
    std::vector<FusionCheck> checks;
    bool pass() const;
    std::string str() const;
};

/// X omega_N = [2] omega_N in the level-N fusion quotient.
FusionReport eigen_check(int N);

/// The slide identities worked out for the low levels: at N = 2 with
/// omega = X + [2], X omega = omega_2 = [2] omega in the quotient; at N = 3
/// with omega = X^2 + [2] X, the pre-reduction expansion
/// X omega_3 = ([3]+1) X + [2] X^2, the exact identity [3]+1 = [2]^2, and
/// omega_3 = omega in the quotient.
FusionReport verify_slide_identities(int N);

}  // namespace skein
