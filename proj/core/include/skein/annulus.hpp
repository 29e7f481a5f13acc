#pragma once

#include <map>
#include <string>
#include <utility>

#include "skein/ratfunc.hpp"
#include "skein/tl.hpp"

namespace skein {

/// Skein of the annulus in the X-basis: finitely supported polynomials in
/// the class X of one essential core-parallel circle. Disjoint nested
/// circles commute, so multiplication is polynomial multiplication.
class AnnularElement {
public:
    AnnularElement() = default;

    static AnnularElement x_power(int k, RatFunc c = RatFunc(1));
    static AnnularElement one() { return x_power(0); }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, RatFunc>& coeffs() const { return coeffs_; }
    RatFunc coeff(int k) const;
    void add_term(int k, const RatFunc& c);

    AnnularElement operator+(const AnnularElement& o) const;
    AnnularElement operator-(const AnnularElement& o) const;
    AnnularElement operator*(const AnnularElement& o) const;
    AnnularElement operator*(const RatFunc& c) const;
    bool operator==(const AnnularElement& o) const { return coeffs_ == o.coeffs_; }

    std::string str() const;

private:
    std::map<int, RatFunc> coeffs_;
};

/// The same module written in the basis phi_k of annular closures of the
/// Jones-Wenzl projectors; X phi_k = phi_{k+1} + phi_{k-1}.
class PhiElement {
public:
    PhiElement() = default;

    static PhiElement phi_power(int k, RatFunc c = RatFunc(1));

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, RatFunc>& coeffs() const { return coeffs_; }
    RatFunc coeff(int k) const;
    void add_term(int k, const RatFunc& c);

    PhiElement operator+(const PhiElement& o) const;
    PhiElement operator-(const PhiElement& o) const;
    PhiElement operator*(const RatFunc& c) const;
    bool operator==(const PhiElement& o) const { return coeffs_ == o.coeffs_; }

    std::string str() const;

private:
    std::map<int, RatFunc> coeffs_;
};

/// phi_k in the X-basis via the Chebyshev recurrence.
AnnularElement phi(int k);

/// X-basis -> phi-basis and back.
PhiElement to_phi_basis(const AnnularElement& x);
AnnularElement to_x_basis(const PhiElement& p);

/// Multiplication by X in the phi-basis.
PhiElement x_times(const PhiElement& p);

/// Glues the rectangle's top to its bottom around the annulus core;
/// essential circles contribute X, nullhomotopic ones [2].
AnnularElement annular_closure(const TLElement& x);

/// omega_N = sum_{k=0}^{N} Tr(p_k) phi_k with Tr(p_k) = [k+1].
PhiElement omega(int N);

/// Parity split omega_N = omega_even + omega_odd over the summation index.
std::pair<PhiElement, PhiElement> spin_split(int N);

}  // namespace skein
