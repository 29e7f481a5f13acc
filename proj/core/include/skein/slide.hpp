#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/ann.hpp"
#include "skein/annulus.hpp"
#include "skein/fusion.hpp"
#include "skein/kom.hpp"

namespace skein {

/// How a disk complex over TL_n is glued into the annulus: strand 0 runs to
/// the two marked points with the complement contributing `connector` turns
/// around the core; every other strand closes up with the prescribed
/// winding. Windings are signed and negate under vertical reflection.
struct TraceRoute {
    int n = 2;
    std::vector<int> winding;  // per closed strand position 1..n-1
    int connector = 0;

    TraceRoute reflected() const;
    bool operator==(const TraceRoute& o) const {
        return n == o.n && winding == o.winding && connector == o.connector;
    }
    std::string str() const;
};

/// The closure that wraps every closed strand around the core: the closed
/// identity strand becomes an essential circle.
TraceRoute route_plus(int N);
/// The closure whose circles are nullhomotopic, with the through strand
/// carried once around the core by the complement. Chosen so that the two
/// routes close the projector tail to the same chain complex.
TraceRoute route_minus(int N);

/// Annular closure of one object / one cobordism along a route.
AnnObj trace_object(const PlanarObj& obj, const TraceRoute& r);
AnnCob trace_cob(const Cob& f, const TraceRoute& r);

/// Transport of a whole materialized complex; d^2 = 0 is re-checked by
/// validate_window on demand.
AnnWindow partial_trace(const DiskWindow& w, const TraceRoute& r);

/// Vertical reflection of a disk complex (objects and cobordisms flipped).
DiskWindow reflect_window(const DiskWindow& w);

/// P_n with the homological-degree-zero identity summand removed (level 0
/// becomes empty; indices are unchanged).
DiskWindow tail_window(int n, int hmax);

struct TailEqualityReport {
    int N;
    bool equal = false;
    bool swapped = false;  // N = 3 matches after the recorded summand swap
    std::string detail;
    bool pass() const { return equal; }
    std::string str() const;
};

/// Closes the tail of P_N along both routes and compares the complexes:
/// on the nose for N = 2, up to the recorded summand permutation for N = 3.
TailEqualityReport tail_equality_check(int N, int hmax = 12);

/// The handle-slide objects: for N = 2 one essential / one trivial circle,
/// for N = 3 two essential / essential plus trivial.
std::pair<AnnObj, AnnObj> omega_objects(int N);

/// Formal class of an annular object: q-power times X^essential [2]^trivial
/// on the arc class; used for decategorified cross-checks.
struct AnnClassKey {
    int arcs = 0;
    int arc_w = 0;
    bool operator<(const AnnClassKey& k) const {
        return arcs != k.arcs ? arcs < k.arcs : arc_w < k.arc_w;
    }
    bool operator==(const AnnClassKey& k) const { return arcs == k.arcs && arc_w == k.arc_w; }
};
using AnnClass = std::map<AnnClassKey, AnnularElement>;  // X-polynomial coefficients

AnnClass ann_k0_class(const AnnObj& obj, int qshift);
AnnClass window_k0(const AnnWindow& w);

/// Witness that an object lies in the ideal generated by the projector:
/// the object is the named projector complex glued into the annulus against
/// the explicit complement described by the route, then shifted.
struct IdealWitness {
    int N = 2;
    TraceRoute route;
    bool reflected = false;  // complement built from the reflected picture
};

/// One zigzag move of the brusque-quotient equivalence: the cone of the
/// tail inclusion into the ideal object Q reduces to the declared endpoint.
struct SlideStep {
    IdealWitness witness;
    AnnWindow q;                          // the ideal object as presented
    std::vector<std::vector<int>> perm;   // per-level map: tail summand -> q summand
    AnnSummand endpoint;                  // single-object complex the cone reduces to
};

/// Certificate that start and end are equivalent modulo the ideal: both
/// reduce to cones on the shared tail. The reflection section repeats the
/// argument for the vertically reflected picture.
struct EquivCertificate {
    int N = 2;
    int window = 12;
    int version = 1;
    AnnSummand start, end;
    AnnWindow tail;
    std::vector<SlideStep> steps;  // first consumes start, last produces end

    AnnSummand r_start, r_end;
    AnnWindow r_tail;
    std::vector<SlideStep> r_steps;
};

EquivCertificate build_slide_certificate(int N, int window = 12);

struct VerifyReport {
    bool accepted = false;
    std::string reason;  // first failing step on rejection
    std::string str() const { return accepted ? "accepted" : ("rejected: " + reason); }
};

VerifyReport verify_certificate(const EquivCertificate& cert);

/// Decategorified shadow: the formal classes of the certificate's cone
/// steps balance exactly, and the circle parts reproduce the fusion-level
/// slide identity.
struct K0ShadowReport {
    bool conservation = false;  // [start] - [end] = [Q_first] - [Q_last]
    bool fusion_identity = false;
    bool pass() const { return conservation && fusion_identity; }
};
K0ShadowReport certificate_k0_shadow(const EquivCertificate& cert);

enum class OmegaLabel { plus, minus };

/// Spin labeling: characteristic components receive the trivial-circle
/// object, the rest the essential one.
std::vector<OmegaLabel> spin_labeling(const std::vector<bool>& characteristic);

}  // namespace skein
