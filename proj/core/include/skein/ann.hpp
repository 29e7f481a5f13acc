#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skein/cob.hpp"
#include "skein/complex.hpp"

namespace skein {

/// Object of the dotted cobordism category over the annulus with two marked
/// points on the outer boundary: at most one boundary arc, carrying the
/// signed number of times it passes around the core, plus core-parallel
/// (essential) and nullhomotopic (trivial) circles.
struct AnnObj {
    int arcs = 0;       // 0 or 1
    int arc_w = 0;      // winding of the arc; sign flips under reflection
    int essential = 0;
    int trivial = 0;

    bool operator==(const AnnObj& o) const {
        return arcs == o.arcs && arc_w == o.arc_w && essential == o.essential && trivial == o.trivial;
    }
    bool operator!=(const AnnObj& o) const { return !(*this == o); }
    bool operator<(const AnnObj& o) const;
    std::string str() const;
};

/// Boundary-circle layout of an annular Hom pair: the arc circle (when
/// present), then source essential, source trivial, target essential,
/// target trivial circles.
struct AnnCircles {
    int arcs = 0;
    int src_ess = 0, src_triv = 0, tgt_ess = 0, tgt_triv = 0;
    int total() const { return arcs + src_ess + src_triv + tgt_ess + tgt_triv; }
    int arc_id() const { return 0; }
    int src_ess_id(int i) const { return arcs + i; }
    int src_triv_id(int i) const { return arcs + src_ess + i; }
    int tgt_ess_id(int i) const { return arcs + src_ess + src_triv + i; }
    int tgt_triv_id(int i) const { return arcs + src_ess + src_triv + tgt_ess + i; }
    bool is_essential(int id, int arc_winding_difference) const;
};

AnnCircles ann_circles(const AnnObj& src, const AnnObj& tgt);

/// One connected component: the sorted boundary circles it carries and its
/// dot count (0 or 1 after normalization).
struct AnnComponent {
    std::vector<int> circles;
    int dots = 0;
    bool operator==(const AnnComponent& o) const { return circles == o.circles && dots == o.dots; }
    bool operator<(const AnnComponent& o) const {
        return circles != o.circles ? circles < o.circles : dots < o.dots;
    }
};

/// A term is a full partition of the boundary circles into components.
/// Normal form: winding-zero circles are cut off as singleton disks; only
/// components carrying essential circles stay grouped.
struct AnnTerm {
    std::vector<AnnComponent> comps;  // sorted
    bool operator==(const AnnTerm& o) const { return comps == o.comps; }
    bool operator<(const AnnTerm& o) const { return comps < o.comps; }
};

class AnnCob {
public:
    AnnCob() = default;
    AnnCob(AnnObj src, AnnObj tgt) : src_(src), tgt_(tgt) {}

    static AnnCob identity(const AnnObj& o);

    const AnnObj& src() const { return src_; }
    const AnnObj& tgt() const { return tgt_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<AnnTerm, AlphaPoly>& terms() const { return terms_; }

    void add_term(const AnnTerm& t, const AlphaPoly& c);
    AnnCob& operator+=(const AnnCob& o);
    AnnCob operator+(const AnnCob& o) const;
    AnnCob operator-() const;
    AnnCob operator*(long long c) const;
    bool operator==(const AnnCob& o) const;

    bool is_unit_identity(long long& sign) const;
    std::string str() const;

private:
    AnnObj src_, tgt_;
    std::map<AnnTerm, AlphaPoly> terms_;
};

AnnCob ann_compose(const AnnCob& g, const AnnCob& f);

/// Cluster data for one glued term: Euler characteristics, dot counts and
/// the essential/trivial outer circles per component. Shared by composition
/// and the closure transports.
struct AnnClusterData {
    std::vector<int> chi, dots;
    std::vector<std::vector<int>> out_ess, out_triv;
};

/// Evaluates the clusters by the local relations and accumulates the
/// resulting terms, scaled by coeff, into out.
void ann_fold_clusters(const AnnClusterData& cd, const AlphaPoly& coeff, AnnCob& out);

/// Topological degree (chi - arcs - 2 dots - 4 alpha); throws on
/// mixed-degree terms.
Degree ann_degree(const AnnCob& f, int q_src = 0, int q_tgt = 0);

struct AnnDeloopMaps {
    AnnObj reduced;
    AnnCob fwd_low, fwd_high, bwd_low, bwd_high;
};

/// Deloops the last trivial circle; essential circles are incompressible
/// and never delooped.
AnnDeloopMaps ann_deloop(const AnnObj& obj);

/// Category traits for the generic chain machinery.
struct AnnCat {
    using Obj = AnnObj;
    using Mor = AnnCob;
    static AnnCob compose(const AnnCob& g, const AnnCob& f) { return ann_compose(g, f); }
    static AnnCob identity(const AnnObj& o) { return AnnCob::identity(o); }
    static bool is_unit_identity(const AnnCob& m, long long& sign) { return m.is_unit_identity(sign); }
    static bool has_loop(const AnnObj& o) { return o.trivial > 0; }
    struct DL {
        AnnObj reduced;
        AnnCob fwd_low, fwd_high, bwd_low, bwd_high;
    };
    static DL deloop(const AnnObj& o) {
        AnnDeloopMaps d = ann_deloop(o);
        return {d.reduced, d.fwd_low, d.fwd_high, d.bwd_low, d.bwd_high};
    }
    static bool degree_zero(const AnnCob& m, int qsrc, int qtgt) {
        try {
            return ann_degree(m, qsrc, qtgt).total() == 0;
        } catch (const std::invalid_argument&) {
            return false;
        }
    }
    static std::string obj_str(const AnnObj& o) { return o.str(); }
};

using AnnWindow = Window<AnnCat>;
using AnnSummand = Summand<AnnObj>;

}  // namespace skein
