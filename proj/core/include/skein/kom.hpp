#pragma once

#include <map>

#include "skein/cob.hpp"
#include "skein/complex.hpp"
#include "skein/series.hpp"
#include "skein/tl.hpp"

namespace skein {

/// Category traits of the dotted cobordism category over the disk, for the
/// generic chain-complex machinery.
struct DiskCat {
    using Obj = PlanarObj;
    using Mor = Cob;

    static Cob compose(const Cob& g, const Cob& f) { return skein::compose(g, f); }
    static Cob identity(const PlanarObj& o) { return Cob::identity(o); }
    static bool is_unit_identity(const Cob& m, long long& sign) { return m.is_unit_identity(sign); }
    static bool has_loop(const PlanarObj& o) { return o.circles > 0; }

    struct DL {
        PlanarObj reduced;
        Cob fwd_low, fwd_high, bwd_low, bwd_high;
    };
    static DL deloop(const PlanarObj& o) {
        DeloopMaps d = skein::deloop(o);
        return {d.reduced, d.fwd_low, d.fwd_high, d.bwd_low, d.bwd_high};
    }
    static bool degree_zero(const Cob& m, int qsrc, int qtgt) {
        try {
            return degree(m, qsrc, qtgt).total() == 0;
        } catch (const std::invalid_argument&) {
            return false;
        }
    }
    static std::string obj_str(const PlanarObj& o) { return o.str(); }
};

using DiskWindow = Window<DiskCat>;
using DiskSummand = Summand<PlanarObj>;

/// Eventually periodic chain complex: levels 0..stored-1 are explicit and
/// for i >= stored the data repeats with period r and q-shift step per
/// period. Stored data covers at least two periods past the start so the
/// wrap is materializable.
class PeriodicComplex {
public:
    static PeriodicComplex bounded(DiskWindow w);
    static PeriodicComplex periodic(DiskWindow stored, int start, int period, int qstep);

    bool is_periodic() const { return period_ > 0; }
    int tail_start() const { return start_; }
    int tail_period() const { return period_; }
    int tail_qstep() const { return qstep_; }
    const DiskWindow& stored() const { return window_; }

    DiskWindow materialize(int hmax) const;

    std::vector<DiskSummand> level(int i) const;
    MorMatrix<Cob> diff(int i) const;

private:
    DiskWindow window_;
    int start_ = 0, period_ = 0, qstep_ = 0;
};

struct ComplexReport {
    ValidationReport base;
    bool identity_once = true;
    bool positively_graded = true;
    bool pass() const { return base.pass() && identity_once && positively_graded; }
    std::string str() const;
};

/// d^2 = 0 across head, seam and one full periodic wrap; degree-zero
/// differentials; the identity diagram exactly once, in degree zero; all
/// q-shifts non-negative.
ComplexReport validate(const PeriodicComplex& c);

/// The universal projector complexes transcribed as eventually periodic
/// data: P2 has period 2 with q-step 4, P3 period 4 with q-step 6.
PeriodicComplex P2();
PeriodicComplex P3();

/// A bounded one-object complex in degree zero.
PeriodicComplex single_object(const PlanarObj& obj, int q = 0);

/// Horizontal (planar) composition a below b, truncated at hmax levels.
/// Periodic factors must have positive q-step per period.
DiskWindow tensor_window(const PeriodicComplex& a, const PeriodicComplex& b, int hmax);

/// In-place simplification: delooping plus Gaussian elimination.
inline void simplify(DiskWindow& w) { simplify_window<DiskCat>(w); }

/// Graded Euler characteristic as truncated-series coefficients per
/// matching, reliable below q^qmax.
std::map<Matching, TruncSeries> euler_char(const PeriodicComplex& c, int qmax);

/// Series expansion of a Temperley-Lieb element for decategorification
/// comparisons.
std::map<Matching, TruncSeries> tl_series(const TLElement& x, int qmax);

/// Full Markov closure of a complex over TL_n into the plane: objects
/// become collections of trivial circles, morphisms are transported by
/// gluing annular strips along every closed strand.
DiskWindow trace_window(const PeriodicComplex& c, int hmax);

struct GradedPiece {
    int hdeg = 0;
    int q = 0;
    bool operator==(const GradedPiece& o) const { return hdeg == o.hdeg && q == o.q; }
    bool operator<(const GradedPiece& o) const {
        return hdeg != o.hdeg ? hdeg < o.hdeg : q < o.q;
    }
};

struct TraceReport {
    std::vector<GradedPiece> pieces;  // surviving free summands after reduction
    bool fully_delooped = true;       // every object reduced to the empty diagram
    std::string str() const;
};

/// Closes, deloops and reduces the complex, reporting the surviving graded
/// free summands within the window.
TraceReport trace_complex(const PeriodicComplex& c, int hmax);

}  // namespace skein
