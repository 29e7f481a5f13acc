#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skein/laurent.hpp"
#include "skein/matching.hpp"

namespace skein {

/// Coefficient ring Z[alpha] of the dotted theory; alpha carries q-degree -4.
class AlphaPoly {
public:
    AlphaPoly() = default;
    AlphaPoly(long long c) { add(0, c); }
    static AlphaPoly alpha_power(int k, long long c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, long long>& terms() const { return terms_; }
    long long coeff(int k) const;
    void add(int k, long long c);

    AlphaPoly& operator+=(const AlphaPoly& o);
    AlphaPoly operator+(const AlphaPoly& o) const;
    AlphaPoly operator-() const;
    AlphaPoly operator*(const AlphaPoly& o) const;
    bool operator==(const AlphaPoly& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::map<int, long long> terms_;  // alpha power -> coefficient
};

/// Object of the dotted cobordism category over the disk: a crossingless
/// matching together with a number of anonymous trivial circles.
struct PlanarObj {
    Matching match;
    int circles = 0;

    int n() const { return match.n(); }
    bool operator==(const PlanarObj& o) const { return match == o.match && circles == o.circles; }
    bool operator!=(const PlanarObj& o) const { return !(*this == o); }
    bool operator<(const PlanarObj& o) const {
        if (!(match == o.match)) return match < o.match;
        return circles < o.circles;
    }
    PlanarObj vertical_flip() const { return {match.vertical_flip(), circles}; }
    std::string str() const;
};

/// Boundary-circle bookkeeping for a Hom pair. Circles are numbered:
/// first the arc orbits (sorted by minimal point), then the source
/// object's circles, then the target's.
struct CircleStructure {
    int n = 0;
    int arc_orbits = 0;
    int src_circles = 0, tgt_circles = 0;
    std::vector<int> orbit_of_point;

    int total() const { return arc_orbits + src_circles + tgt_circles; }
    int src_circle_id(int i) const { return arc_orbits + i; }
    int tgt_circle_id(int i) const { return arc_orbits + src_circles + i; }
};

CircleStructure circle_structure(const PlanarObj& src, const PlanarObj& tgt);

/// Morphism in normal form: every component is a disk with at most one dot,
/// so a term is just the set of dotted boundary circles. Closed components
/// are evaluated away and genus is rewritten (handle = 2 dots, two dots =
/// alpha) during composition.
class Cob {
public:
    Cob() = default;
    Cob(PlanarObj src, PlanarObj tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {}

    /// Single undotted term: every boundary circle bounds a plain disk.
    /// This is the saddle/cup/cap/disk cobordism appropriate to the pair.
    static Cob elementary(const PlanarObj& src, const PlanarObj& tgt, long long coeff = 1);
    /// Identity cobordism; object circles expand by neck cutting.
    static Cob identity(const PlanarObj& obj);
    /// Identity with one dot on the sheet carrying the given point.
    static Cob dotted_identity(const PlanarObj& obj, int point);

    const PlanarObj& src() const { return src_; }
    const PlanarObj& tgt() const { return tgt_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::uint64_t, AlphaPoly>& terms() const { return terms_; }

    void add_term(std::uint64_t dots, const AlphaPoly& c);
    Cob& operator+=(const Cob& o);
    Cob operator+(const Cob& o) const;
    Cob operator-(const Cob& o) const;
    Cob operator-() const;
    Cob operator*(long long c) const;
    Cob scaled(const AlphaPoly& c) const;
    bool operator==(const Cob& o) const;
    bool operator!=(const Cob& o) const { return !(*this == o); }

    /// True when this is c times the identity cobordism with |c| = 1.
    bool is_unit_identity(long long& sign) const;

    Cob vertical_flip() const;

    std::string str() const;

private:
    PlanarObj src_, tgt_;
    std::map<std::uint64_t, AlphaPoly> terms_;
};

/// g after f; evaluates closed components, rewrites genus and dot pairs,
/// and compresses every component back to dotted disks.
Cob compose(const Cob& g, const Cob& f);

struct Degree {
    int deg_t = 0;
    int deg_q = 0;
    int total() const { return deg_t + deg_q; }
};

/// Topological degree of a single-term morphism: chi - n - 2 dots - 4 per
/// alpha power. Throws on mixed-term input.
Degree degree(const Cob& f, int q_src = 0, int q_tgt = 0);

/// Delooping data for one circle of an object: the circle is traded for
/// q^{-1} and q^{+1} copies of the object without it.
struct DeloopMaps {
    PlanarObj reduced;
    // forward: object -> reduced; the q^{-1} summand extracts the dotted
    // generator (plain cap), the q^{+1} summand the undotted one
    Cob fwd_low, fwd_high;
    // backward: reduced -> object
    Cob bwd_low, bwd_high;
};

/// Deloops the last circle of the object; requires obj.circles >= 1.
DeloopMaps deloop(const PlanarObj& obj);

/// Formal Grothendieck class of an object: q^{shift} [2]^{circles} [match].
/// Used by the delooping rank check.
std::map<Matching, LaurentPoly> k0_class(const PlanarObj& obj, int qshift);

struct K0Check {
    std::string name;
    bool pass;
};

struct K0Report {
    int n;
    std::vector<K0Check> checks;
    bool pass() const;
};

/// Checks that delooping preserves formal classes and that a circle is
/// worth [2] empty classes, over all matchings at this strand count.
K0Report k0_check(int n);

}  // namespace skein
