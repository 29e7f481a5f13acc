#include "skein/cob.hpp"

#include <numeric>

#include "skein/glue.hpp"
#include <sstream>
#include <stdexcept>

namespace skein {

AlphaPoly AlphaPoly::alpha_power(int k, long long c) {
    AlphaPoly p;
    p.add(k, c);
    return p;
}

long long AlphaPoly::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
}

void AlphaPoly::add(int k, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

AlphaPoly AlphaPoly::operator+(const AlphaPoly& o) const {
    AlphaPoly r = *this;
    r += o;
    return r;
}

AlphaPoly AlphaPoly::operator-() const {
    AlphaPoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

AlphaPoly AlphaPoly::operator*(const AlphaPoly& o) const {
    AlphaPoly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) r.add(ka + kb, ca * cb);
    return r;
}

std::string AlphaPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        if (k >= 1) os << "*a";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::string PlanarObj::str() const {
    std::ostringstream os;
    os << match.parens();
    for (int i = 0; i < circles; ++i) os << "O";
    return os.str();
}

CircleStructure circle_structure(const PlanarObj& src, const PlanarObj& tgt) {
    if (src.n() != tgt.n()) throw std::invalid_argument("circle_structure: strand mismatch");
    CircleStructure s;
    s.n = src.n();
    s.src_circles = src.circles;
    s.tgt_circles = tgt.circles;
    const int N = 2 * s.n;
    s.orbit_of_point.assign(N, -1);
    int next = 0;
    for (int p = 0; p < N; ++p) {
        if (s.orbit_of_point[p] >= 0) continue;
        int cur = p;
        while (s.orbit_of_point[cur] < 0) {
            s.orbit_of_point[cur] = next;
            int w = src.match.partner(cur);
            s.orbit_of_point[w] = next;
            cur = tgt.match.partner(w);
        }
        ++next;
    }
    s.arc_orbits = next;
    if (s.total() > 62) throw std::length_error("circle_structure: too many boundary circles");
    return s;
}

Cob Cob::elementary(const PlanarObj& src, const PlanarObj& tgt, long long coeff) {
    Cob f(src, tgt);
    f.add_term(0, AlphaPoly(coeff));
    return f;
}

Cob Cob::identity(const PlanarObj& obj) {
    Cob f(obj, obj);
    CircleStructure s = circle_structure(obj, obj);
    // object circles expand as dotted-source + dotted-target per circle
    std::vector<std::uint64_t> masks = {0};
    for (int i = 0; i < obj.circles; ++i) {
        std::vector<std::uint64_t> next;
        next.reserve(masks.size() * 2);
        for (auto m : masks) {
            next.push_back(m | (std::uint64_t(1) << s.src_circle_id(i)));
            next.push_back(m | (std::uint64_t(1) << s.tgt_circle_id(i)));
        }
        masks = std::move(next);
    }
    for (auto m : masks) f.add_term(m, AlphaPoly(1));
    return f;
}

Cob Cob::dotted_identity(const PlanarObj& obj, int point) {
    Cob id = identity(obj);
    CircleStructure s = circle_structure(obj, obj);
    std::uint64_t dot = std::uint64_t(1) << s.orbit_of_point.at(point);
    Cob f(obj, obj);
    for (const auto& [m, c] : id.terms()) {
        if (m & dot) {
            // second dot on the sheet becomes an alpha factor
            f.add_term(m & ~dot, c * AlphaPoly::alpha_power(1));
        } else {
            f.add_term(m | dot, c);
        }
    }
    return f;
}

void Cob::add_term(std::uint64_t dots, const AlphaPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(dots, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Cob& Cob::operator+=(const Cob& o) {
    if (!(src_ == o.src_) || !(tgt_ == o.tgt_)) {
        if (terms_.empty()) {
            *this = o;
            return *this;
        }
        if (!o.terms_.empty()) throw std::invalid_argument("Cob: object mismatch in sum");
        return *this;
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Cob Cob::operator+(const Cob& o) const {
    Cob r = *this;
    r += o;
    return r;
}

Cob Cob::operator-(const Cob& o) const { return *this + (-o); }

Cob Cob::operator-() const {
    Cob r(src_, tgt_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Cob Cob::operator*(long long c) const {
    Cob r(src_, tgt_);
    if (c == 0) return r;
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * AlphaPoly(c));
    return r;
}

Cob Cob::scaled(const AlphaPoly& c) const {
    Cob r(src_, tgt_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) r.add_term(m, x * c);
    return r;
}

bool Cob::operator==(const Cob& o) const {
    return src_ == o.src_ && tgt_ == o.tgt_ && terms_ == o.terms_;
}

bool Cob::is_unit_identity(long long& sign) const {
    if (!(src_ == tgt_)) return false;
    if (src_.circles != 0) return false;  // callers deloop first
    if (terms_.size() != 1) return false;
    const auto& [m, c] = *terms_.begin();
    if (m != 0) return false;
    if (c.terms().size() != 1 || c.coeff(0) == 0) return false;
    long long v = c.coeff(0);
    if (v != 1 && v != -1) return false;
    sign = v;
    return true;
}

Cob Cob::vertical_flip() const {
    PlanarObj fsrc = src_.vertical_flip(), ftgt = tgt_.vertical_flip();
    CircleStructure s_old = circle_structure(src_, tgt_);
    CircleStructure s_new = circle_structure(fsrc, ftgt);
    const int N = 2 * src_.n();
    // arc orbit o (labelled by representative point) maps to the orbit of
    // the flipped representative
    std::vector<int> orbit_map(s_old.total());
    std::vector<char> seen(s_old.arc_orbits, 0);
    for (int p = 0; p < N; ++p) {
        int o = s_old.orbit_of_point[p];
        if (!seen[o]) {
            seen[o] = 1;
            orbit_map[o] = s_new.orbit_of_point[N - 1 - p];
        }
    }
    for (int i = 0; i < src_.circles; ++i) orbit_map[s_old.src_circle_id(i)] = s_new.src_circle_id(i);
    for (int i = 0; i < tgt_.circles; ++i) orbit_map[s_old.tgt_circle_id(i)] = s_new.tgt_circle_id(i);
    Cob r(fsrc, ftgt);
    for (const auto& [m, c] : terms_) {
        std::uint64_t nm = 0;
        for (int b = 0; b < s_old.total(); ++b)
            if (m & (std::uint64_t(1) << b)) nm |= std::uint64_t(1) << orbit_map[b];
        r.add_term(nm, c);
    }
    return r;
}

std::string Cob::str() const {
    std::ostringstream os;
    os << src_.str() << " -> " << tgt_.str() << " : ";
    if (terms_.empty()) {
        os << "0";
        return os.str();
    }
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*[";
        for (int b = 0; b < 62; ++b)
            if (m & (std::uint64_t(1) << b)) os << "." << b;
        os << "]";
    }
    return os.str();
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Cob compose(const Cob& g, const Cob& f) {
    if (!(f.tgt() == g.src())) throw std::invalid_argument("compose: object mismatch");
    const PlanarObj& mid = f.tgt();
    const CircleStructure sf = circle_structure(f.src(), f.tgt());
    const CircleStructure sg = circle_structure(g.src(), g.tgt());
    const CircleStructure so = circle_structure(f.src(), g.tgt());
    const int nf = sf.total(), ng = sg.total();
    const int N = 2 * mid.n();

    UnionFind uf(nf + ng);
    for (int p = 0; p < N; ++p) {
        if (mid.match.partner(p) < p) continue;
        uf.unite(sf.orbit_of_point[p], nf + sg.orbit_of_point[p]);
    }
    for (int i = 0; i < mid.circles; ++i)
        uf.unite(sf.tgt_circle_id(i), nf + sg.src_circle_id(i));

    glue::Clusters cl;
    cl.nf = nf;
    cl.ng = ng;
    std::map<int, int> cluster_index;
    auto idx = [&](int root) {
        auto [it, inserted] = cluster_index.emplace(root, static_cast<int>(cluster_index.size()));
        return it->second;
    };
    cl.f_cluster.resize(nf);
    cl.g_cluster.resize(ng);
    for (int c = 0; c < nf; ++c) cl.f_cluster[c] = idx(uf.find(c));
    for (int c = 0; c < ng; ++c) cl.g_cluster[c] = idx(uf.find(nf + c));
    const int n_clusters = static_cast<int>(cluster_index.size());

    cl.chi.assign(n_clusters, 0);
    cl.outer.assign(n_clusters, {});
    for (int c = 0; c < nf; ++c) ++cl.chi[cl.f_cluster[c]];
    for (int c = 0; c < ng; ++c) ++cl.chi[cl.g_cluster[c]];
    for (int p = 0; p < N; ++p) {
        if (mid.match.partner(p) < p) continue;
        --cl.chi[cl.f_cluster[sf.orbit_of_point[p]]];  // middle arc interface
    }
    // middle circles have Euler characteristic zero: no chi adjustment

    {
        std::vector<char> seen_orbit(so.arc_orbits, 0);
        for (int p = 0; p < 2 * f.src().n(); ++p) {
            int o = so.orbit_of_point[p];
            if (seen_orbit[o]) continue;
            seen_orbit[o] = 1;
            cl.outer[cl.f_cluster[sf.orbit_of_point[p]]].push_back(o);
        }
        for (int i = 0; i < f.src().circles; ++i)
            cl.outer[cl.f_cluster[sf.src_circle_id(i)]].push_back(so.src_circle_id(i));
        for (int i = 0; i < g.tgt().circles; ++i)
            cl.outer[cl.g_cluster[sg.tgt_circle_id(i)]].push_back(so.tgt_circle_id(i));
    }
    cl.finish();

    Cob result(f.src(), g.tgt());
    glue::evaluate_terms(cl, f.terms(), &g.terms(), result);
    return result;
}

Degree degree(const Cob& f, int q_src, int q_tgt) {
    if (f.is_zero()) throw std::invalid_argument("degree: zero morphism");
    const CircleStructure s = circle_structure(f.src(), f.tgt());
    Degree out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        int dots = 0;
        for (int b = 0; b < s.total(); ++b)
            if (m & (std::uint64_t(1) << b)) ++dots;
        if (c.terms().size() != 1)
            throw std::invalid_argument("degree: mixed alpha powers in one term");
        int apow = c.terms().begin()->first;
        int dt = s.total() - s.n - 2 * dots - 4 * apow;
        if (first) {
            out.deg_t = dt;
            first = false;
        } else if (out.deg_t != dt) {
            throw std::invalid_argument("degree: mixed-degree terms");
        }
    }
    out.deg_q = q_tgt - q_src;
    return out;
}

DeloopMaps deloop(const PlanarObj& obj) {
    if (obj.circles < 1) throw std::invalid_argument("deloop: no trivial circle present");
    DeloopMaps d;
    d.reduced = {obj.match, obj.circles - 1};
    const int last = obj.circles - 1;

    auto make_fwd = [&](bool dotted) {
        Cob f(obj, d.reduced);
        CircleStructure s = circle_structure(obj, d.reduced);
        std::uint64_t cap = std::uint64_t(1) << s.src_circle_id(last);
        std::vector<std::uint64_t> masks = {dotted ? cap : 0u};
        for (int i = 0; i < last; ++i) {
            std::vector<std::uint64_t> next;
            for (auto m : masks) {
                next.push_back(m | (std::uint64_t(1) << s.src_circle_id(i)));
                next.push_back(m | (std::uint64_t(1) << s.tgt_circle_id(i)));
            }
            masks = std::move(next);
        }
        for (auto m : masks) f.add_term(m, AlphaPoly(1));
        return f;
    };
    auto make_bwd = [&](bool dotted) {
        Cob f(d.reduced, obj);
        CircleStructure s = circle_structure(d.reduced, obj);
        std::uint64_t cup = std::uint64_t(1) << s.tgt_circle_id(last);
        std::vector<std::uint64_t> masks = {dotted ? cup : 0u};
        for (int i = 0; i < last; ++i) {
            std::vector<std::uint64_t> next;
            for (auto m : masks) {
                next.push_back(m | (std::uint64_t(1) << s.src_circle_id(i)));
                next.push_back(m | (std::uint64_t(1) << s.tgt_circle_id(i)));
            }
            masks = std::move(next);
        }
        for (auto m : masks) f.add_term(m, AlphaPoly(1));
        return f;
    };

    d.fwd_low = make_fwd(false);   // plain cap extracts the dotted generator
    d.fwd_high = make_fwd(true);   // dotted cap extracts the undotted one
    d.bwd_low = make_bwd(true);    // dotted cup inserts the dotted generator
    d.bwd_high = make_bwd(false);  // plain cup
    return d;
}

std::map<Matching, LaurentPoly> k0_class(const PlanarObj& obj, int qshift) {
    std::map<Matching, LaurentPoly> out;
    LaurentPoly v = LaurentPoly::monomial(qshift);
    for (int i = 0; i < obj.circles; ++i) v = v * qint(2);
    out[obj.match] = v;
    return out;
}

bool K0Report::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

K0Report k0_check(int n) {
    K0Report rep;
    rep.n = n;
    auto add_classes = [](std::map<Matching, LaurentPoly>& acc,
                          const std::map<Matching, LaurentPoly>& x) {
        for (const auto& [m, v] : x) {
            acc[m] += v;
            if (acc[m].is_zero()) acc.erase(m);
        }
    };
    for (const auto& m : Matching::all(n)) {
        for (int c = 1; c <= 2; ++c) {
            PlanarObj obj{m, c};
            DeloopMaps d = deloop(obj);
            std::map<Matching, LaurentPoly> lhs = k0_class(obj, 0);
            std::map<Matching, LaurentPoly> rhs = k0_class(d.reduced, -1);
            add_classes(rhs, k0_class(d.reduced, +1));
            rep.checks.push_back({"deloop preserves the class of " + obj.str(), lhs == rhs});
        }
        // a free circle is worth [2] copies of the bare matching
        PlanarObj with_circle{m, 1};
        std::map<Matching, LaurentPoly> lhs = k0_class(with_circle, 0);
        std::map<Matching, LaurentPoly> two;
        two[m] = qint(2);
        rep.checks.push_back({"circle class = [2] * class of " + m.parens(), lhs == two});
    }
    return rep;
}

}  // namespace skein
