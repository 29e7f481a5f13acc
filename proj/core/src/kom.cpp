#include "skein/kom.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "skein/glue.hpp"

namespace skein {

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

// Stacking data: a below b, interface loops ordered by minimal a-point.
struct StackedObjInfo {
    PlanarObj obj;
    std::vector<int> loop_rep_a;  // representative a-point per interface loop
};

StackedObjInfo stack_objects(const PlanarObj& a, const PlanarObj& b) {
    if (a.n() != b.n()) throw std::invalid_argument("stack_objects: strand mismatch");
    const int n = a.n();
    const int N = 2 * n;
    StackedObjInfo out;
    // nodes: a-points 0..N-1, b-points N..2N-1
    std::vector<int> result_inv(N, -1);
    std::vector<char> seen(2 * N, 0);
    auto interface_cross = [&](int node) {
        if (node < N) return N + (2 * n - 1 - node);  // a top position j -> b point j
        return 2 * n - 1 - (node - N);                // b bottom point j -> a point 2n-1-j
    };
    auto is_external = [&](int node) { return node < N ? node < n : node >= N + n; };
    auto follow = [&](int node) {
        if (node < N) return a.match.partner(node);
        return N + b.match.partner(node - N);
    };
    for (int p = 0; p < 2 * N; ++p) {
        if (seen[p] || !is_external(p)) continue;
        seen[p] = 1;
        int walk = follow(p);
        while (true) {
            seen[walk] = 1;
            if (is_external(walk)) break;
            walk = interface_cross(walk);
            seen[walk] = 1;
            walk = follow(walk);
        }
        int x = p < N ? p : p - N;
        int y = walk < N ? walk : walk - N;
        result_inv[x] = y;
        result_inv[y] = x;
    }
    for (int p = 0; p < 2 * N; ++p) {
        if (seen[p]) continue;
        // interface loop
        int min_a = -1;
        int cur = p;
        while (!seen[cur]) {
            seen[cur] = 1;
            if (cur < N && (min_a < 0 || cur < min_a)) min_a = cur;
            int w = follow(cur);
            seen[w] = 1;
            if (w < N && (w < min_a || min_a < 0)) min_a = w;
            cur = interface_cross(w);
        }
        out.loop_rep_a.push_back(min_a);
    }
    std::sort(out.loop_rep_a.begin(), out.loop_rep_a.end());
    out.obj.match = Matching(n, std::move(result_inv));
    out.obj.circles = a.circles + b.circles + static_cast<int>(out.loop_rep_a.size());
    return out;
}

// Horizontal stacking of cobordisms: f on the bottom diagram, g on top.
Cob stack_cob(const Cob& f, const Cob& g) {
    const int n = f.src().n();
    const int N = 2 * n;
    const CircleStructure sf = circle_structure(f.src(), f.tgt());
    const CircleStructure sg = circle_structure(g.src(), g.tgt());
    const int nf = sf.total(), ng = sg.total();

    StackedObjInfo S = stack_objects(f.src(), g.src());
    StackedObjInfo T = stack_objects(f.tgt(), g.tgt());

    UnionFind uf(nf + ng);
    for (int j = 0; j < n; ++j)
        uf.unite(sf.orbit_of_point[2 * n - 1 - j], nf + sg.orbit_of_point[j]);

    glue::Clusters cl;
    cl.nf = nf;
    cl.ng = ng;
    std::map<int, int> cluster_index;
    auto idx = [&](int root) {
        auto [it, ins] = cluster_index.emplace(root, static_cast<int>(cluster_index.size()));
        return it->second;
    };
    cl.f_cluster.resize(nf);
    cl.g_cluster.resize(ng);
    for (int c = 0; c < nf; ++c) cl.f_cluster[c] = idx(uf.find(c));
    for (int c = 0; c < ng; ++c) cl.g_cluster[c] = idx(uf.find(nf + c));
    cl.chi.assign(cluster_index.size(), 0);
    cl.outer.assign(cluster_index.size(), {});
    for (int c = 0; c < nf; ++c) ++cl.chi[cl.f_cluster[c]];
    for (int c = 0; c < ng; ++c) ++cl.chi[cl.g_cluster[c]];
    for (int j = 0; j < n; ++j) --cl.chi[cl.f_cluster[sf.orbit_of_point[2 * n - 1 - j]]];

    const CircleStructure so = circle_structure(S.obj, T.obj);
    {
        std::vector<char> seen_orbit(std::max(so.arc_orbits, 1), 0);
        for (int p = 0; p < N; ++p) {
            int o = so.orbit_of_point[p];
            if (seen_orbit[o]) continue;
            seen_orbit[o] = 1;
            int cluster = p < n ? cl.f_cluster[sf.orbit_of_point[p]] : cl.g_cluster[sg.orbit_of_point[p]];
            cl.outer[cluster].push_back(o);
        }
        // source circles: a's, then b's, then interface loops
        int id = so.arc_orbits;
        for (int i = 0; i < f.src().circles; ++i)
            cl.outer[cl.f_cluster[sf.src_circle_id(i)]].push_back(id++);
        for (int i = 0; i < g.src().circles; ++i)
            cl.outer[cl.g_cluster[sg.src_circle_id(i)]].push_back(id++);
        for (int rep : S.loop_rep_a) cl.outer[cl.f_cluster[sf.orbit_of_point[rep]]].push_back(id++);
        for (int i = 0; i < f.tgt().circles; ++i)
            cl.outer[cl.f_cluster[sf.tgt_circle_id(i)]].push_back(id++);
        for (int i = 0; i < g.tgt().circles; ++i)
            cl.outer[cl.g_cluster[sg.tgt_circle_id(i)]].push_back(id++);
        for (int rep : T.loop_rep_a) cl.outer[cl.f_cluster[sf.orbit_of_point[rep]]].push_back(id++);
    }
    cl.finish();

    Cob out(S.obj, T.obj);
    glue::evaluate_terms(cl, f.terms(), &g.terms(), out);
    return out;
}

}  // namespace

PeriodicComplex PeriodicComplex::bounded(DiskWindow w) {
    PeriodicComplex c;
    c.window_ = std::move(w);
    return c;
}

PeriodicComplex PeriodicComplex::periodic(DiskWindow stored, int start, int period, int qstep) {
    if (period <= 0) throw std::invalid_argument("PeriodicComplex: period must be positive");
    if (static_cast<int>(stored.diffs.size()) < start + period)
        throw std::invalid_argument("PeriodicComplex: stored window shorter than one period");
    PeriodicComplex c;
    c.window_ = std::move(stored);
    c.start_ = start;
    c.period_ = period;
    c.qstep_ = qstep;
    return c;
}

std::vector<DiskSummand> PeriodicComplex::level(int i) const {
    if (i < static_cast<int>(window_.levels.size())) return window_.levels[i];
    if (!is_periodic()) return {};
    int j = i, k = 0;
    while (j >= static_cast<int>(window_.levels.size())) {
        j -= period_;
        ++k;
    }
    std::vector<DiskSummand> out = window_.levels[j];
    for (auto& s : out) s.q += k * qstep_;
    return out;
}

MorMatrix<Cob> PeriodicComplex::diff(int i) const {
    if (i < static_cast<int>(window_.diffs.size())) return window_.diffs[i];
    if (!is_periodic()) return {};
    int j = i;
    while (j >= static_cast<int>(window_.diffs.size())) j -= period_;
    return window_.diffs[j];
}

DiskWindow PeriodicComplex::materialize(int hmax) const {
    DiskWindow w;
    int top = is_periodic() ? hmax : std::min<int>(hmax, window_.top_level());
    for (int i = 0; i <= top; ++i) w.levels.push_back(level(i));
    for (int i = 0; i < top; ++i) w.diffs.push_back(diff(i));
    return w;
}

std::string ComplexReport::str() const {
    std::ostringstream os;
    os << base.str();
    if (!identity_once) os << "; identity summand count wrong";
    if (!positively_graded) os << "; negative q-shift present";
    return os.str();
}

ComplexReport validate(const PeriodicComplex& c) {
    ComplexReport rep;
    int window = c.is_periodic() ? c.tail_start() + 2 * c.tail_period() + 2
                                 : c.stored().top_level();
    DiskWindow w = c.materialize(window);
    rep.base = validate_window<DiskCat>(w);

    int id_count = 0;
    bool id_outside_zero = false;
    for (size_t i = 0; i < w.levels.size(); ++i) {
        for (const auto& s : w.levels[i]) {
            if (s.q < 0) rep.positively_graded = false;
            if (s.obj.circles == 0 && s.obj.match == Matching::identity(s.obj.n())) {
                ++id_count;
                if (i != 0) id_outside_zero = true;
            }
        }
    }
    rep.identity_once = (id_count == 1) && !id_outside_zero;
    return rep;
}

PeriodicComplex P2() {
    PlanarObj id2{Matching::identity(2), 0};
    PlanarObj e1{Matching::turnback(2, 1), 0};
    Cob saddle = Cob::elementary(id2, e1);
    Cob tops = Cob::dotted_identity(e1, 2);  // dot on the cap sheet
    Cob bots = Cob::dotted_identity(e1, 0);  // dot on the cup sheet

    DiskWindow w;
    w.levels.push_back({{id2, 0}});
    for (int i = 1; i <= 4; ++i) w.levels.push_back({{e1, 2 * i - 1}});
    w.diffs.resize(4);
    w.diffs[0].set(0, 0, saddle);
    w.diffs[1].set(0, 0, tops - bots);
    w.diffs[2].set(0, 0, tops + bots);
    w.diffs[3].set(0, 0, tops - bots);
    return PeriodicComplex::periodic(std::move(w), 1, 2, 4);
}

PeriodicComplex P3() {
    auto mk = [](std::vector<int> inv) { return PlanarObj{Matching(3, std::move(inv)), 0}; };
    PlanarObj id3{Matching::identity(3), 0};
    PlanarObj e1{Matching::turnback(3, 1), 0};    // (01)(23)(45)
    PlanarObj e2{Matching::turnback(3, 2), 0};    // (12)(34)(05)
    PlanarObj e12 = mk({1, 0, 5, 4, 3, 2});       // (01)(34)(25)
    PlanarObj e21 = mk({3, 2, 1, 0, 5, 4});       // (12)(45)(03)

    // saddles and connected disk cobordisms are all single undotted terms
    auto elem = [](const PlanarObj& a, const PlanarObj& b, long long c) {
        return Cob::elementary(a, b, c);
    };
    // dotted identities: on the two-turnback diagrams the dots sit on the
    // cap and cup sheets; on the one-turnback diagrams one dot rides the
    // through strand, which is what makes the two annular closures of the
    // tail agree summand-for-summand
    Cob c_e12 = Cob::dotted_identity(e12, 3) + Cob::dotted_identity(e12, 0);
    Cob c_e21 = Cob::dotted_identity(e21, 4) + Cob::dotted_identity(e21, 1);
    Cob e_e1 = Cob::dotted_identity(e1, 2) + Cob::dotted_identity(e1, 0);
    Cob e_e2 = Cob::dotted_identity(e2, 0) + Cob::dotted_identity(e2, 1);

    DiskWindow w;
    w.levels.push_back({{id3, 0}});
    auto level_ee = [&](int q) { return std::vector<DiskSummand>{{e1, q}, {e2, q}}; };
    auto level_EE = [&](int q) { return std::vector<DiskSummand>{{e12, q}, {e21, q}}; };
    w.levels.push_back(level_ee(1));
    w.levels.push_back(level_EE(2));
    w.levels.push_back(level_EE(4));
    w.levels.push_back(level_ee(5));
    w.levels.push_back(level_ee(7));
    w.levels.push_back(level_EE(8));
    w.levels.push_back(level_EE(10));
    w.levels.push_back(level_ee(11));

    w.diffs.resize(8);
    // A: the saddle column out of the identity
    w.diffs[0].set(0, 0, elem(id3, e1, -1));
    w.diffs[0].set(1, 0, elem(id3, e2, +1));
    auto fill_B = [&](MorMatrix<Cob>& m) {
        m.set(0, 0, elem(e1, e12, +1));
        m.set(0, 1, elem(e2, e12, +1));
        m.set(1, 0, elem(e1, e21, -1));
        m.set(1, 1, elem(e2, e21, -1));
    };
    auto fill_C = [&](MorMatrix<Cob>& m) {
        m.set(0, 0, c_e12);
        m.set(0, 1, elem(e21, e12, +1));
        m.set(1, 0, elem(e12, e21, +1));
        m.set(1, 1, c_e21);
    };
    auto fill_D = [&](MorMatrix<Cob>& m) {
        m.set(0, 0, elem(e12, e1, +1));
        m.set(0, 1, elem(e21, e1, -1));
        m.set(1, 0, elem(e12, e2, +1));
        m.set(1, 1, elem(e21, e2, -1));
    };
    auto fill_E = [&](MorMatrix<Cob>& m) {
        m.set(0, 0, e_e1);
        m.set(0, 1, elem(e2, e1, -1));
        m.set(1, 0, elem(e1, e2, -1));
        m.set(1, 1, e_e2);
    };
    fill_B(w.diffs[1]);
    fill_C(w.diffs[2]);
    fill_D(w.diffs[3]);
    fill_E(w.diffs[4]);
    fill_B(w.diffs[5]);
    fill_C(w.diffs[6]);
    fill_D(w.diffs[7]);
    return PeriodicComplex::periodic(std::move(w), 1, 4, 6);
}

PeriodicComplex single_object(const PlanarObj& obj, int q) {
    DiskWindow w;
    w.levels.push_back({{obj, q}});
    return PeriodicComplex::bounded(std::move(w));
}

DiskWindow tensor_window(const PeriodicComplex& a, const PeriodicComplex& b, int hmax) {
    if ((a.is_periodic() && a.tail_qstep() <= 0) || (b.is_periodic() && b.tail_qstep() <= 0))
        throw std::invalid_argument("tensor_window: tail-nonpositive factor");
    DiskWindow wa = a.materialize(hmax);
    DiskWindow wb = b.materialize(hmax);
    const int ta = wa.top_level(), tb = wb.top_level();

    DiskWindow w;
    // index maps per level: (i, s, t) -> column
    std::vector<std::vector<std::tuple<int, int, int>>> tags;
    for (int lvl = 0; lvl <= std::min(hmax, ta + tb); ++lvl) {
        std::vector<DiskSummand> level;
        std::vector<std::tuple<int, int, int>> tag;
        for (int i = std::max(0, lvl - tb); i <= std::min(lvl, ta); ++i) {
            int j = lvl - i;
            for (size_t s = 0; s < wa.levels[i].size(); ++s) {
                for (size_t t = 0; t < wb.levels[j].size(); ++t) {
                    StackedObjInfo so = stack_objects(wa.levels[i][s].obj, wb.levels[j][t].obj);
                    level.push_back({so.obj, wa.levels[i][s].q + wb.levels[j][t].q});
                    tag.push_back({i, static_cast<int>(s), static_cast<int>(t)});
                }
            }
        }
        w.levels.push_back(std::move(level));
        tags.push_back(std::move(tag));
    }
    auto index_of = [&](int lvl, int i, int s, int t) {
        const auto& tag = tags[lvl];
        for (size_t k = 0; k < tag.size(); ++k)
            if (tag[k] == std::make_tuple(i, s, t)) return static_cast<int>(k);
        return -1;
    };

    for (int lvl = 0; lvl + 1 < static_cast<int>(w.levels.size()); ++lvl) {
        MorMatrix<Cob> d;
        for (size_t col = 0; col < tags[lvl].size(); ++col) {
            auto [i, s, t] = tags[lvl][col];
            int j = lvl - i;
            const PlanarObj& aobj = wa.levels[i][s].obj;
            const PlanarObj& bobj = wb.levels[j][t].obj;
            if (i + 1 <= ta) {
                for (const auto& [rc, m] : wa.diffs[i].entries) {
                    if (rc.second != s) continue;
                    int row = index_of(lvl + 1, i + 1, rc.first, t);
                    if (row >= 0) d.add(row, static_cast<int>(col), stack_cob(m, Cob::identity(bobj)));
                }
            }
            if (j + 1 <= tb) {
                for (const auto& [rc, m] : wb.diffs[j].entries) {
                    if (rc.second != t) continue;
                    int row = index_of(lvl + 1, i, s, rc.first);
                    if (row >= 0) {
                        Cob piece = stack_cob(Cob::identity(aobj), m);
                        d.add(row, static_cast<int>(col), (i % 2 == 0) ? piece : -piece);
                    }
                }
            }
        }
        w.diffs.push_back(std::move(d));
    }
    return w;
}

std::map<Matching, TruncSeries> euler_char(const PeriodicComplex& c, int qmax) {
    if (c.is_periodic() && c.tail_qstep() <= 0)
        throw std::invalid_argument("euler_char: tail-nonpositive complex");
    std::map<Matching, LaurentPoly> acc;
    int i = 0;
    while (true) {
        std::vector<DiskSummand> lvl = c.level(i);
        if (lvl.empty() && (!c.is_periodic() || i > c.stored().top_level())) break;
        bool all_beyond = !lvl.empty();
        for (const auto& s : lvl) {
            LaurentPoly contrib = LaurentPoly::monomial(s.q, i % 2 == 0 ? 1 : -1);
            for (int k = 0; k < s.obj.circles; ++k) contrib = contrib * qint(2);
            acc[s.obj.match] += contrib;
            if (s.q - s.obj.circles < qmax) all_beyond = false;
        }
        if (all_beyond && i >= c.stored().top_level()) break;
        ++i;
        if (i > 100000) throw std::logic_error("euler_char: runaway tail");
    }
    std::map<Matching, TruncSeries> out;
    for (const auto& [m, p] : acc) {
        if (p.is_zero()) continue;
        TruncSeries s = TruncSeries::from_laurent(p, qmax);
        if (!s.is_zero()) out.emplace(m, std::move(s));
    }
    return out;
}

std::map<Matching, TruncSeries> tl_series(const TLElement& x, int qmax) {
    std::map<Matching, TruncSeries> out;
    for (const auto& [m, c] : x.terms()) {
        TruncSeries s = ratfunc_to_series(c, qmax);
        if (!s.is_zero()) out.emplace(m, std::move(s));
    }
    return out;
}

namespace {

// closure orbits of a matching under the pairing p <-> 2n-1-p
std::vector<int> closure_orbit_of_point(const Matching& m, int& orbit_count) {
    const int N = 2 * m.n();
    std::vector<int> orbit(N, -1);
    int next = 0;
    for (int p = 0; p < N; ++p) {
        if (orbit[p] >= 0) continue;
        int cur = p;
        while (orbit[cur] < 0) {
            orbit[cur] = next;
            int w = m.partner(cur);
            orbit[w] = next;
            cur = N - 1 - w;
        }
        ++next;
    }
    orbit_count = next;
    return orbit;
}

PlanarObj trace_object(const PlanarObj& o) {
    int k = 0;
    if (o.n() > 0) closure_orbit_of_point(o.match, k);
    return PlanarObj{Matching(0, {}), k + o.circles};
}

Cob trace_cob(const Cob& f) {
    const int n = f.src().n();
    const int N = 2 * n;
    const CircleStructure sf = circle_structure(f.src(), f.tgt());
    const int nf = sf.total();

    // strips close strand pairs (j, 2n-1-j); each strip glues two walls
    UnionFind uf(nf + n);
    for (int j = 0; j < n; ++j) {
        uf.unite(nf + j, sf.orbit_of_point[j]);
        uf.unite(nf + j, sf.orbit_of_point[N - 1 - j]);
    }
    glue::Clusters cl;
    cl.nf = nf;
    cl.ng = 0;
    std::map<int, int> cluster_index;
    auto idx = [&](int root) {
        auto [it, ins] = cluster_index.emplace(root, static_cast<int>(cluster_index.size()));
        return it->second;
    };
    cl.f_cluster.resize(nf);
    for (int c = 0; c < nf; ++c) cl.f_cluster[c] = idx(uf.find(c));
    std::vector<int> strip_cluster(n);
    for (int j = 0; j < n; ++j) strip_cluster[j] = idx(uf.find(nf + j));
    cl.chi.assign(cluster_index.size(), 0);
    cl.outer.assign(cluster_index.size(), {});
    for (int c = 0; c < nf; ++c) ++cl.chi[cl.f_cluster[c]];
    for (int j = 0; j < n; ++j) --cl.chi[strip_cluster[j]];  // strip: +1 piece, -2 walls

    PlanarObj tsrc = trace_object(f.src());
    PlanarObj ttgt = trace_object(f.tgt());
    // outer circle order: source closure orbits, source circles, then target
    {
        int src_orbits = 0;
        std::vector<int> so = closure_orbit_of_point(f.src().match, src_orbits);
        std::vector<int> rep(src_orbits, -1);
        for (int p = N - 1; p >= 0; --p) rep[so[p]] = p;
        for (int o = 0; o < src_orbits; ++o)
            cl.outer[cl.f_cluster[sf.orbit_of_point[rep[o]]]].push_back(o);
        for (int i = 0; i < f.src().circles; ++i)
            cl.outer[cl.f_cluster[sf.src_circle_id(i)]].push_back(src_orbits + i);
        int base = tsrc.circles;
        int tgt_orbits = 0;
        std::vector<int> to = closure_orbit_of_point(f.tgt().match, tgt_orbits);
        std::vector<int> trep(tgt_orbits, -1);
        for (int p = N - 1; p >= 0; --p) trep[to[p]] = p;
        for (int o = 0; o < tgt_orbits; ++o)
            cl.outer[cl.f_cluster[sf.orbit_of_point[trep[o]]]].push_back(base + o);
        for (int i = 0; i < f.tgt().circles; ++i)
            cl.outer[cl.f_cluster[sf.tgt_circle_id(i)]].push_back(base + tgt_orbits + i);
    }
    cl.finish();

    Cob out(tsrc, ttgt);
    glue::evaluate_terms(cl, f.terms(), nullptr, out);
    return out;
}

}  // namespace

DiskWindow trace_window(const PeriodicComplex& c, int hmax) {
    DiskWindow w = c.materialize(hmax);
    DiskWindow out;
    for (const auto& lvl : w.levels) {
        std::vector<DiskSummand> tl;
        for (const auto& s : lvl) tl.push_back({trace_object(s.obj), s.q});
        out.levels.push_back(std::move(tl));
    }
    for (const auto& d : w.diffs) {
        MorMatrix<Cob> td;
        for (const auto& [rc, m] : d.entries) td.add(rc.first, rc.second, trace_cob(m));
        out.diffs.push_back(std::move(td));
    }
    return out;
}

std::string TraceReport::str() const {
    std::ostringstream os;
    for (const auto& p : pieces) os << "h=" << p.hdeg << " q^" << p.q << " Z; ";
    if (!fully_delooped) os << "(objects left undelooped)";
    return os.str();
}

TraceReport trace_complex(const PeriodicComplex& c, int hmax) {
    DiskWindow w = trace_window(c, hmax);
    simplify(w);
    TraceReport rep;
    for (size_t i = 0; i < w.levels.size(); ++i) {
        for (const auto& s : w.levels[i]) {
            if (s.obj.circles != 0 || s.obj.n() != 0) rep.fully_delooped = false;
            rep.pieces.push_back({static_cast<int>(i), s.q});
        }
    }
    return rep;
}

}  // namespace skein
