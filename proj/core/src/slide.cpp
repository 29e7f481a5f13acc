#include "skein/slide.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

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

// traced curves of a matching under the closure of strands 1..n-1
struct TracedObjInfo {
    AnnObj obj;
    std::vector<int> ess_rep;   // minimal point per essential curve, ascending
    std::vector<int> triv_rep;  // minimal point per trivial traced curve, ascending
};

TracedObjInfo trace_object_info(const PlanarObj& p, const TraceRoute& r) {
    const int n = r.n;
    if (p.n() != n) throw std::invalid_argument("trace: strand-count mismatch with the route");
    if (static_cast<int>(r.winding.size()) != n - 1)
        throw std::invalid_argument("trace: winding list must cover strands 1..n-1");
    const int N = 2 * n;
    const Matching& m = p.match;
    TracedObjInfo out;
    std::vector<char> seen(N, 0);

    // the through strand: from the free bottom point to the free top point
    {
        int w = r.connector;
        int cur = 0;
        seen[0] = 1;
        while (true) {
            int nxt = m.partner(cur);
            seen[nxt] = 1;
            if (nxt == N - 1) break;
            if (nxt < n) {
                w += r.winding[nxt - 1];  // bottom -> top through the closure
                cur = N - 1 - nxt;
            } else {
                int s = N - 1 - nxt;
                w -= r.winding[s - 1];  // top -> bottom
                cur = s;
            }
            seen[cur] = 1;
        }
        out.obj.arcs = 1;
        out.obj.arc_w = w;
    }
    // closed curves
    for (int start = 1; start < N - 1; ++start) {
        if (seen[start]) continue;
        int w = 0, min_pt = start;
        int cur = start;
        while (!seen[cur]) {
            seen[cur] = 1;
            min_pt = std::min(min_pt, cur);
            int nxt = m.partner(cur);
            seen[nxt] = 1;
            min_pt = std::min(min_pt, nxt);
            if (nxt < n) {
                w += r.winding[nxt - 1];
                cur = N - 1 - nxt;
            } else {
                int s = N - 1 - nxt;
                w -= r.winding[s - 1];
                cur = s;
            }
        }
        if (w != 0) {
            if (w != 1 && w != -1) throw std::logic_error("trace: curve winds more than once");
            out.ess_rep.push_back(min_pt);
        } else {
            out.triv_rep.push_back(min_pt);
        }
    }
    std::sort(out.ess_rep.begin(), out.ess_rep.end());
    std::sort(out.triv_rep.begin(), out.triv_rep.end());
    out.obj.essential = static_cast<int>(out.ess_rep.size());
    out.obj.trivial = static_cast<int>(out.triv_rep.size()) + p.circles;
    return out;
}

}  // namespace

TraceRoute TraceRoute::reflected() const {
    TraceRoute r = *this;
    for (auto& w : r.winding) w = -w;
    r.connector = -connector;
    return r;
}

std::string TraceRoute::str() const {
    std::ostringstream os;
    os << "n=" << n << " windings";
    for (int w : winding) os << " " << w;
    os << " connector " << connector;
    return os.str();
}

TraceRoute route_plus(int N) {
    TraceRoute r;
    r.n = N;
    r.winding.assign(N - 1, +1);
    r.connector = 0;
    return r;
}

TraceRoute route_minus(int N) {
    TraceRoute r;
    r.n = N;
    if (N == 2) {
        r.winding = {0};
    } else if (N == 3) {
        r.winding = {-1, 0};
    } else {
        throw std::invalid_argument("route_minus: defined for N in {2,3}");
    }
    r.connector = 1;
    return r;
}

AnnObj trace_object(const PlanarObj& obj, const TraceRoute& r) {
    return trace_object_info(obj, r).obj;
}

AnnCob trace_cob(const Cob& f, const TraceRoute& r) {
    const int n = r.n;
    const int N = 2 * n;
    const CircleStructure sf = circle_structure(f.src(), f.tgt());
    const int nf = sf.total();

    UnionFind uf(nf + n - 1);
    for (int s = 1; s < n; ++s) {
        uf.unite(nf + s - 1, sf.orbit_of_point[s]);
        uf.unite(nf + s - 1, sf.orbit_of_point[N - 1 - s]);
    }
    std::map<int, int> cluster_index;
    auto idx = [&](int root) {
        auto [it, ins] = cluster_index.emplace(root, static_cast<int>(cluster_index.size()));
        return it->second;
    };
    std::vector<int> fc(nf);
    for (int c = 0; c < nf; ++c) fc[c] = idx(uf.find(c));
    std::vector<int> strip_cluster(n - 1);
    for (int s = 1; s < n; ++s) strip_cluster[s - 1] = idx(uf.find(nf + s - 1));
    const int n_clusters = static_cast<int>(cluster_index.size());

    std::vector<int> chi(n_clusters, 0);
    std::vector<std::vector<int>> out_ess(n_clusters), out_triv(n_clusters);
    for (int c = 0; c < nf; ++c) ++chi[fc[c]];
    for (int s = 1; s < n; ++s) --chi[strip_cluster[s - 1]];

    TracedObjInfo ts = trace_object_info(f.src(), r);
    TracedObjInfo tt = trace_object_info(f.tgt(), r);
    const AnnCircles co = ann_circles(ts.obj, tt.obj);
    // the single boundary circle through the two marked points
    out_ess[fc[sf.orbit_of_point[0]]].push_back(co.arc_id());
    if (ts.obj.arc_w == tt.obj.arc_w) {
        out_ess[fc[sf.orbit_of_point[0]]].pop_back();
        out_triv[fc[sf.orbit_of_point[0]]].push_back(co.arc_id());
    }
    for (size_t i = 0; i < ts.ess_rep.size(); ++i)
        out_ess[fc[sf.orbit_of_point[ts.ess_rep[i]]]].push_back(co.src_ess_id(static_cast<int>(i)));
    for (size_t i = 0; i < ts.triv_rep.size(); ++i)
        out_triv[fc[sf.orbit_of_point[ts.triv_rep[i]]]].push_back(co.src_triv_id(static_cast<int>(i)));
    for (int i = 0; i < f.src().circles; ++i)
        out_triv[fc[sf.src_circle_id(i)]].push_back(
            co.src_triv_id(static_cast<int>(ts.triv_rep.size()) + i));
    for (size_t i = 0; i < tt.ess_rep.size(); ++i)
        out_ess[fc[sf.orbit_of_point[tt.ess_rep[i]]]].push_back(co.tgt_ess_id(static_cast<int>(i)));
    for (size_t i = 0; i < tt.triv_rep.size(); ++i)
        out_triv[fc[sf.orbit_of_point[tt.triv_rep[i]]]].push_back(co.tgt_triv_id(static_cast<int>(i)));
    for (int i = 0; i < f.tgt().circles; ++i)
        out_triv[fc[sf.tgt_circle_id(i)]].push_back(
            co.tgt_triv_id(static_cast<int>(tt.triv_rep.size()) + i));

    AnnCob out(ts.obj, tt.obj);
    AnnClusterData cd;
    cd.chi = chi;
    cd.out_ess = out_ess;
    cd.out_triv = out_triv;
    for (const auto& [mask, coeff] : f.terms()) {
        cd.dots.assign(n_clusters, 0);
        for (int c = 0; c < nf; ++c)
            if (mask & (std::uint64_t(1) << c)) ++cd.dots[fc[c]];
        ann_fold_clusters(cd, coeff, out);
    }
    return out;
}

AnnWindow partial_trace(const DiskWindow& w, const TraceRoute& r) {
    AnnWindow out;
    for (const auto& lvl : w.levels) {
        std::vector<AnnSummand> tl;
        for (const auto& s : lvl) tl.push_back({trace_object(s.obj, r), s.q});
        out.levels.push_back(std::move(tl));
    }
    for (const auto& d : w.diffs) {
        MorMatrix<AnnCob> td;
        for (const auto& [rc, m] : d.entries) td.add(rc.first, rc.second, trace_cob(m, r));
        out.diffs.push_back(std::move(td));
    }
    return out;
}

DiskWindow reflect_window(const DiskWindow& w) {
    DiskWindow out;
    for (const auto& lvl : w.levels) {
        std::vector<DiskSummand> fl;
        for (const auto& s : lvl) fl.push_back({s.obj.vertical_flip(), s.q});
        out.levels.push_back(std::move(fl));
    }
    for (const auto& d : w.diffs) {
        MorMatrix<Cob> fd;
        for (const auto& [rc, m] : d.entries) fd.add(rc.first, rc.second, m.vertical_flip());
        out.diffs.push_back(std::move(fd));
    }
    return out;
}

DiskWindow tail_window(int n, int hmax) {
    if (n != 2 && n != 3) throw std::invalid_argument("tail_window: n in {2,3}");
    PeriodicComplex pn = n == 2 ? P2() : P3();
    return drop_degree_zero<DiskCat>(pn.materialize(hmax));
}

namespace {

// permutation expected at level l of the N = 3 tail comparison: the
// one-turnback levels swap their two summands, the two-turnback levels do
// not.
std::vector<int> p3_level_perm(int level, size_t width) {
    if (width == 2 && ((level - 1) % 4 == 0 || (level - 1) % 4 == 3)) return {1, 0};
    std::vector<int> id(width);
    std::iota(id.begin(), id.end(), 0);
    return id;
}

bool windows_equal_under_perm(const AnnWindow& a, const AnnWindow& b,
                              const std::vector<std::vector<int>>& perm, std::string& why) {
    if (a.levels.size() != b.levels.size()) {
        why = "window lengths differ";
        return false;
    }
    for (size_t l = 0; l < a.levels.size(); ++l) {
        if (a.levels[l].size() != b.levels[l].size()) {
            why = "summand counts differ at level " + std::to_string(l);
            return false;
        }
        for (size_t j = 0; j < a.levels[l].size(); ++j) {
            if (!(a.levels[l][j] == b.levels[l][perm[l][j]])) {
                why = "objects differ at level " + std::to_string(l);
                return false;
            }
        }
    }
    for (size_t i = 0; i < a.diffs.size(); ++i) {
        MorMatrix<AnnCob> mapped;
        for (const auto& [rc, m] : a.diffs[i].entries)
            mapped.add(perm[i + 1][rc.first], perm[i][rc.second], m);
        if (!(mapped.entries == b.diffs[i].entries)) {
            why = "differential entries differ at level " + std::to_string(i);
            return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> identity_perm(const AnnWindow& w) {
    std::vector<std::vector<int>> p;
    for (const auto& lvl : w.levels) {
        std::vector<int> id(lvl.size());
        std::iota(id.begin(), id.end(), 0);
        p.push_back(std::move(id));
    }
    return p;
}

}  // namespace

std::string TailEqualityReport::str() const {
    std::ostringstream os;
    os << "tail equality, N = " << N << ": " << (equal ? "equal" : "NOT equal");
    if (equal && swapped) os << " (after the summand swap)";
    if (!detail.empty()) os << " [" << detail << "]";
    return os.str();
}

TailEqualityReport tail_equality_check(int N, int hmax) {
    TailEqualityReport rep;
    rep.N = N;
    PeriodicComplex pn = N == 2 ? P2() : P3();
    DiskWindow w = pn.materialize(hmax);
    AnnWindow t_plus = partial_trace(w, route_plus(N));
    AnnWindow t_minus = partial_trace(w, route_minus(N));
    AnnWindow tp = drop_degree_zero<AnnCat>(t_plus);
    AnnWindow tm = drop_degree_zero<AnnCat>(t_minus);

    std::string why;
    if (N == 2) {
        rep.equal = windows_equal_under_perm(tm, tp, identity_perm(tm), why);
        rep.swapped = false;
    } else if (N == 3) {
        std::vector<std::vector<int>> perm;
        for (size_t l = 0; l < tm.levels.size(); ++l)
            perm.push_back(p3_level_perm(static_cast<int>(l), tm.levels[l].size()));
        rep.equal = windows_equal_under_perm(tm, tp, perm, why);
        rep.swapped = true;
    } else {
        throw std::invalid_argument("tail_equality_check: N in {2,3}");
    }
    rep.detail = why;
    return rep;
}

std::pair<AnnObj, AnnObj> omega_objects(int N) {
    if (N == 2) return {AnnObj{0, 0, 1, 0}, AnnObj{0, 0, 0, 1}};
    if (N == 3) return {AnnObj{0, 0, 2, 0}, AnnObj{0, 0, 1, 1}};
    throw std::invalid_argument("omega_objects: N in {2,3}");
}

AnnClass ann_k0_class(const AnnObj& obj, int qshift) {
    AnnClass out;
    RatFunc coeff = RatFunc(LaurentPoly::monomial(qshift));
    for (int i = 0; i < obj.trivial; ++i) coeff *= RatFunc(qint(2));
    out[{obj.arcs, obj.arc_w}] = AnnularElement::x_power(obj.essential, coeff);
    return out;
}

AnnClass window_k0(const AnnWindow& w) {
    AnnClass out;
    for (size_t i = 0; i < w.levels.size(); ++i) {
        for (const auto& s : w.levels[i]) {
            AnnClass c = ann_k0_class(s.obj, s.q);
            for (auto& [k, v] : c) {
                AnnularElement add = (i % 2 == 0) ? v : v * RatFunc(-1);
                auto it = out.find(k);
                if (it == out.end())
                    out.emplace(k, add);
                else
                    it->second = it->second + add;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

namespace {

AnnWindow build_ideal_object(const IdealWitness& wit, int hmax) {
    PeriodicComplex pn = wit.N == 2 ? P2() : P3();
    DiskWindow w = pn.materialize(hmax);
    if (wit.reflected) w = reflect_window(w);
    return partial_trace(w, wit.route);
}

SlideStep make_step(const IdealWitness& wit, int window) {
    SlideStep st;
    st.witness = wit;
    st.q = build_ideal_object(wit, window);
    const bool swap = wit.N == 3 && (wit.route == route_minus(3) ||
                                     wit.route == route_minus(3).reflected());
    st.perm.clear();
    for (size_t l = 0; l < st.q.levels.size(); ++l) {
        if (swap) {
            st.perm.push_back(p3_level_perm(static_cast<int>(l), st.q.levels[l].size()));
        } else {
            std::vector<int> id(st.q.levels[l].size());
            std::iota(id.begin(), id.end(), 0);
            st.perm.push_back(std::move(id));
        }
    }
    st.endpoint = st.q.levels[0][0];
    return st;
}

}  // namespace

EquivCertificate build_slide_certificate(int N, int window) {
    if (N != 2 && N != 3) throw std::invalid_argument("build_slide_certificate: N in {2,3}");
    EquivCertificate cert;
    cert.N = N;
    cert.window = window;

    IdealWitness plus{N, route_plus(N), false};
    IdealWitness minus{N, route_minus(N), false};
    AnnWindow q_plus = build_ideal_object(plus, window);
    cert.tail = drop_degree_zero<AnnCat>(q_plus);
    cert.steps.push_back(make_step(plus, window));
    cert.steps.push_back(make_step(minus, window));
    cert.start = cert.steps.front().endpoint;
    cert.end = cert.steps.back().endpoint;

    IdealWitness r_plus{N, route_plus(N).reflected(), true};
    IdealWitness r_minus{N, route_minus(N).reflected(), true};
    AnnWindow rq_plus = build_ideal_object(r_plus, window);
    cert.r_tail = drop_degree_zero<AnnCat>(rq_plus);
    cert.r_steps.push_back(make_step(r_plus, window));
    cert.r_steps.push_back(make_step(r_minus, window));
    cert.r_start = cert.r_steps.front().endpoint;
    cert.r_end = cert.r_steps.back().endpoint;
    return cert;
}

namespace {

bool verify_zigzag(int window, const AnnSummand& start, const AnnSummand& end,
                   const AnnWindow& tail, const std::vector<SlideStep>& steps, std::string& why) {
    if (steps.empty()) {
        why = "no steps";
        return false;
    }
    if (static_cast<int>(tail.levels.size()) != window + 1) {
        why = "tail window does not match the declared truncation";
        return false;
    }
    for (size_t si = 0; si < steps.size(); ++si) {
        const SlideStep& st = steps[si];
        // 1. the ideal witness must rebuild the presented object: Q is the
        // projector complex glued against the declared complement
        AnnWindow rebuilt = build_ideal_object(st.witness, window);
        if (!rebuilt.equal(st.q)) {
            why = "step " + std::to_string(si) + ": invalid ideal witness";
            return false;
        }
        if (static_cast<int>(st.q.levels.size()) != window + 1) {
            why = "step " + std::to_string(si) + ": window mismatch (got " +
                  std::to_string(st.q.levels.size() - 1) + ", declared " + std::to_string(window) + ")";
            return false;
        }
        // 2. the declared tail must match Q's tail under the recorded
        // permutation
        if (st.perm.size() != st.q.levels.size()) {
            why = "step " + std::to_string(si) + ": permutation shape mismatch";
            return false;
        }
        for (size_t l = 1; l < tail.levels.size(); ++l) {
            if (tail.levels[l].size() != st.q.levels[l].size()) {
                why = "step " + std::to_string(si) + ": tail width mismatch at level " +
                      std::to_string(l);
                return false;
            }
            for (size_t j = 0; j < tail.levels[l].size(); ++j) {
                if (!(tail.levels[l][j] == st.q.levels[l][st.perm[l][j]])) {
                    why = "step " + std::to_string(si) + ": tail object mismatch at level " +
                          std::to_string(l);
                    return false;
                }
            }
        }
        // 3. cone on the tail inclusion: d^2 = 0 certifies the inclusion is
        // a chain map through the permutation
        ChainMap<AnnCat> inc;
        inc.comps.resize(tail.levels.size());
        for (size_t l = 1; l < tail.levels.size(); ++l)
            for (size_t j = 0; j < tail.levels[l].size(); ++j)
                inc.comps[l].set(st.perm[l][j], static_cast<int>(j),
                                 AnnCob::identity(tail.levels[l][j].obj));
        AnnWindow cone = cone_up<AnnCat>(tail, st.q, inc);
        ValidationReport base = validate_window<AnnCat>(cone);
        if (!base.pass()) {
            why = "step " + std::to_string(si) + ": cone is not a complex (" + base.first_failure +
                  ")";
            return false;
        }
        eliminate_only<AnnCat>(cone);
        int remaining = cone.summand_count();
        if (remaining != 1 || cone.levels[0].size() != 1 || !(cone.levels[0][0] == st.endpoint)) {
            why = "step " + std::to_string(si) + ": cone does not reduce to the declared object";
            return false;
        }
    }
    if (!(steps.front().endpoint == start)) {
        why = "first step endpoint is not the start object";
        return false;
    }
    if (!(steps.back().endpoint == end)) {
        why = "last step endpoint is not the end object";
        return false;
    }
    return true;
}

}  // namespace

VerifyReport verify_certificate(const EquivCertificate& cert) {
    VerifyReport rep;
    std::string why;
    if (!verify_zigzag(cert.window, cert.start, cert.end, cert.tail, cert.steps, why)) {
        rep.reason = why;
        return rep;
    }
    if (!verify_zigzag(cert.window, cert.r_start, cert.r_end, cert.r_tail, cert.r_steps, why)) {
        rep.reason = "reflection section: " + why;
        return rep;
    }
    // the two sections must certify the same slide, mirrored
    if (!(cert.start == cert.r_start)) {
        rep.reason = "reflection start differs from the main start";
        return rep;
    }
    rep.accepted = true;
    return rep;
}

K0ShadowReport certificate_k0_shadow(const EquivCertificate& cert) {
    K0ShadowReport rep;
    // cone conservation: [S] = [Q] - [T], hence
    // [start] - [end] = [Q_first] - [Q_last] within the shared window
    auto cls = [&](const AnnSummand& s) { return ann_k0_class(s.obj, s.q); };
    auto subtract = [](AnnClass a, const AnnClass& b) {
        for (const auto& [k, v] : b) {
            auto it = a.find(k);
            if (it == a.end())
                a.emplace(k, v * RatFunc(-1));
            else {
                it->second = it->second - v;
                if (it->second.is_zero()) a.erase(it);
            }
        }
        return a;
    };
    AnnClass lhs = subtract(cls(cert.start), cls(cert.end));
    AnnClass rhs = subtract(window_k0(cert.steps.front().q), window_k0(cert.steps.back().q));
    rep.conservation = lhs == rhs;
    rep.fusion_identity = eigen_check(cert.N).pass() && verify_slide_identities(cert.N).pass();
    return rep;
}

std::vector<OmegaLabel> spin_labeling(const std::vector<bool>& characteristic) {
    std::vector<OmegaLabel> out;
    out.reserve(characteristic.size());
    for (bool c : characteristic) out.push_back(c ? OmegaLabel::minus : OmegaLabel::plus);
    return out;
}

}  // namespace skein
