#include "skein/ann.hpp"

#include <algorithm>
#include <numeric>

#include "skein/glue.hpp"
#include <sstream>
#include <stdexcept>

namespace skein {

bool AnnObj::operator<(const AnnObj& o) const {
    if (arcs != o.arcs) return arcs < o.arcs;
    if (arc_w != o.arc_w) return arc_w < o.arc_w;
    if (essential != o.essential) return essential < o.essential;
    return trivial < o.trivial;
}

std::string AnnObj::str() const {
    std::ostringstream os;
    if (arcs) os << "arc(w" << arc_w << ")";
    for (int i = 0; i < essential; ++i) os << "E";
    for (int i = 0; i < trivial; ++i) os << "o";
    if (!arcs && !essential && !trivial) os << "empty";
    return os.str();
}

AnnCircles ann_circles(const AnnObj& src, const AnnObj& tgt) {
    if (src.arcs != tgt.arcs) throw std::invalid_argument("ann_circles: marked-point mismatch");
    AnnCircles c;
    c.arcs = src.arcs;
    c.src_ess = src.essential;
    c.src_triv = src.trivial;
    c.tgt_ess = tgt.essential;
    c.tgt_triv = tgt.trivial;
    return c;
}

bool AnnCircles::is_essential(int id, int arc_winding_difference) const {
    if (arcs && id == 0) return arc_winding_difference != 0;
    if (id < arcs + src_ess) return true;
    if (id < arcs + src_ess + src_triv) return false;
    if (id < arcs + src_ess + src_triv + tgt_ess) return true;
    return false;
}

AnnCob AnnCob::identity(const AnnObj& o) {
    AnnCob f(o, o);
    AnnCircles c = ann_circles(o, o);
    // arc sheet and essential cylinders; trivial circles neck-cut
    std::vector<AnnTerm> terms(1);
    if (o.arcs) terms[0].comps.push_back({{c.arc_id()}, 0});
    for (int i = 0; i < o.essential; ++i)
        terms[0].comps.push_back({{c.src_ess_id(i), c.tgt_ess_id(i)}, 0});
    for (int i = 0; i < o.trivial; ++i) {
        std::vector<AnnTerm> next;
        for (const auto& t : terms) {
            AnnTerm a = t;
            a.comps.push_back({{c.src_triv_id(i)}, 1});
            a.comps.push_back({{c.tgt_triv_id(i)}, 0});
            AnnTerm b = t;
            b.comps.push_back({{c.src_triv_id(i)}, 0});
            b.comps.push_back({{c.tgt_triv_id(i)}, 1});
            next.push_back(std::move(a));
            next.push_back(std::move(b));
        }
        terms = std::move(next);
    }
    for (auto& t : terms) {
        std::sort(t.comps.begin(), t.comps.end());
        f.add_term(t, AlphaPoly(1));
    }
    return f;
}

void AnnCob::add_term(const AnnTerm& t, const AlphaPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AnnCob& AnnCob::operator+=(const AnnCob& o) {
    if (terms_.empty()) {
        *this = o;
        return *this;
    }
    if (o.terms_.empty()) return *this;
    if (!(src_ == o.src_) || !(tgt_ == o.tgt_))
        throw std::invalid_argument("AnnCob: object mismatch in sum");
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
}

AnnCob AnnCob::operator+(const AnnCob& o) const {
    AnnCob r = *this;
    r += o;
    return r;
}

AnnCob AnnCob::operator-() const {
    AnnCob r(src_, tgt_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
    return r;
}

AnnCob AnnCob::operator*(long long c) const {
    AnnCob r(src_, tgt_);
    if (c == 0) return r;
    for (const auto& [t, x] : terms_) r.terms_.emplace(t, x * AlphaPoly(c));
    return r;
}

bool AnnCob::operator==(const AnnCob& o) const {
    return src_ == o.src_ && tgt_ == o.tgt_ && terms_ == o.terms_;
}

bool AnnCob::is_unit_identity(long long& sign) const {
    if (!(src_ == tgt_)) return false;
    if (terms_.empty()) return false;
    AnnCob id = identity(src_);
    if (*this == id) {
        sign = 1;
        return true;
    }
    if (*this == -id) {
        sign = -1;
        return true;
    }
    return false;
}

std::string AnnCob::str() const {
    std::ostringstream os;
    os << src_.str() << " -> " << tgt_.str() << " : ";
    if (terms_.empty()) {
        os << "0";
        return os.str();
    }
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*{";
        for (const auto& comp : t.comps) {
            os << "[";
            for (size_t i = 0; i < comp.circles.size(); ++i) {
                if (i) os << ",";
                os << comp.circles[i];
            }
            if (comp.dots) os << "*";
            os << "]";
        }
        os << "}";
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

// expansion of a cluster with some trivial circles, an optional essential
// block, and d dots: (trivial dotted subset, dots on the essential block,
// alpha power); without an essential block the disk expansion applies
void ann_expand(int k_trivial, bool has_essential, int d,
                std::vector<std::tuple<std::uint64_t, int, int>>& out, std::uint64_t mask = 0,
                int alpha = 0, int depth = 0) {
    if (d >= 2) {
        alpha += d / 2;
        d %= 2;
    }
    if (depth == k_trivial) {
        out.push_back({mask, has_essential ? d : 0, alpha});
        return;
    }
    ann_expand(k_trivial, has_essential, d, out, mask | (std::uint64_t(1) << depth), alpha, depth + 1);
    ann_expand(k_trivial, has_essential, d + 1, out, mask, alpha, depth + 1);
}

}  // namespace

AnnCob ann_compose(const AnnCob& g, const AnnCob& f) {
    if (!(f.tgt() == g.src())) throw std::invalid_argument("ann_compose: object mismatch");
    const AnnObj& mid = f.tgt();
    const AnnCircles cf = ann_circles(f.src(), f.tgt());
    const AnnCircles cg = ann_circles(g.src(), g.tgt());
    const AnnCircles co = ann_circles(f.src(), g.tgt());
    const int nf = cf.total(), ng = cg.total();

    // term-independent cluster skeleton needs per-term component data, so
    // clusters are built per term pair here (annular Hom spaces are tiny)
    AnnCob out(f.src(), g.tgt());
    const int arc_w_o = f.src().arc_w - g.tgt().arc_w;

    for (const auto& [tf, af] : f.terms()) {
        for (const auto& [tg, ag] : g.terms()) {
            UnionFind uf(static_cast<int>(tf.comps.size() + tg.comps.size()));
            auto f_comp_of = [&](int circle) {
                for (size_t i = 0; i < tf.comps.size(); ++i)
                    for (int c : tf.comps[i].circles)
                        if (c == circle) return static_cast<int>(i);
                throw std::logic_error("ann_compose: circle not covered in f");
            };
            auto g_comp_of = [&](int circle) {
                for (size_t i = 0; i < tg.comps.size(); ++i)
                    for (int c : tg.comps[i].circles)
                        if (c == circle) return static_cast<int>(i);
                throw std::logic_error("ann_compose: circle not covered in g");
            };
            const int offset = static_cast<int>(tf.comps.size());
            // middle arc glues the two arc circles
            if (mid.arcs) uf.unite(f_comp_of(cf.arc_id()), offset + g_comp_of(cg.arc_id()));
            for (int i = 0; i < mid.essential; ++i)
                uf.unite(f_comp_of(cf.tgt_ess_id(i)), offset + g_comp_of(cg.src_ess_id(i)));
            for (int i = 0; i < mid.trivial; ++i)
                uf.unite(f_comp_of(cf.tgt_triv_id(i)), offset + g_comp_of(cg.src_triv_id(i)));

            std::map<int, int> cluster_index;
            auto idx = [&](int root) {
                auto [it, ins] = cluster_index.emplace(root, static_cast<int>(cluster_index.size()));
                return it->second;
            };
            std::vector<int> fc(tf.comps.size()), gc(tg.comps.size());
            for (size_t i = 0; i < tf.comps.size(); ++i) fc[i] = idx(uf.find(static_cast<int>(i)));
            for (size_t i = 0; i < tg.comps.size(); ++i) gc[i] = idx(uf.find(offset + static_cast<int>(i)));
            const int n_clusters = static_cast<int>(cluster_index.size());

            std::vector<int> chi(n_clusters, 0), dots(n_clusters, 0);
            std::vector<std::vector<int>> out_ess(n_clusters), out_triv(n_clusters);
            for (size_t i = 0; i < tf.comps.size(); ++i) {
                chi[fc[i]] += 2 - static_cast<int>(tf.comps[i].circles.size());
                dots[fc[i]] += tf.comps[i].dots;
            }
            for (size_t i = 0; i < tg.comps.size(); ++i) {
                chi[gc[i]] += 2 - static_cast<int>(tg.comps[i].circles.size());
                dots[gc[i]] += tg.comps[i].dots;
            }
            if (mid.arcs) --chi[fc[f_comp_of(cf.arc_id())]];
            // middle circles have zero Euler characteristic

            // attach the outer circles
            if (co.arcs) {
                int cl = fc[f_comp_of(cf.arc_id())];
                (co.is_essential(co.arc_id(), arc_w_o) ? out_ess : out_triv)[cl].push_back(co.arc_id());
            }
            for (int i = 0; i < f.src().essential; ++i)
                out_ess[fc[f_comp_of(cf.src_ess_id(i))]].push_back(co.src_ess_id(i));
            for (int i = 0; i < f.src().trivial; ++i)
                out_triv[fc[f_comp_of(cf.src_triv_id(i))]].push_back(co.src_triv_id(i));
            for (int i = 0; i < g.tgt().essential; ++i)
                out_ess[gc[g_comp_of(cg.tgt_ess_id(i))]].push_back(co.tgt_ess_id(i));
            for (int i = 0; i < g.tgt().trivial; ++i)
                out_triv[gc[g_comp_of(cg.tgt_triv_id(i))]].push_back(co.tgt_triv_id(i));

            AnnClusterData cd{chi, dots, out_ess, out_triv};
            ann_fold_clusters(cd, af * ag, out);
        }
    }
    return out;
}

void ann_fold_clusters(const AnnClusterData& cd, const AlphaPoly& coeff, AnnCob& out) {
    const int n_clusters = static_cast<int>(cd.chi.size());
    int base_alpha = 0;
    long long base_factor = 1;
    bool dead = false;
    std::vector<std::pair<AnnTerm, int>> acc = {{AnnTerm{}, 0}};
    for (int c = 0; c < n_clusters && !dead; ++c) {
        int b = static_cast<int>(cd.out_ess[c].size() + cd.out_triv[c].size());
        int twice_genus = 2 - b - cd.chi[c];
        if (twice_genus < 0 || twice_genus % 2 != 0)
            throw std::logic_error("ann_fold_clusters: inconsistent component topology");
        int genus = twice_genus / 2;
        int d = cd.dots[c] + genus;
        base_factor <<= genus;
        if (b == 0) {
            if (!cd.out_ess[c].empty())
                throw std::logic_error("ann_fold_clusters: closed essential component");
            if (d % 2 == 0)
                dead = true;
            else
                base_alpha += (d - 1) / 2;
            continue;
        }
        std::vector<std::tuple<std::uint64_t, int, int>> expansion;
        if (cd.out_triv[c].empty()) {
            // purely essential component: alpha-reduce the dots
            expansion.push_back({0u, d % 2, d / 2});
        } else if (cd.out_ess[c].empty()) {
            // no essential block to hold the residue; cut down to disks
            // exactly as in the disk category
            for (const auto& [mask, ap] :
                 glue::disk_expansion(static_cast<int>(cd.out_triv[c].size()), d % 2))
                expansion.push_back({mask, 0, ap + d / 2});
        } else {
            ann_expand(static_cast<int>(cd.out_triv[c].size()), true, d, expansion);
        }
        std::vector<std::pair<AnnTerm, int>> next;
        next.reserve(acc.size() * expansion.size());
        for (const auto& [p, pa] : acc) {
            for (const auto& [tmask, edots, apow] : expansion) {
                AnnTerm t = p;
                for (size_t j = 0; j < cd.out_triv[c].size(); ++j)
                    t.comps.push_back(
                        {{cd.out_triv[c][j]}, (tmask & (std::uint64_t(1) << j)) ? 1 : 0});
                if (!cd.out_ess[c].empty()) {
                    AnnComponent comp{cd.out_ess[c], edots};
                    std::sort(comp.circles.begin(), comp.circles.end());
                    t.comps.push_back(std::move(comp));
                }
                next.push_back({std::move(t), pa + apow});
            }
        }
        acc = std::move(next);
    }
    if (dead) return;
    AlphaPoly base = coeff * AlphaPoly::alpha_power(base_alpha, base_factor);
    for (auto& [t, apow] : acc) {
        std::sort(t.comps.begin(), t.comps.end());
        out.add_term(t, apow ? base * AlphaPoly::alpha_power(apow) : base);
    }
}

Degree ann_degree(const AnnCob& f, int q_src, int q_tgt) {
    if (f.is_zero()) throw std::invalid_argument("ann_degree: zero morphism");
    Degree out;
    bool first = true;
    for (const auto& [t, c] : f.terms()) {
        int chi = 0, dots = 0;
        for (const auto& comp : t.comps) {
            chi += 2 - static_cast<int>(comp.circles.size());
            dots += comp.dots;
        }
        if (c.terms().size() != 1)
            throw std::invalid_argument("ann_degree: mixed alpha powers in one term");
        int apow = c.terms().begin()->first;
        int dt = chi - f.src().arcs - 2 * dots - 4 * apow;
        if (first) {
            out.deg_t = dt;
            first = false;
        } else if (out.deg_t != dt) {
            throw std::invalid_argument("ann_degree: mixed-degree terms");
        }
    }
    out.deg_q = q_tgt - q_src;
    return out;
}

AnnDeloopMaps ann_deloop(const AnnObj& obj) {
    if (obj.trivial < 1) throw std::invalid_argument("ann_deloop: no trivial circle");
    AnnDeloopMaps d;
    d.reduced = obj;
    d.reduced.trivial -= 1;
    const int last = obj.trivial - 1;

    auto skeleton = [&](const AnnObj& a, const AnnObj& b, const AnnCircles& c, int shared_triv) {
        // identity components on the arc, essential circles and the first
        // shared_triv trivial circles (expanded); extra circles added by
        // the caller
        AnnCob f(a, b);
        std::vector<AnnTerm> terms(1);
        if (a.arcs) terms[0].comps.push_back({{c.arc_id()}, 0});
        for (int i = 0; i < a.essential; ++i)
            terms[0].comps.push_back({{c.src_ess_id(i), c.tgt_ess_id(i)}, 0});
        for (int i = 0; i < shared_triv; ++i) {
            std::vector<AnnTerm> next;
            for (const auto& t : terms) {
                AnnTerm x = t;
                x.comps.push_back({{c.src_triv_id(i)}, 1});
                x.comps.push_back({{c.tgt_triv_id(i)}, 0});
                AnnTerm y = t;
                y.comps.push_back({{c.src_triv_id(i)}, 0});
                y.comps.push_back({{c.tgt_triv_id(i)}, 1});
                next.push_back(std::move(x));
                next.push_back(std::move(y));
            }
            terms = std::move(next);
        }
        for (auto& t : terms) {
            std::sort(t.comps.begin(), t.comps.end());
            f.add_term(t, AlphaPoly(1));
        }
        return f;
    };

    {
        AnnCircles c = ann_circles(obj, d.reduced);
        AnnCob plain = skeleton(obj, d.reduced, c, last);
        AnnCob fwd_low(obj, d.reduced), fwd_high(obj, d.reduced);
        for (const auto& [t, coeffv] : plain.terms()) {
            AnnTerm tl = t, th = t;
            tl.comps.push_back({{c.src_triv_id(last)}, 0});  // plain cap
            th.comps.push_back({{c.src_triv_id(last)}, 1});  // dotted cap
            std::sort(tl.comps.begin(), tl.comps.end());
            std::sort(th.comps.begin(), th.comps.end());
            fwd_low.add_term(tl, coeffv);
            fwd_high.add_term(th, coeffv);
        }
        d.fwd_low = fwd_low;
        d.fwd_high = fwd_high;
    }
    {
        AnnCircles c = ann_circles(d.reduced, obj);
        AnnCob plain = skeleton(d.reduced, obj, c, last);
        AnnCob bwd_low(d.reduced, obj), bwd_high(d.reduced, obj);
        for (const auto& [t, coeffv] : plain.terms()) {
            AnnTerm tl = t, th = t;
            tl.comps.push_back({{c.tgt_triv_id(last)}, 1});  // dotted cup
            th.comps.push_back({{c.tgt_triv_id(last)}, 0});  // plain cup
            std::sort(tl.comps.begin(), tl.comps.end());
            std::sort(th.comps.begin(), th.comps.end());
            bwd_low.add_term(tl, coeffv);
            bwd_high.add_term(th, coeffv);
        }
        d.bwd_low = bwd_low;
        d.bwd_high = bwd_high;
    }
    return d;
}

}  // namespace skein
