#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace skein {

/// A q-shifted object inside one chain level.
template <class Obj>
struct Summand {
    Obj obj;
    int q = 0;
    bool operator==(const Summand& o) const { return obj == o.obj && q == o.q; }
    bool operator!=(const Summand& o) const { return !(*this == o); }
};

/// Sparse matrix of morphisms; key = (row, col) = (target index, source
/// index). Iteration order (row, col) fixes the deterministic elimination
/// order.
template <class Mor>
struct MorMatrix {
    std::map<std::pair<int, int>, Mor> entries;

    const Mor* find(int row, int col) const {
        auto it = entries.find({row, col});
        return it == entries.end() ? nullptr : &it->second;
    }
    void set(int row, int col, Mor m) {
        if (m.is_zero())
            entries.erase({row, col});
        else
            entries.insert_or_assign({row, col}, std::move(m));
    }
    void add(int row, int col, const Mor& m) {
        auto it = entries.find({row, col});
        if (it == entries.end()) {
            if (!m.is_zero()) entries.emplace(std::make_pair(row, col), m);
        } else {
            it->second += m;
            if (it->second.is_zero()) entries.erase(it);
        }
    }
};

/// Materialized chain complex on homological levels 0..H with differentials
/// of degree +1. Bounded complexes simply stop.
template <class Cat>
struct Window {
    using Obj = typename Cat::Obj;
    using Mor = typename Cat::Mor;

    std::vector<std::vector<Summand<Obj>>> levels;
    std::vector<MorMatrix<Mor>> diffs;  // diffs[i] : levels[i] -> levels[i+1]

    int top_level() const { return static_cast<int>(levels.size()) - 1; }

    bool object_equal(const Window& o) const {
        if (levels.size() != o.levels.size()) return false;
        for (size_t i = 0; i < levels.size(); ++i)
            if (levels[i] != o.levels[i]) return false;
        return true;
    }

    bool equal(const Window& o) const {
        if (!object_equal(o)) return false;
        for (size_t i = 0; i < diffs.size() && i < o.diffs.size(); ++i)
            if (diffs[i].entries != o.diffs[i].entries) return false;
        return diffs.size() == o.diffs.size();
    }

    int summand_count() const {
        int c = 0;
        for (const auto& l : levels) c += static_cast<int>(l.size());
        return c;
    }
};

struct ValidationReport {
    bool d_squared = true;
    bool degrees = true;
    bool identity_once = true;   // only meaningful when requested
    std::string first_failure;
    bool pass() const { return d_squared && degrees && identity_once; }
    std::string str() const {
        std::ostringstream os;
        os << (pass() ? "valid" : "INVALID");
        if (!pass()) os << ": " << first_failure;
        return os.str();
    }
};

/// d^2 = 0 and degree-zero checks over the whole window.
template <class Cat>
ValidationReport validate_window(const Window<Cat>& w) {
    ValidationReport rep;
    // degree-zero entries
    for (size_t i = 0; i < w.diffs.size() && rep.degrees; ++i) {
        for (const auto& [rc, m] : w.diffs[i].entries) {
            const auto& src = w.levels[i][rc.second];
            const auto& tgt = w.levels[i + 1][rc.first];
            if (!Cat::degree_zero(m, src.q, tgt.q)) {
                rep.degrees = false;
                std::ostringstream os;
                os << "degree != 0 at level " << i << " entry (" << rc.first << "," << rc.second << ")";
                rep.first_failure = os.str();
                break;
            }
        }
    }
    // d after d vanishes
    for (size_t i = 0; i + 1 < w.diffs.size() && rep.d_squared; ++i) {
        // index the second differential by source column
        std::map<int, std::vector<std::pair<int, const typename Cat::Mor*>>> by_col;
        for (const auto& [rc, m] : w.diffs[i + 1].entries) by_col[rc.second].push_back({rc.first, &m});
        std::map<std::pair<int, int>, typename Cat::Mor> acc;
        for (const auto& [rc, m] : w.diffs[i].entries) {
            auto it = by_col.find(rc.first);
            if (it == by_col.end()) continue;
            for (const auto& [row2, m2] : it->second) {
                auto key = std::make_pair(row2, rc.second);
                auto [slot, inserted] = acc.try_emplace(key, Cat::compose(*m2, m));
                if (!inserted) slot->second += Cat::compose(*m2, m);
            }
        }
        for (const auto& [key, m] : acc) {
            if (!m.is_zero()) {
                rep.d_squared = false;
                std::ostringstream os;
                os << "d^2 != 0 at levels " << i << "->" << i + 2 << " entry (" << key.first << ","
                   << key.second << ")";
                rep.first_failure = os.str();
                break;
            }
        }
    }
    return rep;
}

/// Deloops every loop summand and cancels +-identity differential entries,
/// in deterministic (level, row, column) order, preserving the homotopy
/// type within the window. Boundary effects are confined to the top level.
template <class Cat>
void simplify_window(Window<Cat>& w) {
    using Mor = typename Cat::Mor;
    bool changed = true;
    while (changed) {
        changed = false;
        // delooping pass
        for (size_t i = 0; i < w.levels.size() && !changed; ++i) {
            for (size_t j = 0; j < w.levels[i].size() && !changed; ++j) {
                if (!Cat::has_loop(w.levels[i][j].obj)) continue;
                changed = true;
                auto dl = Cat::deloop(w.levels[i][j].obj);
                int q = w.levels[i][j].q;
                // replace summand j by (reduced, q-1) and (reduced, q+1)
                std::vector<Summand<typename Cat::Obj>> lvl = w.levels[i];
                lvl[j] = {dl.reduced, q - 1};
                lvl.insert(lvl.begin() + j + 1, {dl.reduced, q + 1});
                auto remap = [&](int idx) { return idx > static_cast<int>(j) ? idx + 1 : idx; };
                if (i > 0) {
                    MorMatrix<Mor> nm;
                    for (const auto& [rc, m] : w.diffs[i - 1].entries) {
                        if (rc.first == static_cast<int>(j)) {
                            nm.add(j, rc.second, Cat::compose(dl.fwd_low, m));
                            nm.add(j + 1, rc.second, Cat::compose(dl.fwd_high, m));
                        } else {
                            nm.add(remap(rc.first), rc.second, m);
                        }
                    }
                    w.diffs[i - 1] = std::move(nm);
                }
                if (i < w.diffs.size()) {
                    MorMatrix<Mor> nm;
                    for (const auto& [rc, m] : w.diffs[i].entries) {
                        if (rc.second == static_cast<int>(j)) {
                            nm.add(rc.first, j, Cat::compose(m, dl.bwd_low));
                            nm.add(rc.first, j + 1, Cat::compose(m, dl.bwd_high));
                        } else {
                            nm.add(rc.first, remap(rc.second), m);
                        }
                    }
                    w.diffs[i] = std::move(nm);
                }
                w.levels[i] = std::move(lvl);
            }
        }
        if (changed) continue;
        // Gaussian elimination pass
        for (size_t i = 0; i < w.diffs.size() && !changed; ++i) {
            for (const auto& [rc, m] : w.diffs[i].entries) {
                long long sign = 0;
                if (w.levels[i][rc.second] .q != w.levels[i + 1][rc.first].q) continue;
                if (!Cat::is_unit_identity(m, sign)) continue;
                eliminate_pair<Cat>(w, static_cast<int>(i), rc.first, rc.second, sign);
                changed = true;
                break;
            }
        }
    }
}

/// Gaussian elimination only, without delooping: cancels +-identity
/// entries between equal summands in deterministic order.
template <class Cat>
void eliminate_only(Window<Cat>& w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < w.diffs.size() && !changed; ++i) {
            for (const auto& [rc, m] : w.diffs[i].entries) {
                long long sign = 0;
                if (w.levels[i][rc.second].q != w.levels[i + 1][rc.first].q) continue;
                if (!(w.levels[i][rc.second].obj == w.levels[i + 1][rc.first].obj)) continue;
                if (!Cat::is_unit_identity(m, sign)) continue;
                eliminate_pair<Cat>(w, static_cast<int>(i), rc.first, rc.second, sign);
                changed = true;
                break;
            }
        }
    }
}

/// Degree-0 chain map: comps[i] maps A.levels[i] to B.levels[i].
template <class Cat>
struct ChainMap {
    std::vector<MorMatrix<typename Cat::Mor>> comps;
};

/// Textbook mapping cone: Cone^n = A^{n+1} (+) B^n with differential
/// (a, b) -> (-d_A a, f a + d_B b). A-part summands come first.
template <class Cat>
Window<Cat> cone_up(const Window<Cat>& A, const Window<Cat>& B, const ChainMap<Cat>& f) {
    Window<Cat> c;
    int top = std::max(static_cast<int>(A.levels.size()) - 1, static_cast<int>(B.levels.size()));
    auto a_level = [&](int i) -> const std::vector<Summand<typename Cat::Obj>>* {
        return (i >= 0 && i < static_cast<int>(A.levels.size())) ? &A.levels[i] : nullptr;
    };
    auto b_level = [&](int i) -> const std::vector<Summand<typename Cat::Obj>>* {
        return (i >= 0 && i < static_cast<int>(B.levels.size())) ? &B.levels[i] : nullptr;
    };
    for (int i = 0; i < top; ++i) {
        std::vector<Summand<typename Cat::Obj>> lvl;
        if (auto* a = a_level(i + 1)) lvl.insert(lvl.end(), a->begin(), a->end());
        if (auto* b = b_level(i)) lvl.insert(lvl.end(), b->begin(), b->end());
        c.levels.push_back(std::move(lvl));
    }
    for (int i = 0; i + 1 < top; ++i) {
        MorMatrix<typename Cat::Mor> d;
        int a_count = a_level(i + 1) ? static_cast<int>(a_level(i + 1)->size()) : 0;
        int a_count_next = a_level(i + 2) ? static_cast<int>(a_level(i + 2)->size()) : 0;
        if (i + 1 < static_cast<int>(A.diffs.size())) {
            for (const auto& [rc, m] : A.diffs[i + 1].entries) d.add(rc.first, rc.second, -m);
        }
        if (i + 1 < static_cast<int>(f.comps.size())) {
            for (const auto& [rc, m] : f.comps[i + 1].entries)
                d.add(a_count_next + rc.first, rc.second, m);
        }
        if (i < static_cast<int>(B.diffs.size())) {
            for (const auto& [rc, m] : B.diffs[i].entries)
                d.add(a_count_next + rc.first, a_count + rc.second, m);
        }
        c.diffs.push_back(std::move(d));
    }
    return c;
}

/// Cone placing A unshifted: Cone^n = A^n (+) B^{n-1}, differential
/// (a, b) -> (-d_A a, f a + d_B b) with f read as A^n -> B^n sitting in
/// level n+1. Reproduces a complex from its head and its tail on the nose.
template <class Cat>
Window<Cat> cone_down(const Window<Cat>& A, const Window<Cat>& B, const ChainMap<Cat>& f) {
    Window<Cat> c;
    int top = std::max(static_cast<int>(A.levels.size()), static_cast<int>(B.levels.size()) + 1);
    auto a_size = [&](int i) {
        return (i >= 0 && i < static_cast<int>(A.levels.size())) ? static_cast<int>(A.levels[i].size()) : 0;
    };
    for (int i = 0; i < top; ++i) {
        std::vector<Summand<typename Cat::Obj>> lvl;
        if (i < static_cast<int>(A.levels.size()))
            lvl.insert(lvl.end(), A.levels[i].begin(), A.levels[i].end());
        if (i - 1 >= 0 && i - 1 < static_cast<int>(B.levels.size()))
            lvl.insert(lvl.end(), B.levels[i - 1].begin(), B.levels[i - 1].end());
        c.levels.push_back(std::move(lvl));
    }
    for (int i = 0; i + 1 < top; ++i) {
        MorMatrix<typename Cat::Mor> d;
        if (i < static_cast<int>(A.diffs.size())) {
            for (const auto& [rc, m] : A.diffs[i].entries) d.add(rc.first, rc.second, -m);
        }
        if (i < static_cast<int>(f.comps.size())) {
            for (const auto& [rc, m] : f.comps[i].entries)
                d.add(a_size(i + 1) + rc.first, rc.second, m);
        }
        if (i - 1 >= 0 && i - 1 < static_cast<int>(B.diffs.size())) {
            for (const auto& [rc, m] : B.diffs[i - 1].entries)
                d.add(a_size(i + 1) + rc.first, a_size(i) + rc.second, m);
        }
        c.diffs.push_back(std::move(d));
    }
    return c;
}

/// The subcomplex with the degree-0 part deleted: level 0 becomes empty and
/// everything else is untouched.
template <class Cat>
Window<Cat> drop_degree_zero(const Window<Cat>& w) {
    Window<Cat> out = w;
    if (!out.levels.empty()) out.levels[0].clear();
    if (!out.diffs.empty()) out.diffs[0].entries.clear();
    return out;
}

template <class Cat>
void eliminate_pair(Window<Cat>& w, int level, int row, int col, long long sign) {
    using Mor = typename Cat::Mor;
    // corrections within the level differential: new = old - out * phi^{-1} * in
    MorMatrix<Mor> corrected;
    const auto& d = w.diffs[level];
    for (const auto& [rc, m] : d.entries) {
        if (rc.first == row || rc.second == col) continue;
        corrected.add(rc.first, rc.second, m);
    }
    for (const auto& [rc_in, m_in] : d.entries) {
        if (rc_in.first != row || rc_in.second == col) continue;   // d[row][c'], c' != col
        for (const auto& [rc_out, m_out] : d.entries) {
            if (rc_out.second != col || rc_out.first == row) continue;  // d[r'][col]
            Mor corr = Cat::compose(m_out, m_in);
            corrected.add(rc_out.first, rc_in.second, sign > 0 ? -corr : corr);
        }
    }
    // drop the two summands and reindex
    auto drop = [&](std::vector<Summand<typename Cat::Obj>>& lvl, int idx) {
        lvl.erase(lvl.begin() + idx);
    };
    auto remap_row = [&](MorMatrix<Mor>& mm, int removed) {
        MorMatrix<Mor> out;
        for (const auto& [rc, m] : mm.entries) {
            if (rc.first == removed) continue;
            out.add(rc.first > removed ? rc.first - 1 : rc.first, rc.second, m);
        }
        mm = std::move(out);
    };
    auto remap_col = [&](MorMatrix<Mor>& mm, int removed) {
        MorMatrix<Mor> out;
        for (const auto& [rc, m] : mm.entries) {
            if (rc.second == removed) continue;
            out.add(rc.first, rc.second > removed ? rc.second - 1 : rc.second, m);
        }
        mm = std::move(out);
    };

    // corrected matrix still uses old indices; remap rows then cols
    remap_row(corrected, row);
    remap_col(corrected, col);
    w.diffs[level] = std::move(corrected);

    if (level > 0) remap_row(w.diffs[level - 1], col);
    if (level + 1 < static_cast<int>(w.diffs.size())) remap_col(w.diffs[level + 1], row);
    drop(w.levels[level], col);
    drop(w.levels[level + 1], row);
}

}  // namespace skein
