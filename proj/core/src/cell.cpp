#include "skein/cell.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace skein {

HalfDiagram::HalfDiagram(int n, std::vector<int> pairing) : n_(n), pair_(std::move(pairing)) {
    validate();
    k_ = 0;
    for (int p = 0; p < n_; ++p)
        if (pair_[p] < 0) ++k_;
}

void HalfDiagram::validate() const {
    if (static_cast<int>(pair_.size()) != n_)
        throw std::invalid_argument("HalfDiagram: size mismatch");
    int depth = 0;
    for (int p = 0; p < n_; ++p) {
        if (pair_[p] < 0) {
            if (depth != 0) throw std::invalid_argument("HalfDiagram: defect under an arc");
        } else if (pair_[p] > p) {
            ++depth;
        } else {
            if (pair_[pair_[p]] != p || depth == 0)
                throw std::invalid_argument("HalfDiagram: bad pairing");
            --depth;
        }
    }
    if (depth != 0) throw std::invalid_argument("HalfDiagram: unbalanced");
}

bool HalfDiagram::operator<(const HalfDiagram& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return pair_ < o.pair_;
}

std::string HalfDiagram::str() const {
    std::string s;
    for (int p = 0; p < n_; ++p)
        s.push_back(pair_[p] < 0 ? '|' : (pair_[p] > p ? '(' : ')'));
    return s;
}

const std::vector<HalfDiagram>& HalfDiagram::all(int n, int k) {
    static std::map<std::pair<int, int>, std::vector<HalfDiagram>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<HalfDiagram> out;
    std::vector<int> pair(n, -1);
    std::vector<int> stack;
    auto rec = [&](auto&& self, int p, int defects) -> void {
        if (p == n) {
            if (stack.empty() && defects == k) out.push_back(HalfDiagram(n, pair));
            return;
        }
        if (stack.empty() && defects < k) {
            pair[p] = -1;
            self(self, p + 1, defects + 1);
        }
        stack.push_back(p);
        self(self, p + 1, defects);
        stack.pop_back();
        if (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            pair[p] = q;
            pair[q] = p;
            self(self, p + 1, defects);
            pair[p] = -1;
            pair[q] = -1;
            stack.push_back(q);
        }
    };
    if ((n - k) % 2 == 0 && k >= 0 && k <= n) rec(rec, 0, 0);
    return cache.emplace(key, std::move(out)).first->second;
}

CellVector::CellVector(const HalfDiagram& d, RatFunc c) : n_(d.n()), k_(d.defects()) {
    if (!c.is_zero()) terms_.emplace(d, std::move(c));
}

void CellVector::add_term(const HalfDiagram& d, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CellVector CellVector::operator+(const CellVector& o) const {
    CellVector r = *this;
    for (const auto& [d, c] : o.terms_) r.add_term(d, c);
    return r;
}

CellVector CellVector::operator*(const RatFunc& c) const {
    CellVector r(n_, k_);
    if (c.is_zero()) return r;
    for (const auto& [d, x] : terms_) r.terms_.emplace(d, x * c);
    return r;
}

namespace {

// Action of one matching on one half-diagram; returns false when the
// configuration reduces the defect count (acts as zero).
bool act_matching(const Matching& m, const HalfDiagram& d, HalfDiagram& out, int& loops) {
    const int n = m.n();
    loops = 0;
    // the half-diagram sits on top: its point j meets m's top position j,
    // i.e. m's point 2n-1-j
    std::vector<int> result(n, -2);
    std::vector<char> seen_bottom(n, 0), seen_top(n, 0);

    auto top_of = [&](int mpoint) { return 2 * n - 1 - mpoint; };  // top position index

    for (int p = 0; p < n; ++p) {
        if (seen_bottom[p]) continue;
        // walk from bottom point p
        int cur = m.partner(p);
        while (true) {
            if (cur < n) {  // bottom arc of m
                result[p] = cur;
                result[cur] = p;
                seen_bottom[p] = seen_bottom[cur] = 1;
                break;
            }
            int j = top_of(cur);
            seen_top[j] = 1;
            if (d.is_defect(j)) {
                result[p] = -1;  // through strand exits upward
                seen_bottom[p] = 1;
                break;
            }
            int j2 = d.partner(j);
            seen_top[j2] = 1;
            cur = m.partner(2 * n - 1 - j2);
        }
    }
    // defect-to-defect connections through m reduce the count: detect by
    // scanning top positions not reached from any bottom point
    for (int j = 0; j < n; ++j) {
        if (seen_top[j] || !d.is_defect(j)) continue;
        // this defect meets an arc of m joining it to another top position
        return false;
    }
    // loops: cycles among m's top arcs and d's arcs
    for (int j = 0; j < n; ++j) {
        if (seen_top[j] || d.is_defect(j)) continue;
        ++loops;
        int cur = j;
        while (!seen_top[cur]) {
            seen_top[cur] = 1;
            int j2 = d.partner(cur);
            seen_top[j2] = 1;
            int mp = m.partner(2 * n - 1 - j2);
            cur = top_of(mp);
        }
    }
    out = HalfDiagram(n, std::move(result));
    return true;
}

}  // namespace

CellVector cell_action(const TLElement& x, const CellVector& v) {
    if (x.n() != v.n()) throw std::invalid_argument("cell_action: strand mismatch");
    CellVector r(v.n(), v.defects());
    const RatFunc loopval = RatFunc(qint(2));
    for (const auto& [m, cm] : x.terms()) {
        for (const auto& [d, cd] : v.terms()) {
            HalfDiagram out;
            int loops = 0;
            if (!act_matching(m, d, out, loops)) continue;
            RatFunc c = cm * cd;
            for (int l = 0; l < loops; ++l) c *= loopval;
            r.add_term(out, c);
        }
    }
    return r;
}

bool in_projector_ideal(const TLElement& x, int N) {
    const int n = x.n();
    for (int k = n % 2; k < N; k += 2) {
        for (const auto& d : HalfDiagram::all(n, k)) {
            if (!cell_action(x, CellVector(d)).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace skein
