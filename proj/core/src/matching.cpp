#include "skein/matching.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace skein {

Matching::Matching(int n, std::vector<int> involution) : n_(n), inv_(std::move(involution)) {
    validate();
}

void Matching::validate() const {
    if (static_cast<int>(inv_.size()) != 2 * n_)
        throw std::invalid_argument("Matching: involution size mismatch");
    for (int p = 0; p < 2 * n_; ++p) {
        int q = inv_[p];
        if (q < 0 || q >= 2 * n_ || q == p || inv_[q] != p)
            throw std::invalid_argument("Matching: not a fixed-point-free involution");
    }
    // crossingless in the circular order = balanced scan in the linear order
    std::vector<int> stack;
    for (int p = 0; p < 2 * n_; ++p) {
        if (inv_[p] > p) {
            stack.push_back(p);
        } else {
            if (stack.empty() || stack.back() != inv_[p])
                throw std::invalid_argument("Matching: crossing pair");
            stack.pop_back();
        }
    }
}

Matching Matching::identity(int n) {
    std::vector<int> inv(2 * n);
    for (int i = 0; i < n; ++i) {
        inv[i] = 2 * n - 1 - i;
        inv[2 * n - 1 - i] = i;
    }
    return Matching(n, std::move(inv));
}

Matching Matching::turnback(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("turnback: index out of range");
    Matching id = identity(n);
    std::vector<int> inv = id.inv_;
    int b0 = i - 1, b1 = i;
    int t0 = 2 * n - i, t1 = 2 * n - 1 - i;  // top positions i-1, i
    inv[b0] = b1;
    inv[b1] = b0;
    inv[t0] = t1;
    inv[t1] = t0;
    return Matching(n, std::move(inv));
}

bool Matching::operator<(const Matching& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return inv_ < o.inv_;
}

std::pair<Matching, int> Matching::stack(const Matching& bottom, const Matching& top) {
    if (bottom.n_ != top.n_) throw std::invalid_argument("Matching::stack: strand mismatch");
    const int n = bottom.n_;
    const int N = 2 * n;
    // nodes 0..N-1: bottom diagram's points; N..2N-1: top diagram's points
    // interface: bottom's top position j <-> top's bottom point j
    auto bottom_node = [&](int p) { return p; };
    auto top_node = [&](int p) { return N + p; };

    std::vector<int> next(2 * N, -1);  // follow the strand inside each diagram
    for (int p = 0; p < N; ++p) next[bottom_node(p)] = bottom_node(bottom.inv_[p]);
    for (int p = 0; p < N; ++p) next[top_node(p)] = top_node(top.inv_[p]);

    auto is_external = [&](int node) {
        if (node < N) return node < n;          // bottom diagram's bottom points
        return (node - N) >= n;                 // top diagram's top points
    };
    auto cross_interface = [&](int node) -> int {
        if (node < N) {
            // bottom diagram top point 2n-1-j -> top diagram bottom point j
            int j = 2 * n - 1 - node;
            return top_node(j);
        }
        int j = node - N;
        return bottom_node(2 * n - 1 - j);
    };

    std::vector<int> result_inv(N, -1);
    auto external_label = [&](int node) {
        // result numbering: bottom points keep 0..n-1; top's top point
        // 2n-1-j labels the result's top position j, i.e. the same index.
        if (node < N) return node;
        return node - N;
    };

    std::vector<char> seen(2 * N, 0);
    for (int p = 0; p < 2 * N; ++p) {
        if (seen[p] || !is_external(p)) continue;
        int cur = p;
        seen[cur] = 1;
        int walk = next[cur];
        while (true) {
            seen[walk] = 1;
            if (is_external(walk)) break;
            walk = cross_interface(walk);
            seen[walk] = 1;
            walk = next[walk];
        }
        int a = external_label(p), b = external_label(walk);
        result_inv[a] = b;
        result_inv[b] = a;
    }

    int loops = 0;
    for (int p = 0; p < 2 * N; ++p) {
        if (seen[p] || is_external(p)) continue;
        ++loops;
        int cur = p;
        while (!seen[cur]) {
            seen[cur] = 1;
            int w = next[cur];
            seen[w] = 1;
            cur = cross_interface(w);
        }
    }
    return {Matching(n, std::move(result_inv)), loops};
}

Matching Matching::with_extra_strand() const {
    const int n = n_;
    std::vector<int> inv(2 * n + 2, -1);
    auto relabel = [&](int p) { return p < n ? p : p + 2; };
    for (int p = 0; p < 2 * n; ++p) inv[relabel(p)] = relabel(inv_[p]);
    inv[n] = n + 1;
    inv[n + 1] = n;
    return Matching(n + 1, std::move(inv));
}

Matching Matching::vertical_flip() const {
    // point p maps to 2n-1-p under the flip
    const int N = 2 * n_;
    std::vector<int> inv(N);
    for (int p = 0; p < N; ++p) inv[N - 1 - p] = N - 1 - inv_[p];
    return Matching(n_, std::move(inv));
}

std::string Matching::parens() const {
    std::string s;
    s.reserve(2 * n_);
    for (int p = 0; p < 2 * n_; ++p) s.push_back(inv_[p] > p ? '(' : ')');
    return s;
}

const std::vector<Matching>& Matching::all(int n) {
    static std::map<int, std::vector<Matching>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<Matching> out;
    std::vector<int> inv(2 * n, -1);
    // backtracking over balanced-parenthesis scans
    std::vector<int> stack;
    auto rec = [&](auto&& self, int p) -> void {
        if (p == 2 * n) {
            if (stack.empty()) out.push_back(Matching(n, inv));
            return;
        }
        // open
        if (static_cast<int>(stack.size()) < 2 * n - p - 1) {
            stack.push_back(p);
            self(self, p + 1);
            stack.pop_back();
        }
        // close
        if (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            inv[p] = q;
            inv[q] = p;
            self(self, p + 1);
            stack.push_back(q);
        }
    };
    if (n > 0)
        rec(rec, 0);
    else
        out.push_back(Matching(0, {}));
    return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace skein
