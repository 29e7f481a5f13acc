#pragma once

#include <string>
#include <utility>
#include <vector>

namespace skein {

/// Crossingless perfect matching of 2n boundary points of the disk.
/// Points are numbered circularly: bottom points 0..n-1 left to right,
/// then up the right side, so top position j (from the left) is point
/// 2n-1-j. Canonically encoded as a balanced parenthesis scan.
class Matching {
public:
    Matching() : n_(0) {}
    Matching(int n, std::vector<int> involution);

    static Matching identity(int n);
    /// The cup-cap diagram of the generator e_i, 1 <= i <= n-1.
    static Matching turnback(int n, int i);
    static const std::vector<Matching>& all(int n);  // Catalan-many, cached

    int n() const { return n_; }
    int points() const { return 2 * n_; }
    int partner(int p) const { return inv_[p]; }
    const std::vector<int>& involution() const { return inv_; }

    /// Index of the top point at position j from the left.
    int top_point(int j) const { return 2 * n_ - 1 - j; }

    bool operator==(const Matching& o) const { return n_ == o.n_ && inv_ == o.inv_; }
    bool operator!=(const Matching& o) const { return !(*this == o); }
    bool operator<(const Matching& o) const;

    /// bottom on the bottom, top stacked above; returns the composite and
    /// the number of closed loops formed.
    static std::pair<Matching, int> stack(const Matching& bottom, const Matching& top);

    /// Adds one through strand on the right (TL_{n} -> TL_{n+1} inclusion).
    Matching with_extra_strand() const;

    /// Reflection through a horizontal line (bottom and top swapped).
    Matching vertical_flip() const;

    std::string parens() const;
    std::string str() const { return parens(); }

private:
    int n_;
    std::vector<int> inv_;
    void validate() const;
};

}  // namespace skein
