#pragma once

#include <map>
#include <vector>

#include "skein/tl.hpp"

namespace skein {

/// Basis vector of the standard (cell) module V_{n,k}: a crossingless
/// partial matching of n points with k unmatched defects, no defect lying
/// under an arc.
class HalfDiagram {
public:
    HalfDiagram() : n_(0), k_(0) {}
    HalfDiagram(int n, std::vector<int> pairing);  // pairing[i] = partner or -1

    static const std::vector<HalfDiagram>& all(int n, int k);

    int n() const { return n_; }
    int defects() const { return k_; }
    int partner(int p) const { return pair_[p]; }
    bool is_defect(int p) const { return pair_[p] < 0; }

    bool operator==(const HalfDiagram& o) const { return n_ == o.n_ && pair_ == o.pair_; }
    bool operator<(const HalfDiagram& o) const;

    std::string str() const;

private:
    int n_, k_;
    std::vector<int> pair_;
    void validate() const;
};

class CellVector {
public:
    CellVector(int n, int k) : n_(n), k_(k) {}
    CellVector(const HalfDiagram& d, RatFunc c = RatFunc(1));

    int n() const { return n_; }
    int defects() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<HalfDiagram, RatFunc>& terms() const { return terms_; }

    void add_term(const HalfDiagram& d, const RatFunc& c);
    CellVector operator+(const CellVector& o) const;
    CellVector operator*(const RatFunc& c) const;
    bool operator==(const CellVector& o) const { return n_ == o.n_ && terms_ == o.terms_; }

private:
    int n_, k_;
    std::map<HalfDiagram, RatFunc> terms_;
};

/// Standard-module action: stacks x under the half-diagram. Loops evaluate
/// to [2]; any configuration that reduces the defect count acts as zero.
CellVector cell_action(const TLElement& x, const CellVector& v);

/// Generic-parameter ideal-membership criterion: x lies in the two-sided
/// ideal generated by p_N inside TL_n if and only if x kills every cell
/// module V_{n,k} with k < N. Requires x.n() >= N.
bool in_projector_ideal(const TLElement& x, int N);

}  // namespace skein
