#pragma once

#include <map>
#include <string>
#include <vector>

#include "skein/matching.hpp"
#include "skein/ratfunc.hpp"

namespace skein {

/// Element of the Temperley-Lieb algebra TL_n over exact rational-function
/// scalars. Stacking removes closed loops at a factor of [2] each.
class TLElement {
public:
    TLElement() : n_(0) {}
    explicit TLElement(int n) : n_(n) {}
    TLElement(const Matching& m, RatFunc c = RatFunc(1));

    static TLElement identity(int n) { return TLElement(Matching::identity(n)); }
    static TLElement e(int n, int i) { return TLElement(Matching::turnback(n, i)); }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Matching, RatFunc>& terms() const { return terms_; }
    RatFunc coeff(const Matching& m) const;

    void add_term(const Matching& m, const RatFunc& c);
    TLElement& operator+=(const TLElement& o);
    TLElement& operator-=(const TLElement& o);
    TLElement operator+(const TLElement& o) const;
    TLElement operator-(const TLElement& o) const;
    TLElement operator*(const TLElement& o) const;  // this stacked below o
    TLElement operator*(const RatFunc& c) const;
    TLElement operator-() const;
    bool operator==(const TLElement& o) const;
    bool operator!=(const TLElement& o) const { return !(*this == o); }

    /// Plat closure in the sphere; every loop evaluates to [2].
    RatFunc markov_trace() const;
    /// Caps the last top point to the last bottom point (TL_n -> TL_{n-1}).
    TLElement partial_close() const;
    /// TL_n -> TL_{n+1}, extra through strand on the right.
    TLElement with_extra_strand() const;

    std::string str() const;

private:
    int n_;
    std::map<Matching, RatFunc> terms_;
};

TLElement operator*(const RatFunc& c, const TLElement& x);

/// Jones-Wenzl projector p_n by the Wenzl recursion; memoized behind a
/// single-writer cache.
const TLElement& jones_wenzl(int n);

struct TurnbackCheck {
    std::string name;
    bool pass;
};

struct TurnbackReport {
    int n;
    std::vector<TurnbackCheck> checks;
    bool pass() const;
    std::string first_failure() const;
};

/// Verifies e_i p_n = p_n e_i = 0 for all i and p_n^2 = p_n.
TurnbackReport turnback_annihilation(int n);

}  // namespace skein
