#include "skein/tl.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace skein {

TLElement::TLElement(const Matching& m, RatFunc c) : n_(m.n()) {
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

RatFunc TLElement::coeff(const Matching& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RatFunc() : it->second;
}

void TLElement::add_term(const Matching& m, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TLElement& TLElement::operator+=(const TLElement& o) {
    if (n_ != o.n_ && !o.terms_.empty() && !terms_.empty())
        throw std::invalid_argument("TLElement: strand-count mismatch");
    if (terms_.empty()) n_ = o.n_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TLElement& TLElement::operator-=(const TLElement& o) {
    *this += -o;
    return *this;
}

TLElement TLElement::operator+(const TLElement& o) const { TLElement r = *this; r += o; return r; }
TLElement TLElement::operator-(const TLElement& o) const { TLElement r = *this; r -= o; return r; }

TLElement TLElement::operator*(const TLElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("TLElement: strand-count mismatch");
    TLElement r(n_);
    // Accumulate numerators bucketed by denominator so that rational
    // canonicalization runs once per bucket instead of once per pair.
    std::map<Matching, std::map<LaurentPoly, LaurentPoly>> buckets;
    std::map<std::pair<const LaurentPoly*, const LaurentPoly*>, LaurentPoly> den_cache;
    const LaurentPoly loop = qint(2);
    std::vector<LaurentPoly> loop_pow = {LaurentPoly::one(), loop};
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            auto [m, loops] = Matching::stack(ma, mb);
            while (loops >= static_cast<int>(loop_pow.size()))
                loop_pow.push_back(loop_pow.back() * loop);
            auto key = std::make_pair(&ca.den(), &cb.den());
            auto it = den_cache.find(key);
            if (it == den_cache.end()) it = den_cache.emplace(key, ca.den() * cb.den()).first;
            LaurentPoly num = ca.num() * cb.num();
            if (loops > 0) num = num * loop_pow[loops];
            auto& bucket = buckets[m][it->second];
            bucket += num;
        }
    }
    for (auto& [m, by_den] : buckets) {
        RatFunc c;
        for (auto& [den, num] : by_den) c += RatFunc(num, den);
        r.add_term(m, c);
    }
    return r;
}

TLElement TLElement::operator*(const RatFunc& c) const {
    TLElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
    return r;
}

TLElement TLElement::operator-() const {
    TLElement r(n_);
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, -x);
    return r;
}

bool TLElement::operator==(const TLElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [m, c] : terms_) {
        auto it = o.terms_.find(m);
        if (it == o.terms_.end() || !(it->second == c)) return false;
    }
    return true;
}

RatFunc TLElement::markov_trace() const {
    const LaurentPoly loop = qint(2);
    std::vector<LaurentPoly> loop_pow = {LaurentPoly::one(), loop};
    std::map<LaurentPoly, LaurentPoly> buckets;  // den -> accumulated num
    for (const auto& [m, c] : terms_) {
        // closure pairing: bottom i joins top position i (point 2n-1-i)
        const int N = 2 * n_;
        std::vector<char> seen(N, 0);
        int loops = 0;
        for (int p = 0; p < N; ++p) {
            if (seen[p]) continue;
            ++loops;
            int cur = p;
            while (!seen[cur]) {
                seen[cur] = 1;
                int w = m.partner(cur);
                seen[w] = 1;
                cur = N - 1 - w;  // closure edge
            }
        }
        while (loops >= static_cast<int>(loop_pow.size()))
            loop_pow.push_back(loop_pow.back() * loop);
        buckets[c.den()] += c.num() * loop_pow[loops];
    }
    RatFunc out;
    for (auto& [den, num] : buckets) out += RatFunc(num, den);
    return out;
}

TLElement TLElement::partial_close() const {
    if (n_ < 1) throw std::invalid_argument("partial_close: no strand to close");
    TLElement r(n_ - 1);
    const RatFunc loop = RatFunc(qint(2));
    const int a = n_ - 1;  // last bottom point
    const int b = n_;      // last top point (position n-1)
    for (const auto& [m, c] : terms_) {
        RatFunc v = c;
        std::vector<int> inv(2 * n_ - 2, -1);
        auto relabel = [&](int p) { return p < a ? p : p - 2; };
        if (m.partner(a) == b) {
            v *= loop;  // the closed strand becomes a free loop
            for (int p = 0; p < 2 * n_; ++p) {
                if (p == a || p == b) continue;
                inv[relabel(p)] = relabel(m.partner(p));
            }
        } else {
            int pa = m.partner(a), pb = m.partner(b);
            for (int p = 0; p < 2 * n_; ++p) {
                if (p == a || p == b || p == pa || p == pb) continue;
                inv[relabel(p)] = relabel(m.partner(p));
            }
            inv[relabel(pa)] = relabel(pb);
            inv[relabel(pb)] = relabel(pa);
        }
        r.add_term(Matching(n_ - 1, std::move(inv)), v);
    }
    return r;
}

TLElement TLElement::with_extra_strand() const {
    TLElement r(n_ + 1);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.with_extra_strand(), c);
    return r;
}

std::string TLElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << m.parens();
    }
    return os.str();
}

TLElement operator*(const RatFunc& c, const TLElement& x) { return x * c; }

const TLElement& jones_wenzl(int n) {
    if (n < 1) throw std::invalid_argument("jones_wenzl: n >= 1 required");
    static std::map<int, TLElement> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (cache.find(1) == cache.end()) cache.emplace(1, TLElement::identity(1));
    for (int k = 2; k <= n; ++k) {
        if (cache.count(k)) continue;
        const TLElement prev = cache.at(k - 1).with_extra_strand();
        TLElement pep = prev * TLElement::e(k, k - 1) * prev;
        cache.emplace(k, prev - qint_ratio(k - 1, k) * pep);
    }
    return cache.at(n);
}

bool TurnbackReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string TurnbackReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return c.name;
    return "";
}

TurnbackReport turnback_annihilation(int n) {
    TurnbackReport rep;
    rep.n = n;
    const TLElement& p = jones_wenzl(n);
    for (int i = 1; i <= n - 1; ++i) {
        TLElement ei = TLElement::e(n, i);
        rep.checks.push_back({"e_" + std::to_string(i) + " p_n = 0", (ei * p).is_zero()});
        rep.checks.push_back({"p_n e_" + std::to_string(i) + " = 0", (p * ei).is_zero()});
    }
    rep.checks.push_back({"p_n idempotent", p * p == p});
    return rep;
}

}  // namespace skein
