#include "skein/glue.hpp"

#include <map>
#include <stdexcept>

namespace skein {
namespace glue {

void Clusters::finish() {
    genus.assign(clusters(), 0);
    for (int c = 0; c < clusters(); ++c) {
        int b = static_cast<int>(outer[c].size());
        int twice = 2 - b - chi[c];
        if (twice < 0 || twice % 2 != 0)
            throw std::logic_error("glue: inconsistent component topology");
        genus[c] = twice / 2;
    }
}

const std::vector<std::pair<std::uint64_t, int>>& disk_expansion(int b, int parity) {
    static std::map<std::pair<int, int>, std::vector<std::pair<std::uint64_t, int>>> cache;
    auto key = std::make_pair(b, parity);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::pair<std::uint64_t, int>> out;
    if (b == 1) {
        out.push_back({parity ? 1u : 0u, 0});
    } else {
        // cut the first circle off: dotted disk beside the rest, or plain
        // disk beside the rest carrying one extra dot
        for (const auto& [mask, ap] : disk_expansion(b - 1, parity))
            out.push_back({(mask << 1) | 1u, ap});
        int d2 = parity + 1;
        for (const auto& [mask, ap] : disk_expansion(b - 1, d2 % 2))
            out.push_back({mask << 1, ap + d2 / 2});
    }
    return cache.emplace(key, std::move(out)).first->second;
}

void evaluate_terms(const Clusters& cl, const std::map<std::uint64_t, AlphaPoly>& f_terms,
                    const std::map<std::uint64_t, AlphaPoly>* g_terms, Cob& out) {
    static const std::map<std::uint64_t, AlphaPoly> kUnit = {{0u, AlphaPoly(1)}};
    const auto& gt = g_terms ? *g_terms : kUnit;
    const int n_clusters = cl.clusters();
    std::vector<int> dots(n_clusters);
    for (const auto& [mf, cf] : f_terms) {
        for (const auto& [mg, cg] : gt) {
            std::fill(dots.begin(), dots.end(), 0);
            for (int c = 0; c < cl.nf; ++c)
                if (mf & (std::uint64_t(1) << c)) ++dots[cl.f_cluster[c]];
            for (int c = 0; c < cl.ng; ++c)
                if (mg & (std::uint64_t(1) << c)) ++dots[cl.g_cluster[c]];

            AlphaPoly coeff = cf * cg;
            int alpha_pow = 0;
            long long factor = 1;
            bool dead = false;
            std::vector<std::pair<std::uint64_t, int>> partial = {{0u, 0}};
            for (int c = 0; c < n_clusters && !dead; ++c) {
                int d = dots[c] + cl.genus[c];
                factor <<= cl.genus[c];
                int b = static_cast<int>(cl.outer[c].size());
                if (b == 0) {
                    if (d % 2 == 0)
                        dead = true;  // undotted closed component
                    else
                        alpha_pow += (d - 1) / 2;
                    continue;
                }
                alpha_pow += d / 2;
                const auto& exp = disk_expansion(b, d % 2);
                std::vector<std::pair<std::uint64_t, int>> next;
                next.reserve(partial.size() * exp.size());
                for (const auto& [pm, pa] : partial) {
                    for (const auto& [lm, la] : exp) {
                        std::uint64_t gm = pm;
                        for (int j = 0; j < b; ++j)
                            if (lm & (std::uint64_t(1) << j))
                                gm |= std::uint64_t(1) << cl.outer[c][j];
                        next.push_back({gm, pa + la});
                    }
                }
                partial = std::move(next);
            }
            if (dead) continue;
            AlphaPoly base = coeff * AlphaPoly::alpha_power(alpha_pow, factor);
            for (const auto& [gm, ga] : partial)
                out.add_term(gm, ga ? base * AlphaPoly::alpha_power(ga) : base);
        }
    }
}

}  // namespace glue
}  // namespace skein
