#pragma once

#include <cstdint>
#include <vector>

#include "skein/cob.hpp"

namespace skein {
namespace glue {

/// Shared machinery for gluing-type operations (composition, horizontal
/// stacking, strand closure): components of the glued surface are clusters
/// of the factors' disk pieces, and every term pair is evaluated by the
/// sphere/dot/neck-cutting relations.
struct Clusters {
    int nf = 0, ng = 0;                    // boundary circles of the factors
    std::vector<int> f_cluster, g_cluster; // circle id -> cluster index
    std::vector<int> chi;                  // per cluster: pieces minus interface
    std::vector<std::vector<int>> outer;   // per cluster: outer circle ids
    std::vector<int> genus;                // derived by finish()

    int clusters() const { return static_cast<int>(chi.size()); }
    /// Computes genus per cluster; throws on inconsistent topology.
    void finish();
};

/// Expansion of a genus-zero component with b boundary circles and dot
/// parity into dotted disks: (local dotted subset, alpha power) pairs.
const std::vector<std::pair<std::uint64_t, int>>& disk_expansion(int b, int parity);

/// Evaluates all term pairs of f x g through the cluster structure into
/// `out` (whose endpoints the caller fixed). Pass g = nullptr for
/// single-factor transports.
void evaluate_terms(const Clusters& cl, const std::map<std::uint64_t, AlphaPoly>& f_terms,
                    const std::map<std::uint64_t, AlphaPoly>* g_terms, Cob& out);

}  // namespace glue
}  // namespace skein
