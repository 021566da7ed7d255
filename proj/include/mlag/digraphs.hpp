#ifndef MLAG_DIGRAPHS_HPP
#define MLAG_DIGRAPHS_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "mlag/multi_index.hpp"
#include "mlag/polynomial.hpp"

namespace mlag {

// Layered vertex set {(i,j) : 1 <= i <= r, 1 <= j <= n_i}; an edge
// (i,j) -> (i',j') is admissible iff i <= i'. Vertices are numbered
// layer-major: layer 1 first, then layer 2, ...
struct LayerGraphSpec {
    MultiIndex layer_sizes;

    int vertex_count() const { return total(layer_sizes); }
    int layers() const { return static_cast<int>(layer_sizes.size()); }
    int layer_of(int v) const;
};

// Partial injective successor map on the layered vertices; -1 = undefined.
struct LaguerreDigraph {
    std::vector<int> successor;
};

struct DigraphStats {
    int paths = 0;                 // path components, isolated vertices included
    std::vector<int> cycles;       // cycle count per layer
};

struct EnumerationLimits {
    int max_vertices = 10;
    long long max_digraphs = 10'000'000;
};

struct EnumerationCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Visits every admissible partial injective successor map exactly once, in a
// deterministic backtracking order. Throws EnumerationCapExceeded if the
// vertex cap or the digraph-count cap is hit.
void enumerate_digraphs(const LayerGraphSpec& spec, const EnumerationLimits& limits,
                        const std::function<void(const LaguerreDigraph&)>& visit);

long long count_digraphs(const LayerGraphSpec& spec,
                         const EnumerationLimits& limits = {});

DigraphStats digraph_stats(const LayerGraphSpec& spec, const LaguerreDigraph& g);

// sum over G in LD_n of x^{pa(G)} prod_i b_i^{cyc_i(G)}; equals
// explicit_laguerre(layer_sizes) exactly (the brute-force oracle).
Polynomial combinatorial_laguerre(const LayerGraphSpec& spec,
                                  const EnumerationLimits& limits = {});

}  // namespace mlag

#endif
