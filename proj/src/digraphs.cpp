#include "mlag/digraphs.hpp"

#include <cassert>

namespace mlag {

int LayerGraphSpec::layer_of(int v) const {
    int acc = 0;
    for (int i = 0; i < layers(); ++i) {
        acc += layer_sizes[i];
        if (v < acc) return i;
    }
    throw std::out_of_range("layer_of: vertex out of range");
}

namespace {

struct Enumerator {
    const LayerGraphSpec& spec;
    const EnumerationLimits& limits;
    const std::function<void(const LaguerreDigraph&)>& visit;
    int n;
    std::vector<int> layer;        // layer per vertex
    LaguerreDigraph g;
    std::uint32_t used = 0;        // bitmask of vertices already used as a target
    long long emitted = 0;

    void run() {
        if (n > limits.max_vertices)
            throw EnumerationCapExceeded("enumeration vertex cap exceeded");
        g.successor.assign(n, -1);
        recurse(0);
    }

    void recurse(int v) {
        if (v == n) {
            if (++emitted > limits.max_digraphs)
                throw EnumerationCapExceeded("enumeration digraph cap exceeded");
            visit(g);
            return;
        }
        // successor undefined
        g.successor[v] = -1;
        recurse(v + 1);
        // admissible unused targets, in increasing vertex order
        for (int t = 0; t < n; ++t) {
            if (used & (1u << t)) continue;
            if (layer[t] < layer[v]) continue;
            g.successor[v] = t;
            used |= 1u << t;
            recurse(v + 1);
            used &= ~(1u << t);
        }
        g.successor[v] = -1;
    }
};

}  // namespace

void enumerate_digraphs(const LayerGraphSpec& spec, const EnumerationLimits& limits,
                        const std::function<void(const LaguerreDigraph&)>& visit) {
    const int n = spec.vertex_count();
    if (n > 31) throw EnumerationCapExceeded("enumeration vertex cap exceeded");
    Enumerator e{spec, limits, visit, n, {}, {}, 0, 0};
    e.layer.resize(n);
    for (int v = 0; v < n; ++v) e.layer[v] = spec.layer_of(v);
    e.run();
}

long long count_digraphs(const LayerGraphSpec& spec, const EnumerationLimits& limits) {
    long long count = 0;
    enumerate_digraphs(spec, limits, [&](const LaguerreDigraph&) { ++count; });
    return count;
}

DigraphStats digraph_stats(const LayerGraphSpec& spec, const LaguerreDigraph& g) {
    const int n = spec.vertex_count();
    DigraphStats stats;
    stats.cycles.assign(spec.layers(), 0);

    std::vector<bool> has_pred(n, false);
    for (int v = 0; v < n; ++v)
        if (g.successor[v] >= 0) has_pred[g.successor[v]] = true;

    // Paths: follow successors from each vertex with no predecessor.
    std::vector<bool> visited(n, false);
    for (int v = 0; v < n; ++v) {
        if (has_pred[v]) continue;
        ++stats.paths;
        for (int u = v; u >= 0; u = g.successor[u]) visited[u] = true;
    }
    // Everything unvisited lies on a cycle, confined to a single layer.
    for (int v = 0; v < n; ++v) {
        if (visited[v]) continue;
        const int layer = spec.layer_of(v);
        ++stats.cycles[layer];
        for (int u = v; !visited[u]; u = g.successor[u]) {
            assert(spec.layer_of(u) == layer);
            visited[u] = true;
        }
    }
    return stats;
}

Polynomial combinatorial_laguerre(const LayerGraphSpec& spec,
                                  const EnumerationLimits& limits) {
    const int r = spec.layers();
    const int nv = 1 + r;
    Polynomial sum(nv);
    Exponents e(nv);
    enumerate_digraphs(spec, limits, [&](const LaguerreDigraph& g) {
        const DigraphStats s = digraph_stats(spec, g);
        e[0] = static_cast<std::uint32_t>(s.paths);
        for (int i = 0; i < r; ++i) e[1 + i] = static_cast<std::uint32_t>(s.cycles[i]);
        sum.add_term(e, 1);
    });
    return sum;
}

}  // namespace mlag
