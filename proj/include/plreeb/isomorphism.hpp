#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "plreeb/rational.hpp"
#include "plreeb/reeb_graph.hpp"

namespace plreeb {

/// Abstract loop-free multigraph used for isomorphism checks. `key` carries
/// the node level (or assigned height) for the order-respecting mode.
struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<Rational> keys; // empty, or one key per node

    static Multigraph of(const ReebGraph& g)
    {
        Multigraph m;
        m.n = static_cast<int>(g.nodes.size());
        for (const auto& e : g.edges) m.edges.emplace_back(e.a, e.b);
        for (const auto& node : g.nodes) m.keys.push_back(node.level);
        return m;
    }
};

enum class IsoMode {
    Abstract,  ///< pure multigraph isomorphism, keys ignored
    LevelOrder ///< witness must preserve the relative order of node keys
};

/// Exact backtracking multigraph isomorphism with degree-multiset and
/// neighbor-multiplicity pruning. Intended for graphs up to a few dozen
/// nodes. Returns the witness mapping (g1 node -> g2 node) when isomorphic.
inline std::optional<std::vector<int>> graph_isomorphism(const Multigraph& g1, const Multigraph& g2,
                                                         IsoMode mode = IsoMode::Abstract)
{
    if (g1.n != g2.n || g1.edges.size() != g2.edges.size()) return std::nullopt;
    const int n = g1.n;
    if (n == 0) return std::vector<int>{};

    auto adjacency = [](const Multigraph& g) {
        std::vector<std::vector<int>> m(g.n, std::vector<int>(g.n, 0));
        for (auto [a, b] : g.edges) {
            m[a][b] += 1;
            m[b][a] += 1;
        }
        return m;
    };
    const auto m1 = adjacency(g1);
    const auto m2 = adjacency(g2);

    auto degrees = [n](const std::vector<std::vector<int>>& m) {
        std::vector<int> d(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i] += m[i][j];
        return d;
    };
    const auto d1 = degrees(m1);
    const auto d2 = degrees(m2);
    {
        auto s1 = d1, s2 = d2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }

    const bool use_keys = mode == IsoMode::LevelOrder;
    if (use_keys && (static_cast<int>(g1.keys.size()) != n || static_cast<int>(g2.keys.size()) != n))
        throw Error(ErrorCode::InvalidArgument, "level-order isomorphism requires keys on every node");

    // assign high-degree nodes first
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d1[a] > d1[b]; });

    std::vector<int> map1(n, -1), used2(n, 0);

    auto compatible = [&](int v, int w) {
        if (d1[v] != d2[w]) return false;
        for (int u = 0; u < n; ++u) {
            if (map1[u] < 0) continue;
            if (m1[v][u] != m2[w][map1[u]]) return false;
            if (use_keys) {
                auto c1 = g1.keys[v].compare(g1.keys[u]);
                auto c2 = g2.keys[w].compare(g2.keys[map1[u]]);
                if ((c1 < 0) != (c2 < 0) || (c1 == 0) != (c2 == 0)) return false;
            }
        }
        return true;
    };

    std::vector<int> result;
    auto backtrack = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used2[w] || !compatible(v, w)) continue;
            map1[v] = w;
            used2[w] = 1;
            if (self(self, depth + 1)) return true;
            map1[v] = -1;
            used2[w] = 0;
        }
        return false;
    };
    if (!backtrack(backtrack, 0)) return std::nullopt;
    return map1;
}

inline bool graph_isomorphic(const Multigraph& g1, const Multigraph& g2, IsoMode mode = IsoMode::Abstract)
{
    return graph_isomorphism(g1, g2, mode).has_value();
}

inline int betti1(const Multigraph& g) { return betti1(g.n, g.edges); }

} // namespace plreeb
