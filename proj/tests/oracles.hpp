#ifndef ANNG_TESTS_ORACLES_HPP
#define ANNG_TESTS_ORACLES_HPP

#include <vector>

#include "anng/graph.hpp"

namespace anng::test {

// Vertex-deletion oracle: small is isomorphic to an induced subgraph of big.
// Plain backtracking over injective maps preserving adjacency both ways.
inline bool induced_subgraph_exists(const Graph& small, const Graph& big) {
    if (small.size() > big.size()) return false;
    std::vector<int> map(static_cast<std::size_t>(small.size()), -1);
    std::vector<char> used(static_cast<std::size_t>(big.size()), 0);
    const auto search = [&](const auto& self, int depth) -> bool {
        if (depth == small.size()) return true;
        for (int w = 0; w < big.size(); ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (int u = 0; ok && u < depth; ++u)
                if (small.adjacent(u, depth) != big.adjacent(map[static_cast<std::size_t>(u)], w))
                    ok = false;
            if (!ok) continue;
            map[static_cast<std::size_t>(depth)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (self(self, depth + 1)) return true;
            used[static_cast<std::size_t>(w)] = 0;
            map[static_cast<std::size_t>(depth)] = -1;
        }
        return false;
    };
    return search(search, 0);
}

} // namespace anng::test

#endif
