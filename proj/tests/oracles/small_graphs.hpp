#ifndef XPA_TESTS_SMALL_GRAPHS_HPP
#define XPA_TESTS_SMALL_GRAPHS_HPP

// Every graph on 1..5 vertices up to isomorphism, by brute-force canonical
// forms over all vertex permutations.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "xpa/graph.hpp"

namespace oracle {

inline std::vector<xpa::Graph> graphs_up_to(std::size_t max_n) {
    std::vector<xpa::Graph> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
        std::vector<std::vector<std::size_t>> perms;
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));

        std::set<std::uint32_t> seen;
        for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
            std::uint32_t canon = UINT32_MAX;
            for (const auto& q : perms) {
                std::uint32_t image = 0;
                for (std::size_t s = 0; s < slots.size(); ++s) {
                    if (!(mask >> s & 1u)) continue;
                    auto a = q[slots[s].first], b = q[slots[s].second];
                    if (a > b) std::swap(a, b);
                    const auto at = std::find(slots.begin(), slots.end(), std::make_pair(a, b)) - slots.begin();
                    image |= 1u << at;
                }
                canon = std::min(canon, image);
            }
            if (!seen.insert(canon).second) continue;
            std::vector<xpa::DirectedEdge> edges;
            for (std::size_t s = 0; s < slots.size(); ++s)
                if (canon >> s & 1u) edges.emplace_back(slots[s].first, slots[s].second);
            out.push_back(xpa::build_graph(n, edges));
        }
    }
    return out;
}

}  // namespace oracle

#endif
