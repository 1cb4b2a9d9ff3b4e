#ifndef BRAIDCONE_TESTS_CORPUS_HPP
#define BRAIDCONE_TESTS_CORPUS_HPP

#include "braidcone/poset.hpp"

#include <random>

// Small posets used across the test suites.  Elements are 0-based.
namespace corpus {

using braidcone::ElemSet;
using braidcone::Poset;

// 0 < 1, 0 < 2, 1 < 3, 2 < 3 -- the bounded diamond.
inline Poset diamond4() {
    return Poset::from_relations(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

// 0 < 2, 1 < 2 -- two minimals under one top.
inline Poset vee3() {
    return Poset::from_relations(3, {{0, 2}, {1, 2}});
}

// Diamond glued to a vee at the diamond's element 2:
// 0<1, 0<2, 1<3, 2<3 plus 2<5, 4<5.
inline Poset glued6() {
    return Poset::from_relations(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 5}, {4, 5}});
}

// Nine elements a..h,top (0..8).  M = {a,b,c,d,e} is a single path but
// the downset of g meets it in two pieces, so the tree downset
// condition fails at S = {g}.
// a=0 b=1 c=2 d=3 e=4 f=5 g=6 h=7 top=8
inline Poset tdc_violation9() {
    return Poset::from_relations(9, {{0, 2}, {0, 3}, {1, 3}, {1, 4},      // c,d,e over a,b
                                     {2, 5}, {3, 5},                      // f covers c,d
                                     {2, 6}, {4, 6},                      // g covers c,e
                                     {3, 7}, {4, 7},                      // h covers d,e
                                     {5, 8}, {6, 8}, {7, 8}});
}

// Six elements a..e,top (0..5); e covers b,c,d where c,d are not
// minimal, so M = {a,b,c,d} with trees {a,c,d} and {b}.  Satisfies the
// tree downset condition.
// a=0 b=1 c=2 d=3 e=4 top=5
inline Poset cc_ok6() {
    return Poset::from_relations(6, {{0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 5}});
}

// Eight elements a..g,top (0..7).  M = {a,b,c,d,e} has trees {a,b,d}
// and {c,e}; the first quotient's M contains a 4-cycle, so the
// iterative decision fails at iteration 1.
// a=0 b=1 c=2 d=3 e=4 f=5 g=6 top=7
inline Poset quotient_cycle8() {
    return Poset::from_relations(8, {{0, 3}, {1, 3},          // d over a,b
                                     {2, 4},                  // e over c
                                     {3, 5}, {4, 5},          // f over d,e
                                     {3, 6}, {4, 6},          // g over d,e
                                     {5, 7}, {6, 7}});
}

// Thirteen elements; the tree-relation quotient applies three times
// before the length reaches 1.  Bottom a..e (0-4), then f,g (5,6),
// then i,j,k (7,8,9), then l,m (10,11), top (12).
inline Poset triple_quotient13() {
    return Poset::from_relations(13, {{0, 5}, {1, 5}, {2, 5}, {2, 6}, {3, 6},
                                      {5, 7}, {6, 7}, {6, 8}, {6, 9}, {4, 9},
                                      {7, 10}, {8, 10}, {9, 10}, {8, 11}, {9, 11},
                                      {10, 12}, {11, 12}});
}

// The 3-regular biconnected length-1 poset on 4+4 elements that is not
// Q-Gorenstein: minimals 0..3, maximals 4..7.
inline Poset three_regular8() {
    return Poset::from_relations(8, {{0, 4}, {0, 5}, {0, 7},
                                     {1, 4}, {1, 5}, {1, 6},
                                     {2, 5}, {2, 6}, {2, 7},
                                     {3, 6}, {3, 7}, {3, 4}});
}

inline Poset chain(int n) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
    return Poset::from_relations(n, rel);
}

// Cycle of length 2k as a length-1 poset: minimals m_i, maximals M_i,
// with m_i < M_i and m_{i+1} < M_i.
inline Poset cycle_poset(int k) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < k; ++i) {
        rel.emplace_back(i, k + i);
        rel.emplace_back((i + 1) % k, k + i);
    }
    return Poset::from_relations(2 * k, rel);
}

// Complete bipartite K_{n,n}: minimals 0..n-1 below maximals n..2n-1.
inline Poset complete_bipartite(int n) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rel.emplace_back(i, n + j);
    return Poset::from_relations(2 * n, rel);
}

// Random connected poset on n elements: random DAG edges on the index
// order, closed transitively, components chained together if needed.
inline Poset random_poset(std::mt19937_64& rng, int n, double edge_prob = 0.3) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < edge_prob) rel.emplace_back(i, j);
    while (true) {
        try {
            return Poset::from_relations(n, rel);
        } catch (const braidcone::DisconnectedError&) {
            // join two components with a random forward edge
            std::uniform_int_distribution<int> pick(0, n - 1);
            int a = pick(rng), b = pick(rng);
            if (a == b) continue;
            rel.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
}

// Random tree poset: a uniform labeled tree with every edge oriented by
// a coin flip (tree shapes make any orientation a Hasse diagram).
inline Poset random_tree(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    if (n == 2) {
        edges = {{0, 1}};
    } else {
        std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int& v : pruefer) v = pick(rng);
        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int v : pruefer) ++degree[static_cast<std::size_t>(v)];
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        for (int v : pruefer) {
            for (int leaf = 0; leaf < n; ++leaf) {
                if (degree[static_cast<std::size_t>(leaf)] == 1 && !used[static_cast<std::size_t>(leaf)]) {
                    edges.emplace_back(leaf, v);
                    used[static_cast<std::size_t>(leaf)] = true;
                    --degree[static_cast<std::size_t>(v)];
                    break;
                }
            }
        }
        int a = -1, b = -1;
        for (int v = 0; v < n; ++v)
            if (degree[static_cast<std::size_t>(v)] == 1 && !used[static_cast<std::size_t>(v)])
                (a < 0 ? a : b) = v;
        edges.emplace_back(a, b);
    }
    std::uniform_int_distribution<int> flip(0, 1);
    std::vector<std::pair<int, int>> rel;
    for (auto [x, y] : edges)
        rel.emplace_back(flip(rng) ? std::pair{x, y} : std::pair{y, x});
    return Poset::from_relations(n, rel);
}

} // namespace corpus

#endif
