#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "polyskel/graph.hpp"
#include "polyskel/poset.hpp"

namespace polyskel {

// Every labeled poset on d elements (not reduced up to isomorphism), in a
// fixed deterministic order. 1, 3, 19, 219, 4231 posets for d = 1..5.
std::vector<Poset> enumerate_labeled_posets(std::size_t d);

// All 2^(n choose 2) labeled graphs on n vertices; graph k has edge number e
// (pairs in lexicographic order) iff bit e of k is set.
std::vector<SimpleGraph> enumerate_labeled_graphs(std::size_t n);

// Random poset: each pair of a random permutation is related (lower position
// below higher) with probability 1/2, then closed transitively. Uses only the
// raw engine output so results are identical across standard libraries.
Poset random_poset(std::size_t d, std::mt19937_64& rng);

// Comparability graph of random_poset(n, rng); always perfect.
SimpleGraph random_perfect_graph(std::size_t n, std::mt19937_64& rng);

}  // namespace polyskel
