#include <gtest/gtest.h>

#include <random>
#include <set>

#include "polyskel/complex.hpp"
#include "polyskel/face_oracle.hpp"
#include "polyskel/order_polytope.hpp"
#include "support/fixtures.hpp"

namespace polyskel {
namespace {

SkeletonGraph skeleton(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  SkeletonGraph g{std::vector<Subset>(n)};
  for (const auto& [i, j] : edges) g.add_edge(i, j);
  return g;
}

SkeletonGraph complete(std::size_t n) {
  SkeletonGraph g{std::vector<Subset>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

const SkeletonGraph kFourCycle = skeleton(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});

TEST(AllCliques, Examples) {
  EXPECT_EQ(all_cliques(complete(3)).size(), 7u);
  EXPECT_EQ(all_cliques(kFourCycle).size(), 8u);
  EXPECT_EQ(all_cliques(skeleton(3, {{0, 1}, {1, 2}})).size(), 5u);
  EXPECT_TRUE(all_cliques(SkeletonGraph{}).empty());
  const auto k3 = all_cliques(complete(3));
  EXPECT_EQ(k3.front(), Simplex{0});
  EXPECT_EQ(k3.back(), (Simplex{0, 1, 2}));
}

TEST(CliqueComplex, Examples) {
  EXPECT_EQ(clique_complex(complete(4)).facets(), std::vector<Simplex>{(Simplex{0, 1, 2, 3})});
  EXPECT_EQ(clique_complex(kFourCycle).facets(),
            (std::vector<Simplex>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
  const SimplicialComplex cube = clique_complex(order_skeleton(testing::antichain(3)));
  EXPECT_EQ(cube.facets().size(), 12u);
  EXPECT_EQ(cube.dimension(), 1);
  EXPECT_EQ(clique_complex(skeleton(2, {})).facets(), (std::vector<Simplex>{{0}, {1}}));
}

TEST(ComplexesEqual, Examples) {
  const SimplicialComplex a = clique_complex(kFourCycle);
  EXPECT_TRUE(complexes_equal(a, a).equal);

  const std::vector<LatticePoint> square{LatticePoint({0, 0}), LatticePoint({1, 0}),
                                         LatticePoint({1, 1}), LatticePoint({0, 1})};
  EXPECT_TRUE(complexes_equal(a, simplicial_faces(square)).equal);

  const SimplicialComplex k4 = clique_complex(complete(4));
  const SimplicialComplex boundary =
      SimplicialComplex::from_faces(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  const ComplexComparison cmp = complexes_equal(k4, boundary);
  EXPECT_FALSE(cmp.equal);
  EXPECT_EQ(cmp.difference, (Simplex{0, 1, 2, 3}));
  const ComplexComparison reverse = complexes_equal(boundary, k4);
  EXPECT_EQ(reverse.difference, (Simplex{0, 1, 2, 3}));

  EXPECT_THROW(complexes_equal(SimplicialComplex(3), SimplicialComplex(4)), std::invalid_argument);
}

TEST(SimplicialComplex, FromFacesDropsNonMaximalMembers) {
  const auto c = SimplicialComplex::from_faces(4, {{1}, {0, 1}, {1, 0}, {2, 3}, {3}});
  EXPECT_EQ(c.facets(), (std::vector<Simplex>{{0, 1}, {2, 3}}));
  EXPECT_TRUE(c.contains({1, 0}));
  EXPECT_FALSE(c.contains({1, 2}));
  EXPECT_THROW(SimplicialComplex::from_faces(2, {{}}), std::invalid_argument);
  EXPECT_THROW(SimplicialComplex::from_faces(2, {{2}}), std::invalid_argument);
}

TEST(CliqueProperties, RandomGraphs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    SkeletonGraph g{std::vector<Subset>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rng() % 3 != 0) g.add_edge(i, j);
      }
    }
    const auto cliques = all_cliques(g);
    const std::set<Simplex> family(cliques.begin(), cliques.end());
    for (const Simplex& c : cliques) {
      ASSERT_TRUE(g.is_clique(c));
      for (std::size_t drop = 0; drop < c.size() && c.size() > 1; ++drop) {
        Simplex sub = c;
        sub.erase(sub.begin() + static_cast<long>(drop));
        ASSERT_TRUE(family.contains(sub));
      }
    }
    // Facets by an independent maximality scan: cliques that no vertex extends.
    std::vector<Simplex> maximal;
    for (const Simplex& c : cliques) {
      bool extendable = false;
      for (std::size_t v = 0; v < n && !extendable; ++v) {
        if (std::find(c.begin(), c.end(), v) != c.end()) continue;
        extendable = std::all_of(c.begin(), c.end(), [&](std::size_t u) { return g.adjacent(u, v); });
      }
      if (!extendable) maximal.push_back(c);
    }
    ASSERT_EQ(clique_complex(g).facets(), maximal);
  }
}

}  // namespace
}  // namespace polyskel
