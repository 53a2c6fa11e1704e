#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "polyskel/complex.hpp"
#include "polyskel/geometry.hpp"
#include "polyskel/graph.hpp"
#include "polyskel/poset.hpp"
#include "polyskel/stable_polytope.hpp"

namespace polyskel {

struct Counterexample {
  std::string check;  // which verdict failed
  Simplex vertices;
  std::vector<Subset> labels;
  std::string detail;
};

struct VerificationReport {
  std::size_t num_vertices = 0;
  std::vector<LatticePoint> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // predicate skeleton
  std::size_t cliques_checked = 0;

  // Each clique's construction system is satisfied by exactly its vertices.
  bool construction_exact = true;
  // Oracle verdicts; absent when the oracle was disabled.
  std::optional<bool> skeleton_matches_oracle;
  std::optional<bool> oracle_confirms_cliques;
  std::optional<bool> complex_equal;
  std::size_t lp_calls = 0;

  std::optional<Counterexample> counterexample;

  bool all_faces() const {
    return construction_exact && skeleton_matches_oracle.value_or(true) &&
           oracle_confirms_cliques.value_or(true) && complex_equal.value_or(true);
  }
};

// Builds the equality system the combinatorial construction assigns to a
// clique (given by vertex indices).
using CliqueConstruction = std::function<std::vector<Hyperplane>(const Simplex&)>;

struct VerifyOptions {
  bool use_oracle = true;
};

// Runs every check on one polytope: predicate skeleton vs oracle skeleton,
// per-clique construction and oracle face tests, and clique complex vs the
// complex of simplicial faces. Failures are reported, never thrown.
VerificationReport verify_instance(std::span<const LatticePoint> vertices,
                                   const SkeletonGraph& predicate_skeleton,
                                   const CliqueConstruction& construction,
                                   VerifyOptions options = {});

VerificationReport verify_order_polytope(const Poset& poset, VerifyOptions options = {});

// Throws NotPerfectError for imperfect graphs unless check == skip.
VerificationReport verify_stab_polytope(const SimpleGraph& g,
                                        PerfectnessCheck check = PerfectnessCheck::enforce,
                                        VerifyOptions options = {});

using Json = nlohmann::ordered_json;

// Appends num_vertices, edges, cliques_checked, all_faces, counterexample,
// checks and vertices, in that order.
void append_report(Json& out, const VerificationReport& report);

Json covers_to_json(const Poset& poset);  // 1-indexed [lower, upper] pairs
Json edges_to_json(const SimpleGraph& g);  // 1-indexed [i, j] pairs

}  // namespace polyskel
