// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polyskel/cli.hpp"
#include "polyskel/face_oracle.hpp"
#include "polyskel/instances.hpp"
#include "polyskel/lp.hpp"
#include "polyskel/order_polytope.hpp"
#include "polyskel/stable_polytope.hpp"
#include "polyskel/verify.hpp"
#include "support/oracles.hpp"

namespace {

using namespace polyskel;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20240611;
constexpr std::size_t kPosetSample = 500;
constexpr std::size_t kGraphSample = 200;
constexpr double kPosetBudgetSeconds = 300;
constexpr double kGraphBudgetSeconds = 600;

int failed_criteria = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << id << " (" << title << "): " << detail
            << std::endl;
  if (!pass) ++failed_criteria;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Poset> poset_instances() {
  std::vector<Poset> out;
  for (std::size_t d = 1; d <= 4; ++d) {
    for (Poset& p : enumerate_labeled_posets(d)) out.push_back(std::move(p));
  }
  std::mt19937_64 rng(kSeed);
  for (std::size_t d = 5; d <= 6; ++d) {
    for (std::size_t k = 0; k < kPosetSample; ++k) out.push_back(random_poset(d, rng));
  }
  return out;
}

std::vector<SimpleGraph> graph_instances(std::size_t& generated_n5) {
  std::vector<SimpleGraph> out;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto all = enumerate_labeled_graphs(n);
    if (n == 5) generated_n5 = all.size();
    for (const SimpleGraph& g : all) {
      if (is_perfect(g)) out.push_back(g);
    }
  }
  std::mt19937_64 rng(kSeed + 1);
  for (std::size_t n = 6; n <= 7; ++n) {
    for (std::size_t k = 0; k < kGraphSample; ++k) out.push_back(random_perfect_graph(n, rng));
  }
  return out;
}

struct TheoremTally {
  std::size_t instances = 0;
  std::size_t edge_mismatch = 0;
  std::size_t construction_failures = 0;
  std::size_t oracle_rejections = 0;
  std::size_t complex_mismatch = 0;
  std::size_t cliques = 0;

  void add(const VerificationReport& r) {
    ++instances;
    cliques += r.cliques_checked;
    if (!r.skeleton_matches_oracle.value_or(false)) ++edge_mismatch;
    if (!r.construction_exact) ++construction_failures;
    if (!r.oracle_confirms_cliques.value_or(false)) ++oracle_rejections;
    if (!r.complex_equal.value_or(false)) ++complex_mismatch;
  }
  bool clean() const {
    return edge_mismatch + construction_failures + oracle_rejections + complex_mismatch == 0;
  }
  std::string summary() const {
    std::ostringstream s;
    s << instances << " instances, " << cliques << " cliques; edge mismatches=" << edge_mismatch
      << " construction failures=" << construction_failures
      << " oracle rejections=" << oracle_rejections << " complex mismatches=" << complex_mismatch;
    return s.str();
  }
};

void criterion_1(const std::vector<Poset>& posets) {
  const auto start = Clock::now();
  TheoremTally tally;
  for (const Poset& p : posets) tally.add(verify_order_polytope(p));
  const double t = seconds_since(start);
  std::ostringstream counts;
  for (std::size_t d = 1; d <= 4; ++d) {
    counts << (d == 1 ? "" : ",") << enumerate_labeled_posets(d).size();
  }
  std::ostringstream detail;
  detail << tally.summary() << "; labeled posets d=1..4: " << counts.str() << "; runtime "
         << static_cast<int>(t) << " s (budget " << kPosetBudgetSeconds << " s)";
  report(1, "order polytope theorem", tally.clean() && t <= kPosetBudgetSeconds, detail.str());
}

void criterion_2(const std::vector<SimpleGraph>& graphs, std::size_t generated_n5) {
  const auto start = Clock::now();
  TheoremTally tally;
  std::size_t n5 = 0;
  for (const SimpleGraph& g : graphs) {
    if (g.size() == 5) ++n5;
    tally.add(verify_stab_polytope(g));
  }
  const double t = seconds_since(start);
  std::ostringstream detail;
  detail << tally.summary() << "; perfect graphs at n=5: " << n5 << " of " << generated_n5
         << "; runtime " << static_cast<int>(t) << " s (budget " << kGraphBudgetSeconds << " s)";
  report(2, "stable set polytope theorem", tally.clean() && t <= kGraphBudgetSeconds,
         detail.str());
}

bool zero_one_solutions_match(std::size_t dim, std::span<const Hyperplane> system,
                              const std::vector<LatticePoint>& vertices) {
  std::vector<LatticePoint> solutions;
  for (Subset s : testing::all_subsets(dim)) {
    LatticePoint x = LatticePoint::indicator(s, dim);
    if (satisfies_all(x, system)) solutions.push_back(std::move(x));
  }
  std::vector<LatticePoint> expected = vertices;
  std::sort(solutions.begin(), solutions.end());
  std::sort(expected.begin(), expected.end());
  return solutions == expected;
}

void criterion_3(const std::vector<Poset>& posets, const std::vector<SimpleGraph>& graphs) {
  std::size_t bad = 0;
  for (const Poset& p : posets) {
    if (!zero_one_solutions_match(p.size(), order_polytope_h_description(p),
                                  order_polytope_vertices(p))) {
      ++bad;
    }
  }
  for (const SimpleGraph& g : graphs) {
    if (!zero_one_solutions_match(g.size(), stab_h_description(g), stab_vertices(g))) ++bad;
  }
  std::ostringstream detail;
  detail << posets.size() + graphs.size() << " systems checked over {0,1}^d, mismatches=" << bad;
  report(3, "H-description soundness", bad == 0, detail.str());
}

void criterion_4() {
  std::size_t checked = 0;
  std::size_t vertex_mismatch = 0;
  std::size_t imperfect = 0;
  for (std::size_t d = 1; d <= 5; ++d) {
    for (const Poset& p : enumerate_labeled_posets(d)) {
      ++checked;
      std::vector<LatticePoint> expected;
      for (Subset a : antichains(p)) expected.push_back(LatticePoint::indicator(a, d));
      if (chain_polytope_vertices(p) != expected) ++vertex_mismatch;
      if (!is_perfect(comparability_graph(p))) ++imperfect;
    }
  }
  std::ostringstream detail;
  detail << checked << " posets d<=5; vertex mismatches=" << vertex_mismatch
         << " imperfect comparability graphs=" << imperfect;
  report(4, "chain polytope cross-check", vertex_mismatch + imperfect == 0, detail.str());
}

LatticePoint point(std::initializer_list<int> c) { return LatticePoint(std::vector<int>(c)); }

// Cliques of the oracle skeleton whose hull the oracle rejects as a face.
std::vector<Simplex> non_face_cliques(const std::vector<LatticePoint>& vertices) {
  FaceOracle oracle(vertices);
  std::vector<Simplex> out;
  for (const Simplex& c : all_cliques(oracle.skeleton())) {
    if (!oracle.is_face(c)) out.push_back(c);
  }
  return out;
}

std::string simplex_text(const std::vector<LatticePoint>& vertices, const Simplex& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? " " : "") + vertices[s[k]].to_string();
  return out + "}";
}

void criterion_5() {
  const std::vector<LatticePoint> square{point({0, 0}), point({1, 0}), point({0, 1}),
                                         point({1, 1})};
  const bool diagonal_rejected = !is_face(square, Simplex{0, 3}) && !is_face(square, Simplex{1, 2});
  const bool sides_accepted = is_face(square, Simplex{0, 1}) && is_face(square, Simplex{0, 2});

  std::vector<LatticePoint> demicube;
  for (Subset s : testing::all_subsets(4)) {
    if (s.size() % 2 == 0) demicube.push_back(LatticePoint::indicator(s, 4));
  }
  const auto demicube_bad = non_face_cliques(demicube);

  // Bipyramid over the triangle e1 e2 e3 with apexes 0 and (1,1,1).
  const std::vector<LatticePoint> bipyramid{point({0, 0, 0}), point({1, 0, 0}), point({0, 1, 0}),
                                            point({0, 0, 1}), point({1, 1, 1})};
  const auto bipyramid_bad = non_face_cliques(bipyramid);

  // Exhaustive search over full-dimensional vertex subsets of the 3-cube.
  std::size_t searched = 0;
  std::size_t with_non_face = 0;
  std::vector<LatticePoint> cube;
  for (Subset s : testing::all_subsets(3)) cube.push_back(LatticePoint::indicator(s, 3));
  for (std::uint64_t mask = 1; mask < 256; ++mask) {
    std::vector<LatticePoint> pts;
    for (std::size_t k = 0; k < 8; ++k) {
      if ((mask >> k) & 1U) pts.push_back(cube[k]);
    }
    if (pts.size() < 4) continue;
    std::vector<std::vector<Rational>> diffs;
    for (std::size_t k = 1; k < pts.size(); ++k) {
      std::vector<Rational> row;
      for (std::size_t i = 0; i < 3; ++i) row.emplace_back(pts[k][i] - pts[0][i]);
      diffs.push_back(std::move(row));
    }
    if (testing::rational_rank(diffs) != 3) continue;
    ++searched;
    if (!non_face_cliques(pts).empty()) ++with_non_face;
  }

  std::ostringstream detail;
  detail << "square diagonals rejected=" << (diagonal_rejected ? "yes" : "no")
         << " sides accepted=" << (sides_accepted ? "yes" : "no")
         << "; even 4-cube: " << demicube.size() << " vertices, non-face cliques="
         << demicube_bad.size() << "; bipyramid non-face cliques=" << bipyramid_bad.size();
  if (!bipyramid_bad.empty()) detail << " e.g. " << simplex_text(bipyramid, bipyramid_bad.front());
  detail << "; 3-cube subsets: " << with_non_face << " of " << searched
         << " full-dimensional ones have a non-face clique";
  const bool exhibited = !demicube_bad.empty() || !bipyramid_bad.empty() || with_non_face > 0;
  report(5, "oracle negative controls", diagonal_rejected && sides_accepted && exhibited,
         detail.str());
}

void criterion_6() {
  std::mt19937_64 rng(kSeed + 2);
  std::size_t feasible = 0;
  std::size_t disagreements = 0;
  std::size_t bad_witness = 0;
  constexpr int kTrials = 1000;
  for (int k = 0; k < kTrials; ++k) {
    const LPProblem lp = testing::random_small_lp(rng);
    LPResult r;
    try {
      r = lp_feasible(lp);
    } catch (const std::logic_error&) {
      ++bad_witness;
      continue;
    }
    if (r.feasible != testing::fourier_motzkin_feasible(lp)) ++disagreements;
    if (!r.feasible) continue;
    ++feasible;
    if (!r.witness) {
      ++bad_witness;
      continue;
    }
    for (const Hyperplane& h : lp.constraints) {
      if (!h.satisfied_by(*r.witness)) {
        ++bad_witness;
        break;
      }
    }
  }
  std::ostringstream detail;
  detail << kTrials << " random LPs (" << feasible << " feasible); verdict disagreements with "
         << "Fourier-Motzkin=" << disagreements << " bad witnesses=" << bad_witness;
  report(6, "solver self-checks", disagreements + bad_witness == 0, detail.str());
}

void criterion_7() {
  const std::vector<std::vector<std::string>> runs{
      {"sweep", "--posets", "--max-d", "6", "--sample", "25", "--seed", "7"},
      {"sweep", "--graphs", "--max-n", "6", "--sample", "10", "--seed", "7",
       "--exhaustive-up-to", "4", "--json"},
  };
  bool identical = true;
  bool clean = true;
  std::size_t bytes = 0;
  for (const auto& args : runs) {
    std::ostringstream out1, err1, out2, err2;
    const int c1 = cli::run(args, out1, err1);
    const int c2 = cli::run(args, out2, err2);
    identical = identical && out1.str() == out2.str() && c1 == c2;
    clean = clean && c1 == cli::kVerified;
    bytes += out1.str().size();
  }
  std::ostringstream detail;
  detail << runs.size() << " seeded sweeps run twice, " << bytes << " bytes; byte-identical="
         << (identical ? "yes" : "no") << " exit codes clean=" << (clean ? "yes" : "no");
  report(7, "determinism", identical && clean, detail.str());
}

}  // namespace

int main() {
  const std::vector<Poset> posets = poset_instances();
  std::size_t generated_n5 = 0;
  const std::vector<SimpleGraph> graphs = graph_instances(generated_n5);
  criterion_1(posets);
  criterion_2(graphs, generated_n5);
  criterion_3(posets, graphs);
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  std::cout << (failed_criteria == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return failed_criteria;
}
