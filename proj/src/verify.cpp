#include "polyskel/verify.hpp"

#include <algorithm>

#include "polyskel/face_oracle.hpp"
#include "polyskel/order_polytope.hpp"

namespace polyskel {
namespace {

std::vector<Subset> labels_of(const SkeletonGraph& g, const Simplex& s) {
  std::vector<Subset> out;
  for (std::size_t v : s) out.push_back(g.label(v));
  return out;
}

std::string join_indices(const std::vector<std::size_t>& xs) {
  std::string out = "[";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(xs[k]);
  }
  return out + "]";
}

}  // namespace

VerificationReport verify_instance(std::span<const LatticePoint> vertices,
                                   const SkeletonGraph& predicate_skeleton,
                                   const CliqueConstruction& construction,
                                   VerifyOptions options) {
  VerificationReport report;
  report.num_vertices = vertices.size();
  report.vertices.assign(vertices.begin(), vertices.end());
  report.edges = predicate_skeleton.edges();

  auto record = [&](std::string check, Simplex s, std::string detail) {
    if (!report.counterexample) {
      report.counterexample = Counterexample{std::move(check), s, labels_of(predicate_skeleton, s),
                                             std::move(detail)};
    }
  };

  std::optional<FaceOracle> oracle;
  if (options.use_oracle) {
    oracle.emplace(std::vector<LatticePoint>(vertices.begin(), vertices.end()));
    const SkeletonGraph oracle_skeleton = oracle->skeleton();
    report.skeleton_matches_oracle = oracle_skeleton.same_edges(predicate_skeleton);
    if (!*report.skeleton_matches_oracle) {
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
          if (oracle_skeleton.adjacent(i, j) != predicate_skeleton.adjacent(i, j)) {
            record("skeleton", {i, j},
                   std::string("predicate says ") +
                       (predicate_skeleton.adjacent(i, j) ? "edge" : "non-edge") +
                       ", oracle says " + (oracle_skeleton.adjacent(i, j) ? "edge" : "non-edge"));
            i = j = vertices.size();
          }
        }
      }
    }
    report.oracle_confirms_cliques = true;
  }

  const std::vector<Simplex> cliques = all_cliques(predicate_skeleton);
  report.cliques_checked = cliques.size();
  for (const Simplex& clique : cliques) {
    const std::vector<Hyperplane> system = construction(clique);
    const std::vector<std::size_t> survivors = vertices_on_system(vertices, system);
    if (survivors != clique) {
      report.construction_exact = false;
      record("construction", clique, "system is satisfied by vertices " + join_indices(survivors));
    }
    if (oracle && !oracle->is_face(clique)) {
      report.oracle_confirms_cliques = false;
      record("oracle", clique, "oracle rejects the clique as a face");
    }
  }

  if (oracle) {
    const SimplicialComplex faces = oracle->simplicial_faces();
    const ComplexComparison cmp = complexes_equal(clique_complex(predicate_skeleton), faces);
    report.complex_equal = cmp.equal;
    if (!cmp.equal && cmp.difference) {
      record("complex", *cmp.difference,
             faces.contains(*cmp.difference) ? "simplicial face that is not a clique"
                                             : "clique that is not a simplicial face");
    }
    report.lp_calls = oracle->lp_calls();
  }
  return report;
}

VerificationReport verify_order_polytope(const Poset& poset, VerifyOptions options) {
  const SkeletonGraph skeleton = order_skeleton(poset);
  const std::vector<LatticePoint> vertices = order_polytope_vertices(poset);
  auto construction = [&](const Simplex& clique) {
    const auto chain = is_order_clique(poset, labels_of(skeleton, clique));
    // The predicate skeleton only yields clique chains.
    if (!chain) throw std::logic_error("skeleton clique is not an ideal chain");
    return order_clique_face_system(poset, *chain);
  };
  return verify_instance(vertices, skeleton, construction, options);
}

VerificationReport verify_stab_polytope(const SimpleGraph& g, PerfectnessCheck check,
                                        VerifyOptions options) {
  const SkeletonGraph skeleton = stab_skeleton(g, check);
  const std::vector<LatticePoint> vertices = stab_vertices(g);
  auto construction = [&](const Simplex& clique) {
    return stab_clique_face_system(g, labels_of(skeleton, clique), PerfectnessCheck::skip);
  };
  return verify_instance(vertices, skeleton, construction, options);
}

namespace {

Json subset_to_json(Subset s) {
  Json out = Json::array();
  for (std::size_t e : s.elements()) out.push_back(e + 1);
  return out;
}

}  // namespace

void append_report(Json& out, const VerificationReport& report) {
  out["num_vertices"] = report.num_vertices;
  Json edges = Json::array();
  for (const auto& [i, j] : report.edges) edges.push_back(Json::array({i, j}));
  out["edges"] = std::move(edges);
  out["cliques_checked"] = report.cliques_checked;
  out["all_faces"] = report.all_faces();
  if (report.counterexample) {
    const Counterexample& c = *report.counterexample;
    Json labels = Json::array();
    for (Subset s : c.labels) labels.push_back(subset_to_json(s));
    out["counterexample"] = Json{{"check", c.check},
                                 {"vertices", c.vertices},
                                 {"labels", std::move(labels)},
                                 {"detail", c.detail}};
  } else {
    out["counterexample"] = nullptr;
  }
  auto optional_bool = [](const std::optional<bool>& b) -> Json {
    return b ? Json(*b) : Json(nullptr);
  };
  out["checks"] = Json{{"construction_exact", report.construction_exact},
                       {"skeleton_matches_oracle", optional_bool(report.skeleton_matches_oracle)},
                       {"oracle_confirms_cliques", optional_bool(report.oracle_confirms_cliques)},
                       {"complex_equal", optional_bool(report.complex_equal)},
                       {"lp_calls", report.lp_calls}};
  Json vertices = Json::array();
  for (const auto& v : report.vertices) {
    Json coords = Json::array();
    for (std::size_t i = 0; i < v.dimension(); ++i) coords.push_back(v[i]);
    vertices.push_back(std::move(coords));
  }
  out["vertices"] = std::move(vertices);
}

Json covers_to_json(const Poset& poset) {
  Json out = Json::array();
  for (const auto& [lo, hi] : poset.covers()) out.push_back(Json::array({lo + 1, hi + 1}));
  return out;
}

Json edges_to_json(const SimpleGraph& g) {
  Json out = Json::array();
  for (const auto& [i, j] : g.edges()) out.push_back(Json::array({i + 1, j + 1}));
  return out;
}

}  // namespace polyskel
