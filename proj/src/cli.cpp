#include "polyskel/cli.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "polyskel/instances.hpp"
#include "polyskel/stable_polytope.hpp"
#include "polyskel/text_io.hpp"
#include "polyskel/verify.hpp"

namespace polyskel::cli {
namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string verdict_text(const std::optional<bool>& b) { return b ? yes_no(*b) : "skipped"; }

void print_text_report(std::ostream& out, const VerificationReport& r) {
  out << "vertices: " << r.num_vertices << "\n";
  for (std::size_t k = 0; k < r.vertices.size(); ++k) {
    out << "  " << k << " " << r.vertices[k].support().to_string() << " "
        << r.vertices[k].to_string() << "\n";
  }
  out << "skeleton edges: " << r.edges.size() << "\n";
  for (const auto& [i, j] : r.edges) out << "  " << i << " " << j << "\n";
  out << "cliques checked: " << r.cliques_checked << "\n";
  out << "construction isolates each clique: " << yes_no(r.construction_exact) << "\n";
  out << "skeleton matches oracle: " << verdict_text(r.skeleton_matches_oracle) << "\n";
  out << "oracle confirms every clique: " << verdict_text(r.oracle_confirms_cliques) << "\n";
  out << "clique complex equals simplicial faces: " << verdict_text(r.complex_equal) << "\n";
  out << "all cliques are faces: " << yes_no(r.all_faces()) << "\n";
  if (r.counterexample) {
    Json j;
    append_report(j, r);
    out << "counterexample: " << j["counterexample"].dump() << "\n";
  }
}

int emit(const RunConfig& config, std::ostream& out, Json header, const VerificationReport& r,
         const std::string& title, bool verdict_counts) {
  if (config.json) {
    append_report(header, r);
    out << header.dump(2) << "\n";
  } else {
    out << title << "\n";
    print_text_report(out, r);
  }
  if (!verdict_counts) return kVerified;
  return r.all_faces() ? kVerified : kVerdictFailure;
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const NotPerfectError& e) {
    err << e.what() << " (pass --unchecked to run anyway)\n";
    return kNotPerfect;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

VerifyOptions options_of(const RunConfig& config) { return VerifyOptions{config.verify_oracle}; }

}  // namespace

int cmd_order(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Poset poset = read_poset_file(config.input_path);
    const VerificationReport r = verify_order_polytope(poset, options_of(config));
    Json header;
    header["poset"] = covers_to_json(poset);
    std::ostringstream title;
    title << "order polytope of a poset on " << poset.size() << " elements, covers:";
    for (const auto& [lo, hi] : poset.covers()) title << " " << lo + 1 << "<" << hi + 1;
    return emit(config, out, std::move(header), r, title.str(), true);
  });
}

int cmd_stab(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SimpleGraph g = read_graph_file(config.input_path);
    const bool perfect = is_perfect(g);
    if (!perfect && !config.unchecked) throw NotPerfectError();
    const VerificationReport r =
        verify_stab_polytope(g, PerfectnessCheck::skip, options_of(config));
    Json header;
    header["graph"] = edges_to_json(g);
    header["perfect"] = perfect;
    std::ostringstream title;
    title << "stable set polytope of a graph on " << g.size() << " vertices ("
          << (perfect ? "perfect" : "NOT perfect: experiment outside the hypothesis") << ")";
    // Outside the hypothesis a failed verdict is an observation, not a contradiction.
    return emit(config, out, std::move(header), r, title.str(), perfect);
  });
}

int cmd_chain_polytope(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Poset poset = read_poset_file(config.input_path);
    const SimpleGraph g = comparability_graph(poset);
    const bool perfect = is_perfect(g);
    if (!perfect) throw NotPerfectError();
    const VerificationReport r =
        verify_stab_polytope(g, PerfectnessCheck::skip, options_of(config));
    std::vector<LatticePoint> expected;
    for (Subset a : antichains(poset)) expected.push_back(LatticePoint::indicator(a, poset.size()));
    const bool antichains_match = expected == chain_polytope_vertices(poset);
    Json header;
    header["poset"] = covers_to_json(poset);
    header["graph"] = edges_to_json(g);
    header["perfect"] = perfect;
    header["antichains_match"] = antichains_match;
    std::ostringstream title;
    title << "chain polytope of a poset on " << poset.size()
          << " elements via its comparability graph\nantichain indicators match: "
          << yes_no(antichains_match);
    const int code = emit(config, out, std::move(header), r, title.str(), true);
    return antichains_match ? code : static_cast<int>(kVerdictFailure);
  });
}

namespace {

struct SweepGroup {
  std::size_t size = 0;
  bool exhaustive = true;
  std::size_t generated = 0;  // instances before perfectness filtering
  std::size_t instances = 0;
  std::size_t failures = 0;
};

struct SweepFailure {
  std::size_t id;
  std::string instance;
  VerificationReport report;
};

}  // namespace

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const bool posets = config.kind == InstanceKind::posets;
  const std::size_t max_size = posets ? config.max_d : config.max_n;
  const std::size_t limit =
      config.exhaustive_up_to != 0 ? config.exhaustive_up_to : (posets ? 4 : 5);
  if (max_size == 0 || (posets && max_size > 64) || (!posets && max_size > 20)) {
    err << "input error: size limit out of range\n";
    return kInputError;
  }
  std::mt19937_64 rng(config.seed);
  std::vector<SweepGroup> groups;
  std::vector<SweepFailure> failures;
  std::size_t next_id = 0;

  auto run_one = [&](SweepGroup& group, const std::string& text, auto&& verify) {
    const std::size_t id = next_id++;
    ++group.instances;
    VerificationReport r = verify();
    if (!r.all_faces()) {
      ++group.failures;
      failures.push_back({id, text, std::move(r)});
    }
  };

  for (std::size_t size = 1; size <= max_size; ++size) {
    const bool exhaustive = size <= limit || config.sample == 0;
    SweepGroup group{size, exhaustive};
    if (posets) {
      std::vector<Poset> batch;
      if (exhaustive) {
        batch = enumerate_labeled_posets(size);
      } else {
        for (std::size_t k = 0; k < config.sample; ++k) batch.push_back(random_poset(size, rng));
      }
      group.generated = batch.size();
      for (const Poset& p : batch) {
        run_one(group, format_poset(p), [&] { return verify_order_polytope(p, options_of(config)); });
      }
    } else {
      std::vector<SimpleGraph> batch;
      if (exhaustive) {
        batch = enumerate_labeled_graphs(size);
      } else {
        for (std::size_t k = 0; k < config.sample; ++k) {
          batch.push_back(random_perfect_graph(size, rng));
        }
      }
      group.generated = batch.size();
      for (const SimpleGraph& g : batch) {
        if (!is_perfect(g)) continue;
        run_one(group, format_graph(g), [&] {
          return verify_stab_polytope(g, PerfectnessCheck::skip, options_of(config));
        });
      }
    }
    groups.push_back(group);
  }

  std::size_t total = 0;
  std::size_t failed = 0;
  for (const auto& g : groups) {
    total += g.instances;
    failed += g.failures;
  }
  const char* noun = posets ? "posets" : "graphs";
  const char* size_name = posets ? "d" : "n";
  if (config.json) {
    Json j;
    j["kind"] = noun;
    j["seed"] = config.seed;
    j["oracle"] = config.verify_oracle;
    Json gs = Json::array();
    for (const auto& g : groups) {
      Json row;
      row[size_name] = g.size;
      row["mode"] = g.exhaustive ? "exhaustive" : "sample";
      row["generated"] = g.generated;
      row["instances"] = g.instances;
      row["failures"] = g.failures;
      gs.push_back(std::move(row));
    }
    j["groups"] = std::move(gs);
    j["instances"] = total;
    j["failures"] = failed;
    Json fs = Json::array();
    for (const auto& f : failures) {
      Json row;
      row["id"] = f.id;
      row["instance"] = f.instance;
      append_report(row, f.report);
      fs.push_back(std::move(row));
    }
    j["failed"] = std::move(fs);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& g : groups) {
      out << noun << " " << size_name << "=" << g.size << " "
          << (g.exhaustive ? "exhaustive" : "sample") << " generated=" << g.generated
          << " instances=" << g.instances << " failures=" << g.failures << "\n";
    }
    out << "total instances=" << total << " failures=" << failed << "\n";
    for (const auto& f : failures) {
      Json j;
      append_report(j, f.report);
      out << "failure #" << f.id << "\n" << f.instance << "counterexample: "
          << j["counterexample"].dump() << "\n";
    }
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  err << "sweep runtime: " << elapsed.count() << " s\n";
  return failed == 0 ? kVerified : kVerdictFailure;
}

int cmd_random(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::mt19937_64 rng(config.seed);
    if (config.kind == InstanceKind::posets) {
      out << format_poset(random_poset(config.max_d, rng));
    } else {
      out << format_graph(random_perfect_graph(config.max_n, rng));
    }
    return static_cast<int>(kVerified);
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skeletons, clique complexes and faces of order and stable set polytopes"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_verify_flags = [&](CLI::App* sub) {
    sub->add_flag("--verify-oracle,!--no-verify-oracle", config.verify_oracle,
                  "cross-check with the exact LP face oracle (default on)");
    sub->add_flag("--json", config.json, "emit a JSON report");
  };

  auto* order = app.add_subcommand("order", "verify the order polytope of a poset file");
  order->add_option("file", config.input_path, "poset file")->required();
  add_verify_flags(order);

  auto* stab = app.add_subcommand("stab", "verify the stable set polytope of a graph file");
  stab->add_option("file", config.input_path, "graph file")->required();
  stab->add_flag("--unchecked", config.unchecked, "run even if the graph is not perfect");
  add_verify_flags(stab);

  auto* chain = app.add_subcommand("chain-polytope",
                                   "verify the chain polytope of a poset as Stab(Com(P))");
  chain->add_option("file", config.input_path, "poset file")->required();
  add_verify_flags(chain);

  bool graphs = false;
  bool posets = false;
  auto add_instance_flags = [&](CLI::App* sub) {
    auto* p = sub->add_flag("--posets", posets, "poset instances (default)");
    auto* g = sub->add_flag("--graphs", graphs, "perfect graph instances");
    p->excludes(g);
    sub->add_option("--seed", config.seed, "RNG seed");
    sub->add_option("--max-d", config.max_d, "largest poset size")->check(CLI::PositiveNumber);
    sub->add_option("--max-n", config.max_n, "largest graph size")->check(CLI::PositiveNumber);
  };

  auto* sweep = app.add_subcommand("sweep", "verify every instance up to a size limit");
  add_instance_flags(sweep);
  sweep->add_option("--sample", config.sample, "random instances per size above the exhaustive limit");
  sweep->add_option("--exhaustive-up-to", config.exhaustive_up_to,
                    "largest size enumerated exhaustively when sampling");
  add_verify_flags(sweep);

  auto* random = app.add_subcommand("random", "print a random poset or perfect graph");
  add_instance_flags(random);

  std::vector<std::string> argv_storage{"polyskel"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(kInputError);
  }
  config.kind = graphs ? InstanceKind::graphs : InstanceKind::posets;

  if (order->parsed()) return cmd_order(config, out, err);
  if (stab->parsed()) return cmd_stab(config, out, err);
  if (chain->parsed()) return cmd_chain_polytope(config, out, err);
  if (sweep->parsed()) return cmd_sweep(config, out, err);
  return cmd_random(config, out, err);
}

}  // namespace polyskel::cli
