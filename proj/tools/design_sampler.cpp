// Command-line front end for constructing and checking design samplings.
//
// Exit codes: 0 success, 1 verified nonexistence or failed verification,
// 2 bad input (malformed JSON, unknown patterns, violated caps).

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "designs/counting.hpp"
#include "designs/errors.hpp"
#include "designs/json_io.hpp"
#include "designs/nesting.hpp"
#include "designs/report.hpp"
#include "designs/sampling.hpp"
#include "designs/starter.hpp"

namespace {

using namespace designs;

int max_n_cap() {
  const char* env = std::getenv("DESIGN_SAMPLER_MAX_N");
  if (env == nullptr) return 25;
  try {
    const int cap = std::stoi(env);
    if (cap < 1) throw Error("DESIGN_SAMPLER_MAX_N must be positive");
    return cap;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error("DESIGN_SAMPLER_MAX_N is not an integer");
  }
}

void check_cap(int n) {
  if (n < 1) throw Error("order must be positive");
  const int cap = max_n_cap();
  if (n > cap)
    throw Error("order " + std::to_string(n) +
                " exceeds DESIGN_SAMPLER_MAX_N = " + std::to_string(cap));
}

// Pattern flags accept K4/C5/P3/S4/W5 shorthand or a LabeledGraph JSON path.
LabeledGraph resolve_pattern(const std::string& text) {
  if (std::filesystem::exists(text)) return graph_from_json(load_json(text));
  return parse_family(text).graph();
}

std::string pattern_name(const std::string& text) {
  if (std::filesystem::exists(text)) return text;
  return parse_family(text).name();
}

GroupKind group_kind(const std::string& name) {
  if (name == "cyclic") return GroupKind::cyclic;
  if (name == "affine") return GroupKind::affine_square;
  if (name == "sym" || name == "symmetric") return GroupKind::symmetric;
  throw Error("unknown group \"" + name + "\" (use cyclic, affine or sym)");
}

std::string render_edges(const LabeledGraph& g) {
  std::string out = "{";
  for (size_t i = 0; i < g.edges().size(); ++i) {
    const auto& [u, v] = g.edges()[i];
    if (i > 0) out += ' ';
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out + "}";
}

struct Options {
  int n = 0;
  std::string big, small, group;
  long long lambda = -1;
  std::vector<std::string> in;
  std::string out;
  long long budget = 10000000;
};

void save_if_requested(const json& j, const std::string& path) {
  if (!path.empty()) {
    save_json(j, path);
    std::cout << "wrote " << path << "\n";
  }
}

int run_enumerate(const Options& opt) {
  check_cap(opt.n);
  const LabeledGraph pattern = resolve_pattern(opt.big);
  const BlockSet design = complete_design(opt.n, pattern);
  std::cout << "|K_" << opt.n << "(" << pattern_name(opt.big)
            << ")| = " << design.blocks.size() << "\n";
  save_if_requested(to_json(design), opt.out);
  return 0;
}

int run_sample(const Options& opt) {
  check_cap(opt.n);
  const SamplingMap sm = regular_sampling(opt.n, resolve_pattern(opt.big),
                                          resolve_pattern(opt.small));
  const RedundancyProfile profile = verify_sampling(sm);
  if (opt.lambda >= 0 && profile.min != opt.lambda)
    throw Nonexistence("no regular sampling with redundancy " +
                       std::to_string(opt.lambda) + ": the counts force " +
                       std::to_string(profile.min));
  std::cout << report(sm);
  save_if_requested(to_json(sm), opt.out);
  return 0;
}

int run_embed(const Options& opt) {
  check_cap(opt.n);
  const EmbeddingMap em = regular_embedding(opt.n, resolve_pattern(opt.small),
                                            resolve_pattern(opt.big));
  const RedundancyProfile profile = verify_embedding(em);
  std::cout << "embedding of " << em.source.blocks.size() << " blocks into "
            << em.target.blocks.size() << " targets: " << profile.summary()
            << (em.strict ? ", strict" : ", not strict") << "\n";
  save_if_requested(to_json(em), opt.out);
  return 0;
}

int run_semiregular(const Options& opt) {
  check_cap(opt.n);
  const SamplingMap sm = semiregular_sampling(opt.n, resolve_pattern(opt.big),
                                              resolve_pattern(opt.small));
  std::cout << report(sm);
  save_if_requested(to_json(sm), opt.out);
  return 0;
}

int run_lift(const Options& opt) {
  check_cap(opt.n);
  const PermutationGroup G = make_group(group_kind(opt.group), opt.n);
  const OrbitDecomposition big =
      orbits(G, complete_design(opt.n, resolve_pattern(opt.big)).blocks);
  const OrbitDecomposition small =
      orbits(G, complete_design(opt.n, resolve_pattern(opt.small)).blocks);
  const LiftedSampling ls =
      lift_sampling(G, big, small, rule_from_json(load_json(opt.in.at(0))));
  std::cout << report(ls);
  save_if_requested(to_json(ls.map), opt.out);
  return 0;
}

int run_orbits(const Options& opt) {
  check_cap(opt.n);
  const PermutationGroup G = make_group(group_kind(opt.group), opt.n);
  const OrbitDecomposition od =
      orbits(G, complete_design(opt.n, resolve_pattern(opt.big)).blocks);
  std::cout << "group " << to_string(G.kind()) << " degree " << G.degree()
            << " order " << G.order() << "\n"
            << "orbits: " << od.orbit_count() << ", semiregular: "
            << (is_semiregular(G, od) ? "yes" : "no") << "\n";
  for (long long o = 0; o < od.orbit_count(); ++o)
    std::cout << "orbit " << o << ": size " << od.orbit_size[o] << " stab "
              << od.stabilizer_order[o] << " rep "
              << render_edges(od.objects[od.representative[o]]) << "\n";
  save_if_requested(orbits_to_json(G, od), opt.out);
  return 0;
}

int run_starter(const Options& opt) {
  check_cap(opt.n);
  const TripleStarter ts = triple_starter(opt.n);
  std::cout << report(ts);
  const LiftedSampling ls = triple_sampling(opt.n);
  std::cout << "lift check: " << verify_sampling(ls.map).summary() << "\n";
  save_if_requested(to_json(ts), opt.out);
  return 0;
}

int run_nest(const Options& opt) {
  auto [cs, given] = cycle_system_from_json(load_json(opt.in.at(0)));
  check_cap(cs.n);
  const NestingSearchResult result = search_nesting(cs, opt.budget);
  switch (result.status) {
    case SearchStatus::found: {
      const NestingReport check = verify_nesting(cs, *result.nesting);
      if (!check.ok) throw Error("search returned an invalid nesting");
      std::cout << "nesting found after " << result.nodes << " nodes: hubs";
      for (int h : result.nesting->hubs) std::cout << ' ' << h;
      std::cout << "\n";
      save_if_requested(to_json(cs, &*result.nesting), opt.out);
      return 0;
    }
    case SearchStatus::none_exists:
      std::cout << "no nesting exists (search space exhausted after "
                << result.nodes << " nodes)\n";
      return 1;
    case SearchStatus::budget_exceeded:
      throw Error("search budget exceeded after " +
                  std::to_string(result.nodes) +
                  " nodes; existence undecided (raise --budget)");
  }
  throw Error("unreachable search status");
}

int run_verify(const Options& opt, const std::string& sampling_path) {
  std::string path = sampling_path;
  if (path.empty() && !opt.in.empty()) path = opt.in.front();
  if (path.empty()) throw Error("verify needs --in or --sampling");
  const json j = load_json(path);
  if (!j.contains("assignment") && !j.contains("cycles") &&
      !j.contains("blocks"))
    throw Error("unrecognized artifact shape in " + path);
  try {
    if (j.contains("assignment") && j.contains("strict")) {
      const EmbeddingMap em = embedding_from_json(j);
      const std::string summary = verify_embedding(em).summary();
      std::cout << "embedding valid: " << summary
                << (em.strict ? ", strict" : "") << "\n";
    } else if (j.contains("assignment")) {
      const std::string summary =
          verify_sampling(sampling_from_json(j)).summary();
      std::cout << "sampling valid: " << summary << "\n";
    } else if (j.contains("cycles")) {
      const auto [cs, f] = cycle_system_from_json(j);
      if (f) {
        const NestingReport report = verify_nesting(cs, *f);
        if (!report.ok) {
          std::cout << "nesting invalid: " << report.detail << "\n";
          return 1;
        }
        std::cout << "nesting valid: " << cs.cycles.size() << " cycles\n";
      } else {
        const DesignReport report = verify_design(cs.to_block_set());
        if (!report.ok || report.multiplicity != 1) {
          std::cout << "cycle system invalid: " << report.summary() << "\n";
          return 1;
        }
        std::cout << "cycle system valid: " << cs.cycles.size()
                  << " cycles\n";
      }
    } else {
      const DesignReport report = verify_design(block_set_from_json(j));
      if (!report.ok) {
        std::cout << "block set invalid: " << report.summary() << "\n";
        return 1;
      }
      std::cout << "block set valid: " << report.summary() << "\n";
    }
  } catch (const Error& e) {
    // The file parsed but its content fails verification.
    std::cout << "invalid: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run_compose(const Options& opt) {
  const SamplingMap first = sampling_from_json(load_json(opt.in.at(0)));
  const SamplingMap second = sampling_from_json(load_json(opt.in.at(1)));
  const SamplingMap out = compose(first, second);
  std::cout << report(out);
  save_if_requested(to_json(out), opt.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"design_sampler: samplings and embeddings between complete "
               "graph designs"};
  app.require_subcommand(1);
  Options opt;
  std::string sampling_path;

  const auto add_n = [&](CLI::App* cmd) {
    cmd->add_option("--n", opt.n, "host order")->required();
  };
  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("-o,--out", opt.out, "output JSON path");
  };
  const auto add_patterns = [&](CLI::App* cmd) {
    cmd->add_option("--big", opt.big, "big pattern (K4, C5, ... or JSON path)")
        ->required();
    cmd->add_option("--small", opt.small, "small pattern")->required();
  };

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "count and list the copies of a pattern in K_n");
  add_n(enumerate);
  enumerate->add_option("--big", opt.big, "pattern")->required();
  add_out(enumerate);

  CLI::App* sample =
      app.add_subcommand("sample", "construct a regular sampling");
  add_n(sample);
  add_patterns(sample);
  sample->add_option("--lambda", opt.lambda, "required redundancy");
  add_out(sample);

  CLI::App* embed =
      app.add_subcommand("embed", "construct a regular embedding");
  add_n(embed);
  add_patterns(embed);
  add_out(embed);

  CLI::App* semiregular = app.add_subcommand(
      "semiregular", "construct a (1,2)-semiregular sampling");
  add_n(semiregular);
  add_patterns(semiregular);
  add_out(semiregular);

  CLI::App* lift = app.add_subcommand(
      "lift", "extend a representative rule to a full sampling");
  add_n(lift);
  add_patterns(lift);
  lift->add_option("--group", opt.group, "cyclic, affine or sym")->required();
  lift->add_option("--in", opt.in, "rule JSON path")->required()->expected(1);
  add_out(lift);

  CLI::App* orbit_cmd = app.add_subcommand(
      "orbits", "orbit decomposition of a complete design class");
  add_n(orbit_cmd);
  orbit_cmd->add_option("--big", opt.big, "pattern")->required();
  orbit_cmd->add_option("--group", opt.group, "cyclic, affine or sym")
      ->required();
  add_out(orbit_cmd);

  CLI::App* starter = app.add_subcommand(
      "starter", "triple starter table for n = 2 (mod 3)");
  add_n(starter);
  add_out(starter);

  CLI::App* nest =
      app.add_subcommand("nest", "search a nesting for a cycle system");
  nest->add_option("--in", opt.in, "cycle system JSON path")
      ->required()
      ->expected(1);
  nest->add_option("--budget", opt.budget, "search node budget");
  add_out(nest);

  CLI::App* verify = app.add_subcommand("verify", "verify a JSON artifact");
  verify->add_option("--in", opt.in, "artifact JSON path")->expected(1);
  verify->add_option("--sampling", sampling_path, "sampling JSON path");

  CLI::App* comp = app.add_subcommand("compose", "compose two samplings");
  comp->add_option("--in", opt.in, "two sampling JSON paths")
      ->required()
      ->expected(2);
  add_out(comp);

  try {
    app.parse(argc, argv);
    if (*enumerate) return run_enumerate(opt);
    if (*sample) return run_sample(opt);
    if (*embed) return run_embed(opt);
    if (*semiregular) return run_semiregular(opt);
    if (*lift) return run_lift(opt);
    if (*orbit_cmd) return run_orbits(opt);
    if (*starter) return run_starter(opt);
    if (*nest) return run_nest(opt);
    if (*verify) return run_verify(opt, sampling_path);
    if (*comp) return run_compose(opt);
    throw Error("no subcommand");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Nonexistence& e) {
    std::cout << "nonexistence: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
