// committee: solve, check and generate constrained committee elections.

#include "committee/document.hpp"
#include "committee/gen.hpp"
#include "committee/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace committee;

namespace {

std::string read_input(const std::string& path) {
  std::stringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained committee elections"};
  app.require_subcommand(1);

  std::string input;
  std::string output;

  auto* solve = app.add_subcommand("solve", "Find an optimal committee");
  std::string solver = "auto";
  std::uint64_t budget = OracleBudget{}.max_committee_enumeration;
  int max_candidates = OracleBudget{}.max_candidates;
  solve->add_option("-i,--input", input, "Instance document (default stdin)");
  solve->add_option("-o,--output", output, "Result document (default stdout)");
  solve->add_option("--solver", solver, "auto, dp, region or oracle")
      ->check(CLI::IsMember({"auto", "dp", "region", "oracle"}));
  solve->add_option("--budget", budget, "Oracle search-node limit");
  solve->add_option("--max-candidates", max_candidates, "Oracle candidate limit");

  auto* check = app.add_subcommand("check", "Validate a committee against the constraints");
  std::string committee_ids;
  check->add_option("-i,--input", input, "Instance document (default stdin)");
  check->add_option("-o,--output", output, "Report (default stdout)");
  check->add_option("-c,--committee", committee_ids, "Comma-separated candidate identifiers")->required();

  auto* exists = app.add_subcommand("exists", "Is some feasible committee at least as good as the reference?");
  std::string reference_ids;
  exists->add_option("-i,--input", input, "Instance document (default stdin)");
  exists->add_option("-r,--reference", reference_ids, "Comma-separated identifiers (default: the document's)");
  exists->add_option("--budget", budget, "Oracle search-node limit");
  exists->add_option("--max-candidates", max_candidates, "Oracle candidate limit");

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  int k = 2;
  std::string variant = "intervals";
  auto* vc = gen->add_subcommand("vertex-cover", "Vertex cover reduction from an edge list");
  auto* clique_sntv = gen->add_subcommand("clique-sntv", "Clique reduction, SNTV");
  auto* clique_bloc = gen->add_subcommand("clique-bloc", "Clique reduction, Bloc");
  for (auto* sub : {vc, clique_sntv, clique_bloc}) {
    sub->add_option("-i,--input", input, "Edge list: 'V E' then E lines 'u v' (default stdin)");
    sub->add_option("-o,--output", output, "Instance document (default stdout)");
    sub->add_option("-k,--k", k, "Cover or clique size")->required();
  }
  vc->add_option("--variant", variant, "intervals or dominance")
      ->check(CLI::IsMember({"intervals", "dominance"}));

  auto* random = gen->add_subcommand("random", "Seeded random instance");
  RandomSpec spec;
  std::string mode = "disjoint";
  std::string structure = "tree_like";
  random->add_option("-o,--output", output, "Instance document (default stdout)");
  random->add_option("-m,--candidates", spec.candidates, "Number of candidates");
  random->add_option("-n,--voters", spec.voters, "Number of voters");
  random->add_option("-k,--k", spec.k, "Committee size");
  random->add_option("-p,--labels", spec.labels, "Number of labels");
  random->add_option("--mode", mode, "disjoint or overlapping")
      ->check(CLI::IsMember({"disjoint", "overlapping"}));
  random->add_option("--structure", structure, "tree_like or arbitrary")
      ->check(CLI::IsMember({"tree_like", "arbitrary"}));
  random->add_option("--seed", spec.seed, "Random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      const auto instance = parse_instance(read_input(input));
      const auto outcome = run_solve(instance, parse_solver_choice(solver), {max_candidates, budget});
      if (outcome.exit_code == 2) {
        std::cerr << "error: " << outcome.error << '\n';
        return 2;
      }
      write_output(output, result_document(instance, outcome.result));
      if (!outcome.result.note.empty()) std::cerr << outcome.result.note << '\n';
      return outcome.exit_code;
    }
    if (*check) {
      const auto instance = parse_instance(read_input(input));
      const auto outcome = run_check(instance, split_ids(committee_ids));
      write_output(output, outcome.document);
      return outcome.exit_code;
    }
    if (*exists) {
      const auto instance = parse_instance(read_input(input));
      CandidateSet reference;
      if (!reference_ids.empty()) {
        reference = instance.profile.committee_of(split_ids(reference_ids));
      } else if (instance.reference) {
        reference = *instance.reference;
      } else {
        throw InputError("no reference committee given");
      }
      const bool found = existence_query(instance.profile, instance.labeling, instance.constraints,
                                         instance.profile.committee_size(), make_order(instance),
                                         reference, {max_candidates, budget});
      std::cout << (found ? "true" : "false") << '\n';
      return found ? 0 : 1;
    }
    if (vc->parsed() || clique_sntv->parsed() || clique_bloc->parsed()) {
      const auto graph = Graph::parse_edge_list(read_input(input));
      ElectionInstance instance = vc->parsed()
                                      ? (variant == "dominance" ? gen_vertex_cover_dominance(graph, k)
                                                                : gen_vertex_cover_intervals(graph, k))
                                  : clique_sntv->parsed() ? gen_clique_sntv(graph, k)
                                                          : gen_clique_bloc(graph, k);
      write_output(output, serialize_instance(instance));
      return 0;
    }
    if (random->parsed()) {
      spec.mode = mode == "overlapping" ? LabelMode::overlapping : LabelMode::disjoint;
      spec.structure = structure == "arbitrary" ? DominanceShape::arbitrary : DominanceShape::tree_like;
      write_output(output, serialize_instance(gen_random(spec)));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
