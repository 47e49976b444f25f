#include "gpab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gpab/error.hpp"
#include "gpab/relations.hpp"
#include "gpab/report.hpp"
#include "gpab/words.hpp"

namespace gpab {

namespace {

LabeledGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedJson, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::vector<Order> parse_orders(const std::string& list) {
  std::vector<Order> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(Order::parse(item));
  if (out.empty()) throw Error(ErrorCode::NonPrimePower, "empty order list");
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph products of abelian groups: automorphisms and Out classification", "gpab"};
  app.require_subcommand(1);

  std::string path;
  std::string word;
  int bound = 4;
  bool corrupt = false;
  bool with_verify = false;

  auto* analyze = app.add_subcommand("analyze", "Print the JSON analysis report of a graph file");
  analyze->add_option("graph", path, "Graph JSON file")->required();
  analyze->add_flag("--verify", with_verify, "Include the relation catalog summary");
  analyze->add_option("--bound", bound, "Syllable bound for inner-automorphism searches")
      ->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Check the relation catalog; exit 1 on any failure");
  verify->add_option("graph", path, "Graph JSON file")->required();
  verify->add_option("--bound", bound, "Syllable bound for inner-automorphism searches")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--corrupt-first", corrupt)->group("");

  auto* nf = app.add_subcommand("nf", "Print the normal form of a word");
  nf->add_option("graph", path, "Graph JSON file")->required();
  nf->add_option("word", word, "Word such as \"a b^-2 c\"")->required();

  CensusOptions census_opt;
  std::string orders = "inf";
  auto* census = app.add_subcommand("census", "Classify seeded random graphs; CSV to stdout");
  census->add_option("--vertices", census_opt.vertices, "Vertices per graph")
      ->check(CLI::Range(1, VertexSet::kCapacity));
  census->add_option("--edge-prob", census_opt.edge_prob, "Edge probability")->check(CLI::Range(0.0, 1.0));
  census->add_option("--orders", orders, "Comma-separated vertex orders, e.g. inf,2,3");
  census->add_option("--count", census_opt.count, "Number of graphs")->check(CLI::NonNegativeNumber);
  census->add_option("--seed", census_opt.seed, "64-bit seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*analyze) {
      const LabeledGraph g = load_graph(path);
      std::optional<RelationReport> r;
      if (with_verify) {
        CatalogOptions opt;
        opt.bound = bound;
        r = verify_relation_catalog(g, opt);
      }
      out << analysis_report(g, r).dump(2) << "\n";
      return kExitOk;
    }
    if (*verify) {
      const LabeledGraph g = load_graph(path);
      CatalogOptions opt;
      opt.bound = bound;
      opt.corrupt_first = corrupt;
      const RelationReport r = verify_relation_catalog(g, opt);
      out << format_verification_table(r);
      return r.all_passed() ? kExitOk : kExitVerificationFailed;
    }
    if (*nf) {
      const LabeledGraph g = load_graph(path);
      out << normal_form(g, parse_word(g, word)).to_string() << "\n";
      return kExitOk;
    }
    if (*census) {
      census_opt.orders = parse_orders(orders);
      out << census_csv(run_census(census_opt));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gpab
