#include "gpab/report.hpp"

#include <sstream>

#include <fmt/format.h>

#include "gpab/abelian.hpp"
#include "gpab/domination.hpp"
#include "gpab/error.hpp"
#include "gpab/generators.hpp"
#include "gpab/random.hpp"
#include "gpab/sil.hpp"
#include "gpab/structure.hpp"

namespace gpab {

using nlohmann::json;

namespace {

json name_list(const LabeledGraph& g, const VertexSet& s) {
  json out = json::array();
  for (int v : s) out.push_back(g.name(v));
  return out;
}

json automorphism_json(const Automorphism& a) {
  const LabeledGraph& g = a.graph();
  json images = json::object();
  for (int v = 0; v < g.size(); ++v)
    if (a.image(v) != GroupElement::generator(g, v)) images[g.name(v)] = a.image(v).to_string();
  return images;
}

json domination_json(const LabeledGraph& g, const DominationData& d) {
  json classes = json::array();
  for (size_t c = 0; c < d.classes.size(); ++c) {
    json entry = {{"vertices", name_list(g, d.classes[c])},
                  {"kind", to_string(d.kinds[c])},
                  {"maximal", static_cast<bool>(d.maximal[c])}};
    if (d.kinds[c] == ClassKind::FiniteAbelianP) entry["prime"] = d.class_prime[c];
    classes.push_back(entry);
  }
  json inf_classes = json::array();
  for (const auto& c : d.classes_inf)
    if (c.size() > 0 && g.order(c.first()).is_infinite()) inf_classes.push_back(name_list(g, c));
  json relation = json::object();
  for (int u = 0; u < g.size(); ++u) relation[g.name(u)] = name_list(g, d.leq[u]);
  return {{"classes", classes}, {"infinite_classes", inf_classes}, {"dominated_by", relation}};
}

json sil_json(const LabeledGraph& g) {
  const auto sils = find_sils(g);
  int counts[4] = {0, 0, 0, 0};
  json list = json::array();
  for (const auto& w : sils) {
    ++counts[static_cast<int>(w.kind)];
    json vs = json::array();
    for (int v : w.vertices) vs.push_back(g.name(v));
    list.push_back({{"kind", to_string(w.kind)}, {"vertices", vs}, {"component", name_list(g, w.component)}});
  }
  return {{"sil", counts[static_cast<int>(SilKind::SIL)]},
          {"non_coxeter_sil", counts[static_cast<int>(SilKind::NonCoxeterSIL)]},
          {"stil", counts[static_cast<int>(SilKind::STIL)]},
          {"fsil", counts[static_cast<int>(SilKind::FSIL)]},
          {"no_free_sil", has_no_free_sil(g)},
          {"witnesses", list}};
}

json classification_json(const Classification& c) {
  if (c.free_subgroup) {
    json reasons = json::array();
    for (auto r : c.all_reasons) reasons.push_back(to_string(r));
    json witnesses = json::array();
    for (const auto& w : c.witnesses)
      witnesses.push_back({{"name", w.name}, {"images", automorphism_json(w.aut)}});
    return {{"type", "FreeSubgroup"}, {"reason", to_string(c.reason)}, {"all_reasons", reasons},
            {"witnesses", witnesses}};
  }
  json out = {{"type", "VirtuallyNilpotent"}, {"depth", c.depth}, {"sl_blocks", c.sl_blocks},
              {"ses_note", c.ses_note}};
  if (c.filtration_bound != c.depth) out["filtration_bound"] = c.filtration_bound;
  return out;
}

}  // namespace

json verification_json(const RelationReport& r) {
  json families = json::array();
  for (const auto& s : r.summary())
    families.push_back({{"family", s.family},
                        {"passed", s.passed},
                        {"failed", s.failed},
                        {"not_found", s.not_found},
                        {"out_level", s.out_level}});
  json failures = json::array();
  for (const auto& c : r.checks)
    if (c.outcome != CheckOutcome::Pass)
      failures.push_back({{"family", c.family},
                          {"configuration", c.configuration},
                          {"level", to_string(c.level)},
                          {"outcome", to_string(c.outcome)}});
  return {{"passed", r.all_passed()}, {"checks", r.checks.size()}, {"families", families},
          {"failures", failures}};
}

json analysis_report(const LabeledGraph& g, const std::optional<RelationReport>& verification) {
  const DominationData d = equivalence_classes(g);
  const AbelianizedGroup ab = abelianized_group(g, d);
  const Classification cls = classify(g);

  json report;
  report["schema"] = kReportSchema;
  report["graph"] = json::parse(serialize_graph(g));
  report["n"] = ab.free_rank();
  report["torsion_moduli"] = ab.moduli;
  report["domination"] = domination_json(g, d);
  report["sil_census"] = sil_json(g);
  report["classification"] = classification_json(cls);
  report["infinity_depth"] = cls.depth;
  report["filtration_bound"] = cls.filtration_bound;
  report["sl_blocks"] = special_linear_block_sizes(g);

  if (is_connected(g) && !is_star_of_vertex(g)) {
    report["kernel_P_generator_count"] = projection_kernel_generators(g).size();
    report["extended_graph_size"] = extended_graph_size(g);
  } else {
    report["kernel_P_generator_count"] = nullptr;
    report["extended_graph_size"] = nullptr;
  }

  const auto pcs = partial_conjugation_generators(g);
  const auto trs = infinite_transvection_generators(g);
  const auto cts = commutator_transvection_generators(g);
  report["generator_counts"] = {
      {"partial_conjugations", pcs.size()},
      {"infinite_transvections", trs.size()},
      {"commutator_transvections", cts.size()},
      {"torelli", torelli_generators(g).size()},
      {"sl_kernel", sl_kernel_generators(g).size()},
      {"finite_index", finite_index_generators(g).size()},
      {"projection_kernel", report["kernel_P_generator_count"]},
  };
  if (verification) report["verification"] = verification_json(*verification);
  return report;
}

std::string format_verification_table(const RelationReport& r) {
  std::ostringstream out;
  out << fmt::format("{:<40} {:>7} {:>7} {:>10} {:>6}\n", "family", "passed", "failed", "not-found", "out");
  for (const auto& s : r.summary())
    out << fmt::format("{:<40} {:>7} {:>7} {:>10} {:>6}\n", s.family, s.passed, s.failed, s.not_found,
                       s.out_level);
  for (const auto& c : r.checks)
    if (c.outcome != CheckOutcome::Pass)
      out << fmt::format("{}: {} [{}] {}\n", to_string(c.outcome), c.family, to_string(c.level),
                         c.configuration);
  out << (r.all_passed() ? "all checks passed" : "some checks failed") << " (" << r.checks.size()
      << " checks)\n";
  return out.str();
}

LabeledGraph census_graph(const CensusOptions& options, int index) {
  SplitMix64 mixer(options.seed);
  uint64_t stream = mixer.next();
  for (int i = 0; i < index; ++i) stream = mixer.next();
  SplitMix64 rng(stream);
  RandomGraphOptions opt;
  opt.vertices = options.vertices;
  opt.edge_prob = options.edge_prob;
  opt.orders = options.orders;
  return random_graph(rng, opt);
}

std::vector<CensusRow> run_census(const CensusOptions& options) {
  std::vector<CensusRow> rows;
  for (int i = 0; i < options.count; ++i) {
    const LabeledGraph g = census_graph(options, i);
    const Classification c = classify(g);
    CensusRow row;
    row.seed = options.seed;
    row.index = i;
    row.vertices = g.size();
    row.edges = g.edge_count();
    row.classification = c.free_subgroup ? "FreeSubgroup" : "VirtuallyNilpotent";
    if (c.free_subgroup)
      row.reason = to_string(c.reason);
    else
      row.depth = c.depth;
    rows.push_back(row);
  }
  return rows;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::string out = "seed,index,vertices,edges,classification,reason,depth\n";
  for (const auto& r : rows)
    out += fmt::format("{},{},{},{},{},{},{}\n", r.seed, r.index, r.vertices, r.edges, r.classification,
                       r.reason, r.depth ? std::to_string(*r.depth) : std::string());
  return out;
}

}  // namespace gpab
