#pragma once

// JSON reports behind every CLI subcommand. Human-readable output is rendered
// from the same objects, so the two never disagree.

#include "critgroup/critical.hpp"
#include "critgroup/dollar.hpp"
#include "critgroup/experiment.hpp"
#include "critgroup/graph_io.hpp"
#include "critgroup/quotient.hpp"
#include "critgroup/surgery.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace critgroup::report {

using nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline const char* labeling_note =
    "vertices are 0-based here; the source labels them from 1 (source vertex k is vertex k-1)";

struct Caps {
  std::size_t enumeration = 100'000;  // stable configurations, torsion elements
  std::size_t trees = 1'000'000;
};

// Integers that fit in int64 become JSON numbers, larger ones strings.
inline ordered_json integer(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline ordered_json integers(const IntVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(integer(x));
  return a;
}

inline ordered_json matrix(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json r = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(integer(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline ordered_json group(const GroupPresentation& g) {
  return {{"group", g.str()}, {"torsion", integers(g.torsion)}, {"rank", g.rank}, {"full_diag", integers(g.full_diag)}};
}

inline ordered_json envelope(const char* command) {
  return {{"schema_version", schema_version}, {"command", command}};
}

inline void add_note(ordered_json& j, bool source_labels) {
  if (source_labels) j["note"] = labeling_note;
}

inline ordered_json graph_summary(const Digraph& g) {
  return {{"vertices", g.size()},
          {"arcs", g.arc_count()},
          {"undirected", g.is_symmetric()},
          {"strongly_connected", g.size() > 0 && is_strongly_connected(g)}};
}

inline ordered_json group_report(const Digraph& g, bool source_labels = false) {
  auto j = envelope("group");
  add_note(j, source_labels);
  j["graph"] = graph_summary(g);
  j["critical_group"] = group(critical_group(g));
  const auto c = nu_and_mu(g);
  j["mu0"] = c.mu0;
  j["mu1"] = c.mu1;
  j["nu"] = c.nu;
  j["terminal_components"] = rank_mu0(g);
  if (g.size() > 0 && g.is_symmetric() && components(g).weakly_connected())
    j["kappa"] = integer(spanning_tree_count(g));
  if (g.size() > 0 && is_strongly_connected(g)) j["activities"] = integers(vertex_activities(g).h);
  return j;
}

inline ordered_json activities_report(const Digraph& g, bool source_labels = false) {
  auto j = envelope("activities");
  add_note(j, source_labels);
  const auto h = vertex_activities(g);
  j["activities"] = integers(h.h);
  j["simple_vertices"] = simple_vertices(g);
  j["balanced"] = g.is_balanced();
  return j;
}

inline ordered_json dollar_base(const GameState& gs, const char* action, bool source_labels) {
  auto j = envelope("dollar");
  add_note(j, source_labels);
  j["action"] = action;
  j["bank"] = gs.bank();
  j["h_bank"] = integer(gs.activities()[gs.bank()]);
  return j;
}

inline ordered_json stabilize_report(const GameState& gs, const Configuration& c, bool source_labels = false) {
  auto j = dollar_base(gs, "stabilize", source_labels);
  const auto s = stabilize(gs, c);
  j["input"] = c.str();
  j["stable"] = s.stable.str();
  j["stable_values"] = s.stable.values();
  j["firing_counts"] = s.firing_counts;
  return j;
}

inline ordered_json successor_report(const GameState& gs, const Configuration& c, bool source_labels = false) {
  auto j = dollar_base(gs, "successor", source_labels);
  j["input"] = c.str();
  j["successor"] = successor(gs, c).str();
  return j;
}

inline ordered_json census_report(const GameState& gs, const Caps& caps, bool source_labels = false) {
  auto j = dollar_base(gs, "census", source_labels);
  ordered_json transitions = ordered_json::object();
  for (const auto& s : nonnegative_stable_configurations(gs, caps.enumeration))
    transitions[s.str()] = successor(gs, s).str();
  ordered_json classes = ordered_json::array();
  for (const auto& cls : critical_configurations(gs, caps.enumeration)) {
    ordered_json cycle = ordered_json::array();
    for (const auto& c : cls.cycle) cycle.push_back(c.str());
    classes.push_back({{"id", cls.id().str()}, {"size", cls.size()}, {"cycle", std::move(cycle)}});
  }
  j["class_count"] = classes.size();
  j["classes"] = std::move(classes);
  j["transitions"] = std::move(transitions);
  return j;
}

inline ordered_json classify_report(const GameState& gs, const Caps& caps, bool source_labels = false) {
  auto j = dollar_base(gs, "classify", source_labels);
  std::vector<std::size_t> sizes;
  for (const auto& cls : critical_configurations(gs, caps.enumeration)) sizes.push_back(cls.size());
  j["classification"] = to_string(classify_sizes(sizes, gs.activities()[gs.bank()]));
  j["class_sizes"] = sizes;
  const auto bij = verify_bijection(gs, caps.enumeration);
  j["torsion_order"] = integer(bij.torsion_order);
  j["bijection_holds"] = bij.holds();
  return j;
}

inline ordered_json quotient_report(const Digraph& g, const EquitablePartition& ep, const Caps& caps,
                                    bool source_labels = false) {
  auto j = envelope("quotient");
  add_note(j, source_labels);
  j["blocks"] = ep.blocks;
  const Digraph q = quotient_graph(ep);
  j["quotient_laplacian"] = matrix(laplacian(q));
  j["dual_group"] = group(dual_critical_group(g));
  j["quotient_dual_group"] = group(dual_critical_group(q));
  const bool injective = verify_rho_injective(g, ep, caps.enumeration);
  j["rho_injective"] = injective;
  if (injective) j["direct_summand"] = is_direct_summand(g, ep, caps.enumeration);
  return j;
}

inline ordered_json surgery_result(const SurgeryResult& r) {
  return {{"graph", serialize_graph(r.graph)},
          {"laplacian", matrix(laplacian(r.graph))},
          {"critical_group", group(critical_group(r.graph))}};
}

inline ordered_json identify_report(const SurgerySpec& spec, bool force, bool source_labels = false) {
  auto j = envelope("surgery");
  add_note(j, source_labels);
  j["mode"] = "identify";
  const auto r = identify(spec);
  j["result"] = surgery_result(r);
  j["union_group"] = group(critical_group(disjoint_union(spec.g, spec.h)));
  const auto [v, w] = spec.pairs.front();
  try {
    j["theorem_holds"] = verify_identification_theorem(spec.g, spec.h, v, w);
  } catch (const HypothesisViolation& e) {
    if (!force) throw;
    j["hypothesis_violation"] = e.what();
  }
  return j;
}

inline ordered_json twist_report(const SurgerySpec& spec, bool force, bool source_labels = false) {
  auto j = envelope("surgery");
  add_note(j, source_labels);
  j["mode"] = "twist";
  try {
    verify_twist_theorem(spec);
  } catch (const HypothesisViolation& e) {
    if (!force) throw;
    j["hypothesis_violation"] = e.what();
  }
  const auto t = twist_pair(spec);
  j["bullet"] = surgery_result(t.bullet);
  j["circle"] = surgery_result(t.circle);
  j["isomorphic"] = critical_group(t.bullet.graph).isomorphic(critical_group(t.circle.graph));
  return j;
}

inline ordered_json experiment_report(const ExperimentReport& r) {
  auto j = envelope("experiment");
  j["n"] = r.n;
  j["p"] = r.p;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["connected_count"] = r.connected_count;
  j["cyclic_count"] = r.cyclic_count;
  j["nu_total"] = r.nu_total;
  j["mean_nu"] = r.mean_nu;
  j["squarefree_kappa_count"] = r.squarefree_kappa_count;
  return j;
}

}  // namespace critgroup::report
