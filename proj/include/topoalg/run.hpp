// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_RUN_HPP
#define TOPOALG_RUN_HPP

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

#include "topoalg/cechain.hpp"
#include "topoalg/clifford.hpp"
#include "topoalg/dictscan.hpp"
#include "topoalg/json_io.hpp"
#include "topoalg/model.hpp"
#include "topoalg/uchr.hpp"

namespace topoalg {

namespace cli {

inline int require_cap(const json& caps, const std::string& key, const std::string& ptr) {
  if (!caps.contains(key)) schema::fail(ptr + "/caps/" + key, "missing");
  const int v = caps.at(key).get<int>();
  if (v <= 0) schema::fail(ptr + "/caps/" + key, "must be positive");
  return v;
}

template <FieldScalar F>
Report run_command(const std::string& command, const json& inputs, const json& caps) {
  Report rep;
  rep.command = command;

  if (command == "exact-112") {
    const int depth = require_cap(caps, "depth", "");
    const auto u = schema::flagged_space(inputs.at("u"), "/inputs/u");
    const auto v = schema::flagged_space(inputs.at("v"), "/inputs/v");
    const int h = (depth + 1) / 2;
    bool all_exact = true;
    json table = json::array();
    for (int lu = -h; lu <= h; ++lu)
      for (int hu = lu; hu <= h && hu - lu <= depth; ++hu)
        for (int lv = -h; lv <= h; ++lv)
          for (int hv = lv; hv <= h && hv - lv <= depth; ++hv) {
            const auto r = check_exact_112<F>(u, v, {lu, hu}, {lv, hv});
            all_exact = all_exact && r.exact();
            if (!r.exact())
              table.push_back({{"u", {lu, hu}}, {"v", {lv, hv}}, {"exact", false}});
          }
    rep.verdicts["exact"] = all_exact;
    rep.dims["failures"] = table;
  } else if (command == "hom-blocks") {
    const int depth = require_cap(caps, "depth", "");
    const TateSplit f{schema::flagged_space(inputs.at("f"), "/inputs/f"), caps.value("split_f", 0)};
    const TateSplit g{schema::flagged_space(inputs.at("g"), "/inputs/g"), caps.value("split_g", 0)};
    auto t = hom_space(f, g, HomVariant::All);
    auto tshow = [](BlockTopology b) {
      switch (b) {
        case BlockTopology::DiscreteTop: return "discrete";
        case BlockTopology::CompactTop: return "compact";
        case BlockTopology::ProTop: return "pro";
        default: return "ind";
      }
    };
    json blocks = json::object();
    for (const char* bk : {"cc", "cd", "dc", "dd"})
      blocks[bk] = tshow(t.block(bk[0], bk[1]).topology);
    rep.dims["blocks"] = blocks;
    rep.verdicts["cd_discrete"] = t.block('c', 'd').topology == BlockTopology::DiscreteTop;
    rep.verdicts["dc_compact"] = t.block('d', 'c').topology == BlockTopology::CompactTop;
    bool exact = true;
    for (int d = 1; d <= depth; ++d) {
      auto r = check_hom_sequence<F>(f, g, {-d, d}, {-d, d});
      exact = exact && r.exact();
      rep.dims["sequence_depth_" + std::to_string(d)] = {{"f", r.dim_f}, {"c", r.dim_c}, {"d", r.dim_d}, {"all", r.dim_all}};
    }
    rep.verdicts["sequence_exact"] = exact;
    auto lr = check_legacy_regression<F>(f, g, depth);
    rep.verdicts["legacy_strictly_differs"] = lr.strict_difference();
    rep.witnesses["legacy"] = lr.witness;
  } else if (command == "jacobi-check") {
    const auto t = schema::assoc_table<F>(inputs.at("algebra"), "/inputs/algebra");
    const auto mu = chiral_from_assoc(t);
    const auto jv = jacobi_check(mu);
    const auto aw = associativity_witness(t);
    rep.verdicts["skew"] = is_skew(mu);
    rep.verdicts["jacobi"] = jv.holds;
    rep.verdicts["matches_associativity"] = jv.holds == !aw.has_value();
    if (jv.witness) {
      json w;
      w["order"] = jv.witness->order;
      w["tuple"] = jv.witness->tuple;
      json defect = json::array();
      for (const auto& d : jv.witness->defect) defect.push_back(d.str());
      w["defect"] = defect;
      rep.witnesses["jacobi"] = w;
    }
  } else if (command == "admissibility") {
    const int depth = require_cap(caps, "depth", "");
    if (inputs.contains("lie")) {
      const auto lie = schema::lie_pres<F>(inputs.at("lie"), "/inputs/lie");
      auto v = admissibility_check_envelope(lie, depth);
      rep.verdicts["admissible_to_depth"] = v.admissible_to_depth;
      rep.witnesses["ideal"] = v.witness;
    } else {
      const auto a = schema::algebra_pres<F>(inputs.at("algebra"), "/inputs/algebra");
      auto v = admissibility_check(a, [](int index) { return index; }, depth);
      rep.verdicts["admissible_to_depth"] = v.admissible_to_depth;
      rep.witnesses["ideal"] = v.witness;
    }
  } else if (command == "free-cont") {
    const int depth = require_cap(caps, "depth", "");
    const auto v = schema::flagged_space(inputs.at("space"), "/inputs/space");
    const auto r = free_star_continuity(v, depth);
    rep.verdicts["decided"] = r.verdict != ContinuityVerdict::Inconclusive;
    rep.dims["verdict"] = r.verdict == ContinuityVerdict::Continuous       ? "continuous"
                          : r.verdict == ContinuityVerdict::Inconclusive   ? "inconclusive"
                                                                           : "discontinuous-with-witness";
    rep.witnesses["certificate"] = r.certificate;
  } else if (command == "pbw-report" || command == "vacuum-dims") {
    const auto lie = schema::lie_pres<F>(inputs.at("lie"), "/inputs/lie");
    const int degree = require_cap(caps, "degree", "");
    const int p = caps.value("p", 0);
    const int floor = caps.value("floor", -2);
    if (command == "vacuum-dims") {
      rep.dims["by_degree"] = vacuum_dims(lie, p, degree, floor);
    } else {
      auto v = pbw_check(lie, p, degree, floor);
      rep.verdicts["pbw"] = v.holds;
      rep.dims["envelope"] = v.envelope_dims;
      rep.dims["sym"] = v.sym_dims;
    }
  } else if (command == "extension-classify") {
    const int depth = require_cap(caps, "depth", "");
    const auto e = schema::extension_datum<F>(inputs.at("extension"), "/inputs/extension");
    const auto r = classify_extension(e, depth);
    rep.verdicts["decided"] = r.tag != ExtensionTag::TopologicalOnly || !(r.left_arrow && r.right_arrow);
    rep.dims["tag"] = r.tag == ExtensionTag::Classical ? "classical"
                      : r.tag == ExtensionTag::Chiral  ? "chiral"
                      : r.tag == ExtensionTag::LambdaChiral ? ("lambda-chiral(" + r.lambda_str + ")")
                                                            : "topological-only";
    rep.dims["classical"] = r.classical;
    rep.dims["chiral"] = r.chiral;
    rep.dims["lambda"] = r.lambda_str;
  } else if (command == "baer") {
    const int depth = require_cap(caps, "depth", "");
    const auto e1 = schema::extension_datum<F>(inputs.at("e1"), "/inputs/e1");
    const auto e2 = schema::extension_datum<F>(inputs.at("e2"), "/inputs/e2");
    const F a1 = schema::parse_scalar<F>(caps.value("a1", json(1)), "/caps/a1");
    const F a2 = schema::parse_scalar<F>(caps.value("a2", json(1)), "/caps/a2");
    const auto e = baer_combine(a1, e1, a2, e2);
    rep.dims["lambda"] = e.lambda.str();
    rep.verdicts["lambda_additive"] = e.lambda == a1 * e1.lambda + a2 * e2.lambda;
    const auto r = classify_extension(e, depth);
    rep.dims["tag"] = r.chiral ? "chiral" : r.classical ? "classical" : "other";
  } else if (command == "envelope-dims" || command == "weak-pbw") {
    const int degree = require_cap(caps, "degree", "");
    const auto e = schema::extension_datum<F>(inputs.at("extension"), "/inputs/extension");
    if (command == "envelope-dims") {
      rep.dims["by_degree"] = envelope_dims(e, degree);
    } else {
      const auto v = weak_pbw_2_10(e, degree);
      rep.verdicts["weak_pbw"] = v.holds;
      rep.dims["envelope"] = v.envelope;
      rep.dims["sym"] = v.sym;
    }
  } else if (command == "ce-check") {
    const auto a = schema::algebroid_pres<F>(inputs.at("algebroid"), "/inputs/algebroid");
    CEWindow<F> ce(a);
    rep.verdicts["algebroid_valid"] = validate_algebroid(a);
    rep.verdicts["d_squared_zero"] = ce_d_squared_zero(ce);
    const auto ex = bracket_from_differential(ce);
    bool roundtrip = ex.valid;
    for (int g = 0; g < a.rank() && roundtrip; ++g)
      for (int r = 0; r < a.ring_dim() && roundtrip; ++r) {
        auto acted = a.anchor(g, r);
        roundtrip = acted.has_value() && ex.anchor[g][r] == *acted;
      }
    rep.verdicts["roundtrip"] = roundtrip;
  } else if (command == "cartan") {
    const int degree = require_cap(caps, "degree", "");
    const auto a = schema::algebroid_pres<F>(inputs.at("algebroid"), "/inputs/algebroid");
    CEWindow<F> ce(a);
    auto vec_of = [&](const json& spec, const std::string& ptr) {
      std::vector<std::vector<F>> v(a.rank(), std::vector<F>(a.ring_dim(), F(0)));
      const int gen = spec.at(0).get<int>();
      const int slot = spec.at(1).get<int>();
      if (gen < 0 || gen >= a.rank() || slot < 0 || slot >= a.ring_dim()) schema::fail(ptr, "out of range");
      v[gen][slot] = F(1);
      return v;
    };
    const auto r = cartan_relations(ce, vec_of(inputs.at("l1"), "/inputs/l1"), vec_of(inputs.at("l2"), "/inputs/l2"),
                                    degree);
    rep.verdicts["d_iota_is_lie"] = r.d_iota_is_lie;
    rep.verdicts["iota_iota_vanishes"] = r.iota_iota_vanishes;
    rep.verdicts["lie_iota_is_bracket_iota"] = r.lie_iota_is_bracket_iota;
    rep.verdicts["lie_lie_is_bracket_lie"] = r.lie_lie_is_bracket_lie;
    rep.verdicts["nonempty"] = r.columns_checked > 0;
    rep.dims["columns_checked"] = r.columns_checked;
  } else if (command == "clifford-dims") {
    const int n_max = require_cap(caps, "n", "");
    json dims = json::array();
    bool relations = true;
    for (int n = 1; n <= n_max; ++n) {
      auto cl = CliffordWindow<F>::standard(n);
      dims.push_back(cl.dim());
      for (int i = 0; i < n && relations; ++i)
        for (int j = 0; j < n && relations; ++j) {
          auto anti = cl.add(cl.mul(cl.gen_star(i), cl.gen_vec(j)), cl.mul(cl.gen_vec(j), cl.gen_star(i)));
          relations = (i == j) ? cl.equal(anti, cl.one()) : anti.is_zero();
        }
    }
    rep.dims["by_rank"] = dims;
    rep.verdicts["relations"] = relations;
  } else if (command == "ks-check") {
    const int degree = caps.value("degree", 1);
    const auto a = schema::algebroid_pres<F>(inputs.at("algebroid"), "/inputs/algebroid");
    CEWindow<F> ce(a);
    const auto r = kodaira_spencer_check(ce, degree);
    rep.verdicts["isomorphism"] = r.isomorphism;
    rep.dims["plus"] = r.dim_plus;
    rep.dims["quot"] = r.dim_quot;
  } else {
    schema::fail("/command", "unknown command " + command);
  }
  return rep;
}

/// Resolve {"file": "relative/path.json"} nodes against the scenario
/// directory, collecting content digests.
inline json resolve_files(const json& node, const std::filesystem::path& dir, json& digests) {
  if (node.is_object()) {
    if (node.contains("file") && node.size() == 1) {
      const auto path = dir / node.at("file").get<std::string>();
      std::ifstream in(path);
      if (!in) schema::fail("/inputs", "cannot open " + node.at("file").get<std::string>());
      std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      digests[node.at("file").get<std::string>()] = digest_hex(bytes);
      return resolve_files(json::parse(bytes), path.parent_path(), digests);
    }
    json out = json::object();
    for (const auto& [k, v] : node.items()) out[k] = resolve_files(v, dir, digests);
    return out;
  }
  if (node.is_array()) {
    json out = json::array();
    for (const auto& v : node) out.push_back(resolve_files(v, dir, digests));
    return out;
  }
  return node;
}

/// Execute one scenario document.  Exit semantics live on the report:
/// failed verdicts, schema violations and mismatched expectations all make
/// passed() false.
template <FieldScalar F>
Report run_scenario(const json& scenario, const std::filesystem::path& dir, bool check_expected = true) {
  Report rep;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (!scenario.contains("name")) schema::fail("/name", "missing");
    rep.scenario = scenario.at("name").get<std::string>();
    if (!scenario.contains("command")) schema::fail("/command", "missing");
    json digests = json::object();
    const json inputs = resolve_files(scenario.value("inputs", json::object()), dir, digests);
    const json caps = scenario.value("caps", json::object());
    Report inner = run_command<F>(scenario.at("command").get<std::string>(), inputs, caps);
    inner.scenario = rep.scenario;
    inner.input_digests = digests;
    rep = inner;
    if (check_expected && scenario.contains("expected")) {
      std::string where;
      const bool match = fragment_matches(scenario.at("expected"), strip_timing(rep.to_json()), &where);
      rep.verdicts["expected_fragment"] = match;
      if (!match) rep.witnesses["expected_mismatch"] = where;
    }
  } catch (const std::exception& e) {
    rep.error = e.what();
  }
  rep.timing_ms =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count() / 1000.0;
  return rep;
}

template <FieldScalar F>
Report run_scenario_file(const std::filesystem::path& path, bool check_expected = true) {
  std::ifstream in(path);
  if (!in) {
    Report rep;
    rep.error = "cannot open scenario " + path.string();
    return rep;
  }
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Report rep;
  try {
    json scenario = json::parse(bytes);
    rep = run_scenario<F>(scenario, path.parent_path(), check_expected);
  } catch (const std::exception& e) {
    rep.error = e.what();
  }
  rep.input_digests[path.filename().string()] = digest_hex(bytes);
  return rep;
}

struct SuiteResult {
  json report;
  bool all_passed = false;
};

/// Run every scenario in a directory, optionally in parallel; aggregation
/// is by sorted file name, so the verdicts are schedule independent.
template <FieldScalar F>
SuiteResult run_suite(const std::filesystem::path& dir, int jobs = 1, bool regression = false) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<Report> reports(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= files.size()) return;
      reports[i] = run_scenario_file<F>(files[i], regression);
    }
  };
  const auto t0 = std::chrono::steady_clock::now();
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SuiteResult out;
  json scenarios = json::array();
  int passed = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const bool ok = reports[i].passed();
    passed += ok ? 1 : 0;
    json entry;
    entry["file"] = files[i].filename().string();
    entry["name"] = reports[i].scenario;
    entry["passed"] = ok;
    entry["report"] = reports[i].to_json();
    scenarios.push_back(entry);
  }
  out.report["schema"] = "suite-report/v1";
  out.report["library_version"] = kVersion;
  out.report["total"] = files.size();
  out.report["passed"] = passed;
  out.report["failed"] = static_cast<int>(files.size()) - passed;
  out.report["regression_mode"] = regression;
  out.report["scenarios"] = scenarios;
  out.report["total_ms"] =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count() / 1000.0;
  out.all_passed = passed == static_cast<int>(files.size());
  return out;
}

}  // namespace cli

}  // namespace topoalg

#endif  // TOPOALG_RUN_HPP
