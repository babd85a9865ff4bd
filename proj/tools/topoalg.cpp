// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

// Batch driver: loads JSON presentations, runs the registered checks and
// emits deterministic JSON reports.  The ground field is rational by
// default; TOPOALG_FIELD=Fp:<p> switches every computation to the prime
// field.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "topoalg/topoalg.hpp"

namespace {

struct Options {
  std::string run_path;
  std::string suite_dir;
  std::string out_path;
  std::string direct_command;
  std::string direct_inputs;
  int jobs = 1;
  bool regression = false;
};

void emit(const topoalg::json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  out << text;
}

template <topoalg::FieldScalar F>
int dispatch(const Options& opt) {
  using namespace topoalg;
  if (!opt.run_path.empty()) {
    const Report rep = cli::run_scenario_file<F>(opt.run_path);
    emit(rep.to_json(), opt.out_path);
    return rep.passed() ? 0 : 1;
  }
  if (!opt.suite_dir.empty()) {
    const auto res = cli::run_suite<F>(opt.suite_dir, opt.jobs, opt.regression);
    emit(res.report, opt.out_path);
    return res.all_passed ? 0 : 1;
  }
  // direct subcommand: inputs/caps document without the scenario wrapper
  json doc = json::object();
  if (!opt.direct_inputs.empty()) {
    std::ifstream in(opt.direct_inputs);
    if (!in) {
      std::cerr << "cannot open " << opt.direct_inputs << "\n";
      return 2;
    }
    doc = json::parse(in);
  }
  json scenario;
  scenario["name"] = opt.direct_command;
  scenario["command"] = opt.direct_command;
  scenario["inputs"] = doc.value("inputs", json::object());
  scenario["caps"] = doc.value("caps", json::object());
  const Report rep = cli::run_scenario<F>(
      scenario, opt.direct_inputs.empty() ? std::filesystem::current_path()
                                          : std::filesystem::path(opt.direct_inputs).parent_path());
  emit(rep.to_json(), opt.out_path);
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"window calculus for linearly topologized algebra"};
  app.require_subcommand(1);
  Options opt;

  auto* run = app.add_subcommand("run", "execute one scenario file");
  run->add_option("scenario", opt.run_path, "scenario JSON")->required();
  run->add_option("--out", opt.out_path, "write the report here instead of stdout");

  auto* suite = app.add_subcommand("suite", "execute every scenario in a directory");
  suite->add_option("dir", opt.suite_dir, "scenario directory")->required();
  suite->add_option("--jobs", opt.jobs, "parallel scenario executions")->default_val(1);
  suite->add_flag("--regression", opt.regression, "check expected-report fragments");
  suite->add_option("--out", opt.out_path, "write the summary here instead of stdout");

  const char* direct[] = {"exact-112",  "hom-blocks",    "jacobi-check", "admissibility", "free-cont",
                          "pbw-report", "vacuum-dims",   "extension-classify", "baer",    "envelope-dims",
                          "weak-pbw",   "ce-check",      "cartan",       "clifford-dims", "ks-check"};
  for (const char* name : direct) {
    auto* sub = app.add_subcommand(name, "run this check on an inputs/caps document");
    sub->add_option("inputs", opt.direct_inputs, "JSON with {inputs, caps}");
    sub->add_option("--out", opt.out_path, "write the report here instead of stdout");
    sub->callback([&opt, name]() { opt.direct_command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  const char* field = std::getenv("TOPOALG_FIELD");
  try {
    if (field && std::string(field).rfind("Fp:", 0) == 0) {
      topoalg::PrimeField::set_modulus(std::stoull(std::string(field).substr(3)));
      return dispatch<topoalg::PrimeField>(opt);
    }
    if (field && std::string(field) != "Q") {
      std::cerr << "TOPOALG_FIELD must be Q or Fp:<prime>\n";
      return 2;
    }
    return dispatch<topoalg::Rational>(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
