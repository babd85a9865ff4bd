// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_JSON_IO_HPP
#define TOPOALG_JSON_IO_HPP

#include <string>

#include "topoalg/algebroid.hpp"
#include "topoalg/report.hpp"
#include "topoalg/tatehom.hpp"

namespace topoalg {

/// Schema loaders ("<name>/v1").  Violations throw std::invalid_argument
/// with a JSON-pointer-style path.
namespace schema {

inline void fail(const std::string& pointer, const std::string& why) {
  throw std::invalid_argument(pointer + ": " + why);
}

inline void expect_schema(const json& j, const std::string& name, const std::string& ptr) {
  if (j.contains("catalog")) return;  // catalog shorthand carries no schema tag
  if (!j.contains("schema") || j.at("schema") != name) fail(ptr + "/schema", "expected " + name);
}

template <FieldScalar F>
F parse_scalar(const json& j, const std::string& ptr) {
  if (j.is_number_integer()) return F(j.get<long>());
  if (j.is_string()) {
    const Rational q = Rational::parse(j.get<std::string>());
    // evaluate the fraction inside F
    F num(0), den(0);
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return F(std::stol(s));
    num = F(std::stol(s.substr(0, slash)));
    den = F(std::stol(s.substr(slash + 1)));
    (void)q;  // validated the literal
    return num / den;
  }
  fail(ptr, "expected an integer or a rational literal");
  return F(0);
}

/// "flagged-space/v1" or a catalog shorthand
/// {"catalog": "laurent" | "power-series" | "polynomials" | "finite-discrete", "dim": n}.
inline FlaggedSpace flagged_space(const json& j, const std::string& ptr = "") {
  if (j.contains("catalog")) {
    const std::string c = j.at("catalog").get<std::string>();
    if (c == "laurent") return FlaggedSpace::laurent();
    if (c == "power-series") return FlaggedSpace::power_series();
    if (c == "polynomials") return FlaggedSpace::polynomials();
    if (c == "finite-discrete") {
      if (!j.contains("dim")) fail(ptr + "/dim", "finite-discrete needs a dimension");
      return FlaggedSpace::finite_discrete(j.at("dim").get<int>(), "V");
    }
    fail(ptr + "/catalog", "unknown space " + c);
  }
  expect_schema(j, "flagged-space/v1", ptr);
  FlaggedSpace::Spec s;
  s.label = j.value("label", "V");
  if (j.contains("graded_dim"))
    for (const auto& pair : j.at("graded_dim")) {
      if (!pair.is_array() || pair.size() != 2) fail(ptr + "/graded_dim", "entries are [index, dim] pairs");
      s.dims[pair[0].get<int>()] = pair[1].get<int>();
    }
  s.fill = j.value("fill", 0);
  if (j.contains("compact_below")) s.compact_below = j.at("compact_below").get<int>();
  if (j.contains("discrete_above")) s.discrete_above = j.at("discrete_above").get<int>();
  if (j.contains("slot_labels"))
    for (const auto& [k, v] : j.at("slot_labels").items()) s.slot_labels[std::stoi(k)] = v.get<std::vector<std::string>>();
  s.symbol = j.value("symbol", "");
  try {
    return FlaggedSpace::make(std::move(s));
  } catch (const std::invalid_argument& e) {
    fail(ptr, e.what());
  }
  return FlaggedSpace();
}

/// "lie-pres/v1": catalog "sl2-loop" | "abelian-laurent" | "witt-positive",
/// or an explicit table {carrier, brackets: [[ai,ak,bi,bk,[[ci,ck,coeff]..]]..],
/// sigma_shift, subalgebra_from}.
template <FieldScalar F>
TateLieAlgebra<F> lie_pres(const json& j, const std::string& ptr = "") {
  if (j.contains("catalog")) {
    const std::string c = j.at("catalog").get<std::string>();
    if (c == "sl2-loop") return TateLieAlgebra<F>::sl2_loop();
    if (c == "abelian-laurent") return TateLieAlgebra<F>::abelian_laurent();
    if (c == "witt-positive") return TateLieAlgebra<F>::witt_positive();
    fail(ptr + "/catalog", "unknown Lie presentation " + c);
  }
  expect_schema(j, "lie-pres/v1", ptr);
  FlaggedSpace carrier = flagged_space(j.at("carrier"), ptr + "/carrier");
  std::map<std::pair<GenId, GenId>, std::vector<LieTerm<F>>> table;
  for (const auto& row : j.at("brackets")) {
    GenId a{row[0].get<int>(), row[1].get<int>()}, b{row[2].get<int>(), row[3].get<int>()};
    std::vector<LieTerm<F>> terms;
    for (const auto& t : row[4]) terms.push_back({{t[0].get<int>(), t[1].get<int>()}, parse_scalar<F>(t[2], ptr)});
    table[{a, b}] = terms;
    std::vector<LieTerm<F>> neg;
    for (auto t : terms) {
      t.coeff = -t.coeff;
      neg.push_back(t);
    }
    table[{b, a}] = neg;
  }
  const int shift = j.value("sigma_shift", 0);
  auto bracket = [table](GenId a, GenId b) {
    auto it = table.find({a, b});
    return it == table.end() ? std::vector<LieTerm<F>>{} : it->second;
  };
  return TateLieAlgebra<F>::make(std::move(carrier), bracket, [shift](int a, int b) { return a + b + shift; },
                                 j.value("subalgebra_from", 0));
}

/// "algebra-pres/v1": catalog "power-series" | "laurent", or a finite table
/// {dim, products: [[i, j, k, coeff]...]}.
template <FieldScalar F>
TopAlgebraPres<F> algebra_pres(const json& j, const std::string& ptr = "") {
  if (j.contains("catalog")) {
    const std::string c = j.at("catalog").get<std::string>();
    if (c == "power-series") return TopAlgebraPres<F>::power_series_algebra();
    if (c == "laurent") return TopAlgebraPres<F>::laurent_algebra();
    fail(ptr + "/catalog", "unknown algebra " + c);
  }
  expect_schema(j, "algebra-pres/v1", ptr);
  const int dim = j.at("dim").get<int>();
  AssocTable<F> t = AssocTable<F>::zero(dim);
  for (const auto& row : j.at("products"))
    t.at(row[0].get<int>(), row[1].get<int>(), row[2].get<int>()) = parse_scalar<F>(row[3], ptr + "/products");
  return TopAlgebraPres<F>::finite_algebra(t, j.value("label", "A"));
}

template <FieldScalar F>
AssocTable<F> assoc_table(const json& j, const std::string& ptr = "") {
  expect_schema(j, "algebra-pres/v1", ptr);
  const int dim = j.at("dim").get<int>();
  AssocTable<F> t = AssocTable<F>::zero(dim);
  for (const auto& row : j.at("products"))
    t.at(row[0].get<int>(), row[1].get<int>(), row[2].get<int>()) = parse_scalar<F>(row[3], ptr + "/products");
  return t;
}

/// "algebroid-pres/v1": catalog entries with their size parameters.
template <FieldScalar F>
AlgebroidPres<F> algebroid_pres(const json& j, const std::string& ptr = "") {
  if (!j.contains("catalog")) fail(ptr, "algebroid presentations are catalog entries");
  const std::string c = j.at("catalog").get<std::string>();
  if (c == "tangent-power-series") return AlgebroidPres<F>::tangent_power_series(j.value("q", 4));
  if (c == "tangent-power-series-positive") return AlgebroidPres<F>::tangent_power_series_positive(j.value("q", 4));
  if (c == "tangent-polynomials") return AlgebroidPres<F>::tangent_polynomials(j.value("cap", 4));
  if (c == "sl2") return AlgebroidPres<F>::sl2_over_k();
  if (c == "nonabelian2") return AlgebroidPres<F>::nonabelian2();
  if (c == "abelian") return AlgebroidPres<F>::abelian_over_k(j.value("rank", 2));
  fail(ptr + "/catalog", "unknown algebroid " + c);
  return AlgebroidPres<F>();
}

/// "extension-datum/v1": {base, cocycle: [[a, b, [coeffs...]]...], lambda,
/// opens: "product" | "rigidified"}.
template <FieldScalar F>
ExtensionDatum<F> extension_datum(const json& j, const std::string& ptr = "") {
  expect_schema(j, "extension-datum/v1", ptr);
  AlgebroidPres<F> base = algebroid_pres<F>(j.at("base"), ptr + "/base");
  const int q = base.ring_dim();
  std::map<std::pair<int, int>, std::vector<F>> coc;
  if (j.contains("cocycle"))
    for (const auto& row : j.at("cocycle")) {
      std::vector<F> v;
      for (const auto& x : row[2]) v.push_back(parse_scalar<F>(x, ptr + "/cocycle"));
      if (static_cast<int>(v.size()) != q) fail(ptr + "/cocycle", "coefficient length must match the ring window");
      coc[{row[0].get<int>(), row[1].get<int>()}] = v;
      std::vector<F> neg = v;
      for (auto& x : neg) x = -x;
      coc[{row[1].get<int>(), row[0].get<int>()}] = neg;
    }
  auto cfn = [coc, q](int a, int b) {
    auto it = coc.find({a, b});
    return it == coc.end() ? std::vector<F>(q, F(0)) : it->second;
  };
  F lambda = j.contains("lambda") ? parse_scalar<F>(j.at("lambda"), ptr + "/lambda") : F(0);
  auto e = ExtensionDatum<F>::split(std::move(base), cfn, lambda, j.value("name", "E"));
  if (j.value("opens", "product") == std::string("rigidified")) e.opens_kind = ExtensionDatum<F>::OpensKind::Rigidified;
  return e;
}

}  // namespace schema

}  // namespace topoalg

#endif  // TOPOALG_JSON_IO_HPP
