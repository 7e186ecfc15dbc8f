#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kpvc/bounds.hpp"
#include "kpvc/cover_common.hpp"
#include "kpvc/exact.hpp"
#include "kpvc/harness.hpp"
#include "kpvc/rational.hpp"

// JSON and CSV renderings. Rationals are always written as "p/q" strings (or
// numerator/denominator pairs), never as floating point.

namespace kpvc {

using Json = nlohmann::ordered_json;

inline Json to_json(const VertexSet& s) { return Json(std::vector<int>(s.begin(), s.end())); }

inline Json to_json(const CoverCertificate& c) {
  return Json{{"k", c.k},
              {"psi", c.size()},
              {"cover", to_json(c.cover)},
              {"optimal", c.optimal},
              {"residual_longest_path", c.residual_longest_path}};
}

inline Json to_json(const AlgorithmResult& r) {
  Json trace = Json::array();
  for (const auto& e : r.trace) {
    Json ev{{"kind", e.kind}, {"n", e.n}, {"m", e.m}};
    if (e.vertex >= 0) {
      ev["vertex"] = e.vertex;
      ev["degree"] = e.degree;
    }
    if (!e.note.empty()) ev["note"] = e.note;
    trace.push_back(std::move(ev));
  }
  return Json{{"algorithm", r.algorithm},
              {"k", r.k},
              {"size", r.size()},
              {"cover", to_json(r.cover)},
              {"guarantee_name", r.guarantee_name},
              {"guarantee_value", to_fraction_string(r.guarantee_value)},
              {"guarantee_certified", r.guarantee_certified},
              {"guarantee_met", r.guarantee_met()},
              {"trace", std::move(trace)}};
}

// One catalog row: name, kind, numerator, denominator, applicable, reason.
inline Json to_json(const BoundRecord& r) {
  Json row{{"name", r.name}, {"kind", to_string(r.kind)}};
  if (r.applicable) {
    row["numerator"] = numerator_of(*r.value).str();
    row["denominator"] = denominator_of(*r.value).str();
  } else {
    row["numerator"] = nullptr;
    row["denominator"] = nullptr;
  }
  row["applicable"] = r.applicable;
  row["reason"] = r.reason;
  if (r.certified_algorithm) row["certified_algorithm"] = *r.certified_algorithm;
  if (r.strict) row["strict"] = true;
  return row;
}

inline Json to_json(const std::vector<BoundRecord>& records) {
  Json out = Json::array();
  for (const auto& r : records) out.push_back(to_json(r));
  return out;
}

inline Json to_json(const FeasiblePair& p) {
  Json steps = Json::array();
  for (const auto& s : p.provenance) {
    Json step{{"parent", {to_fraction_string(s.parent_a), to_fraction_string(s.parent_b)}}, {"x", s.x}};
    if (s.general) {
      step["q"] = to_fraction_string(s.q);
      step["w"] = to_fraction_string(s.w);
    } else {
      step["y"] = to_fraction_string(s.y);
    }
    steps.push_back(std::move(step));
  }
  return Json{{"k", p.k}, {"a", to_fraction_string(p.a)}, {"b", to_fraction_string(p.b)}, {"provenance", std::move(steps)}};
}

inline Json to_json(const VerifyReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json bounds = Json::array();
    for (const auto& b : r.bounds)
      bounds.push_back({{"name", b.name},
                        {"kind", to_string(b.kind)},
                        {"value", to_fraction_string(b.value)},
                        {"status", b.pass ? "pass" : "fail"},
                        {"tight", b.tight}});
    Json algos = Json::array();
    for (const auto& a : r.algorithms) {
      Json row{{"algorithm", a.algorithm},
               {"size", a.size},
               {"guarantee", to_fraction_string(a.guarantee)},
               {"certified", a.certified},
               {"valid", a.valid},
               {"guarantee_met", a.guarantee_met}};
      if (!a.error.empty()) row["error"] = a.error;
      algos.push_back(std::move(row));
    }
    rows.push_back({{"graph", r.graph_id},
                    {"n", r.n},
                    {"m", r.m},
                    {"k", r.k},
                    {"psi", r.psi},
                    {"bounds", std::move(bounds)},
                    {"algorithms", std::move(algos)}});
  }
  Json violations = Json::array();
  for (const auto& v : rep.violations)
    violations.push_back({{"graph", v.graph_id}, {"k", v.k}, {"check", v.check}, {"detail", v.detail}});
  Json tight = Json::array();
  for (const auto& t : rep.tightness) tight.push_back({{"graph", t.graph_id}, {"k", t.k}, {"bound", t.bound}});
  Json counts = Json::object();
  for (const auto& [name, c] : rep.tight_counts) counts[name] = c;
  return Json{{"totals",
               {{"graphs", rep.totals.graphs},
                {"instances", rep.totals.instances},
                {"bound_checks", rep.totals.bound_checks},
                {"algorithm_runs", rep.totals.algorithm_runs},
                {"residual_checks", rep.totals.residual_checks},
                {"uncertified_misses", rep.totals.uncertified_misses},
                {"violations", rep.violations.size()}}},
              {"tight_counts", std::move(counts)},
              {"violations", std::move(violations)},
              {"tightness", std::move(tight)},
              {"rows", std::move(rows)}};
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Flat rows: graph,n,m,k,psi,item_type,item,value,status.
inline std::string to_csv(const VerifyReport& rep) {
  std::string out = "graph,n,m,k,psi,item_type,item,value,status\n";
  for (const auto& r : rep.rows) {
    const std::string head = detail::csv_field(r.graph_id) + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
                             std::to_string(r.k) + "," + std::to_string(r.psi) + ",";
    for (const auto& b : r.bounds)
      out += head + to_string(b.kind) + "," + b.name + "," + to_fraction_string(b.value) + "," +
             (b.pass ? (b.tight ? "tight" : "pass") : "fail") + "\n";
    for (const auto& a : r.algorithms) {
      std::string status = !a.valid ? "invalid" : a.guarantee_met ? "met" : a.certified ? "fail" : "missed";
      out += head + "algorithm," + a.algorithm + "," + std::to_string(a.size) + "/" + to_fraction_string(a.guarantee) + "," +
             status + "\n";
    }
  }
  return out;
}

inline std::string to_csv(const std::vector<BoundRecord>& records) {
  std::string out = "name,kind,numerator,denominator,applicable,reason\n";
  for (const auto& r : records) {
    out += r.name + "," + to_string(r.kind) + ",";
    out += r.applicable ? numerator_of(*r.value).str() + "," + denominator_of(*r.value).str() : std::string(",");
    out += std::string(",") + (r.applicable ? "true" : "false") + "," + detail::csv_field(r.reason) + "\n";
  }
  return out;
}

}  // namespace kpvc
