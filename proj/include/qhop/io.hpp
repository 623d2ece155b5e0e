#pragma once

#include <json.hpp>

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhop/counting.hpp"
#include "qhop/evolve.hpp"
#include "qhop/oracle.hpp"
#include "qhop/scaling.hpp"

namespace qhop {

using Json = nlohmann::ordered_json;

/// Parses the oracle file format: {"n_bits": N, "truth_table": [0,1,...]} or
/// {"n_bits": N, "solutions": ["101", ...]} with exactly one of the two
/// fields. Solution strings are N-bit binary, most significant bit first.
inline OracleTable parse_oracle(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n_bits") ||
      !doc["n_bits"].is_number_unsigned()) {
    throw std::invalid_argument("oracle: need an object with unsigned n_bits");
  }
  const std::size_t n_bits = doc["n_bits"].get<std::size_t>();
  const bool has_table = doc.contains("truth_table");
  const bool has_solutions = doc.contains("solutions");
  if (has_table == has_solutions) {
    throw std::invalid_argument(
        "oracle: exactly one of truth_table or solutions is required");
  }

  if (has_table) {
    if (!doc["truth_table"].is_array()) {
      throw std::invalid_argument("oracle: truth_table must be an array");
    }
    std::vector<std::uint8_t> table;
    table.reserve(doc["truth_table"].size());
    for (const Json& v : doc["truth_table"]) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() > 1) {
        throw std::invalid_argument("oracle: truth_table entries must be 0 or 1");
      }
      table.push_back(static_cast<std::uint8_t>(v.get<std::size_t>()));
    }
    return OracleTable(n_bits, std::move(table));
  }

  if (!doc["solutions"].is_array()) {
    throw std::invalid_argument("oracle: solutions must be an array");
  }
  std::vector<std::size_t> solutions;
  for (const Json& v : doc["solutions"]) {
    if (!v.is_string()) {
      throw std::invalid_argument("oracle: solutions entries must be strings");
    }
    const std::string s = v.get<std::string>();
    if (s.size() != n_bits) {
      throw std::invalid_argument("oracle: solution '" + s + "' is not " +
                                  std::to_string(n_bits) + " bits long");
    }
    std::size_t x = 0;
    for (char ch : s) {
      if (ch != '0' && ch != '1') {
        throw std::invalid_argument("oracle: solution '" + s +
                                    "' has characters outside {0,1}");
      }
      x = (x << 1) | static_cast<std::size_t>(ch - '0');
    }
    solutions.push_back(x);
  }
  return OracleTable::from_solutions(n_bits, solutions);
}

inline OracleTable load_oracle(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open oracle file: " + path);
  }
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw std::invalid_argument("oracle file " + path + ": " + e.what());
  }
  return parse_oracle(doc);
}

inline Json count_result_to_json(const CountResult& result) {
  Json j;
  j["n"] = result.n_estimated;
  j["iterations"] = result.iterations;
  j["final_theta"] = result.final_theta;
  j["decision"] = to_string(result.decision);
  return j;
}

inline constexpr const char* kGateCostCsvHeader =
    "d,l,axis,string_length,compiled_weight";

/// Renders the benchmark report: the pinned header, one row per (d, l, axis)
/// sorted by those keys, then one comment line per (d, l) with the worst
/// string check and the cost-per-sweep ratio (compiled weight over term
/// count) against the native machine's flat 1 per term.
inline std::string report_to_csv(const GateCostReport& report) {
  std::ostringstream out;
  out << kGateCostCsvHeader << "\n";
  auto rows = report.rows;
  std::sort(rows.begin(), rows.end(), [](const GateCostRow& a, const GateCostRow& b) {
    if (a.d != b.d) return a.d < b.d;
    if (a.l != b.l) return a.l < b.l;
    return a.axis < b.axis;
  });
  for (const GateCostRow& row : rows) {
    out << row.d << ',' << row.l << ',' << row.axis << ',' << row.string_length
        << ',' << row.compiled_weight << "\n";
  }
  for (const GateCostSummary& s : report.summaries) {
    out << "# summary d=" << s.d << " l=" << s.l
        << " worst_string_plus_1=" << (s.worst_string_length + 1)
        << " l_pow_d_minus_1=" << (s.expected_worst + 1)
        << " terms=" << s.term_count << " check=" << (s.ok ? "ok" : "FAIL")
        << "\n";
  }
  return out.str();
}

/// Fermionic instance description consumed by the evolve/xcheck commands:
/// geometry, terms, initial occupation and evolution parameters.
struct FermiInstance {
  HoppingHamiltonian hamiltonian;
  std::size_t initial_word = 0;
  EvolutionSpec spec;
};

inline FockOperatorTerm parse_term(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw std::invalid_argument("term: need an object with a kind");
  }
  const std::string kind = j["kind"].get<std::string>();
  FockOperatorTerm term;
  if (kind == "hop") {
    term.kind = TermKind::kHop;
  } else if (kind == "conditional_hop") {
    term.kind = TermKind::kConditionalHop;
  } else if (kind == "number") {
    term.kind = TermKind::kNumber;
  } else {
    throw std::invalid_argument("term: unknown kind '" + kind + "'");
  }
  term.site_i = j.at("i").get<std::size_t>();
  if (term.is_hop()) term.site_j = j.at("j").get<std::size_t>();
  if (j.contains("controls")) {
    term.controls = j["controls"].get<std::vector<std::size_t>>();
  }
  if (j.contains("coefficient")) {
    term.coefficient = j["coefficient"].get<double>();
  }
  return term;
}

inline Json term_to_json(const FockOperatorTerm& term) {
  Json j;
  switch (term.kind) {
    case TermKind::kHop: j["kind"] = "hop"; break;
    case TermKind::kConditionalHop: j["kind"] = "conditional_hop"; break;
    case TermKind::kNumber: j["kind"] = "number"; break;
  }
  j["i"] = term.site_i;
  if (term.is_hop()) j["j"] = term.site_j;
  if (!term.controls.empty()) j["controls"] = term.controls;
  j["coefficient"] = term.coefficient;
  return j;
}

inline LatticeGeometry parse_geometry(const Json& doc) {
  const std::string shape =
      doc.contains("shape") ? doc["shape"].get<std::string>() : "hypercubic";
  const std::size_t d = doc.at("d").get<std::size_t>();
  if (shape == "hypercubic") {
    return LatticeGeometry::hypercubic(d, doc.at("l").get<std::size_t>());
  }
  if (shape == "hypercube") {
    return LatticeGeometry::hypercube_graph(d);
  }
  throw std::invalid_argument("geometry: unknown shape '" + shape + "'");
}

inline FermiInstance parse_fermi_instance(const Json& doc) {
  FermiInstance inst;
  inst.hamiltonian.geometry = parse_geometry(doc);
  if (!doc.contains("terms") || !doc["terms"].is_array() || doc["terms"].empty()) {
    throw std::invalid_argument("instance: need a nonempty terms array");
  }
  for (const Json& t : doc["terms"]) {
    inst.hamiltonian.terms.push_back(parse_term(t));
  }

  const std::size_t sites = inst.hamiltonian.geometry.site_count();
  if (doc.contains("initial")) {
    const Json& init = doc["initial"];
    if (init.contains("basis_index")) {
      inst.initial_word = init["basis_index"].get<std::size_t>();
    } else if (init.contains("occupied")) {
      for (std::size_t s : init["occupied"].get<std::vector<std::size_t>>()) {
        if (s >= sites) {
          throw std::invalid_argument("instance: occupied site out of range");
        }
        inst.initial_word |= std::size_t{1} << s;
      }
    } else {
      throw std::invalid_argument("instance: initial needs basis_index or occupied");
    }
  }
  if (inst.initial_word >= (std::size_t{1} << sites)) {
    throw std::invalid_argument("instance: initial basis index out of range");
  }

  if (doc.contains("t")) inst.spec.t = doc["t"].get<double>();
  if (doc.contains("steps")) inst.spec.steps = doc["steps"].get<std::size_t>();
  if (doc.contains("backend")) {
    const std::string backend = doc["backend"].get<std::string>();
    if (backend == "native") {
      inst.spec.backend = Backend::kNative;
    } else if (backend == "jw") {
      inst.spec.backend = Backend::kJordanWigner;
    } else {
      throw std::invalid_argument("instance: unknown backend '" + backend + "'");
    }
  }
  return inst;
}

inline FermiInstance load_fermi_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw std::invalid_argument("config file " + path + ": " + e.what());
  }
  return parse_fermi_instance(doc);
}

inline Json instance_to_json(const FermiInstance& inst) {
  Json j;
  j["shape"] = inst.hamiltonian.geometry.shape == LatticeShape::kHypercubic
                   ? "hypercubic"
                   : "hypercube";
  j["d"] = inst.hamiltonian.geometry.dim;
  j["l"] = inst.hamiltonian.geometry.side;
  Json terms = Json::array();
  for (const FockOperatorTerm& t : inst.hamiltonian.terms) {
    terms.push_back(term_to_json(t));
  }
  j["terms"] = std::move(terms);
  j["initial"] = Json{{"basis_index", inst.initial_word}};
  j["t"] = inst.spec.t;
  j["steps"] = inst.spec.steps;
  j["backend"] = inst.spec.backend == Backend::kNative ? "native" : "jw";
  return j;
}

}  // namespace qhop
