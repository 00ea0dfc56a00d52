#include "naimark/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "naimark/error.hpp"

namespace naimark {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

Json nested(const ComplexMatrix& m, bool imag) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(imag ? m(r, c).imag() : m(r, c).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<double>> nested_from(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) parse_fail(std::string("missing array '") + key + "'");
  std::vector<std::vector<double>> out;
  for (const auto& row : j.at(key)) {
    if (!row.is_array()) parse_fail(std::string("'") + key + "' must be a nested array");
    std::vector<double> values;
    for (const auto& x : row) {
      if (!x.is_number()) parse_fail(std::string("non-numeric entry in '") + key + "'");
      values.push_back(x.get<double>());
    }
    out.push_back(std::move(values));
  }
  return out;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m, int d) {
  return Json{{"d", d},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"re", nested(m, false)},
              {"im", nested(m, true)}};
}

ComplexMatrix matrix_from_json(const Json& j) try {
  if (!j.is_object()) parse_fail("matrix must be a JSON object");
  for (const char* key : {"rows", "cols"}) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
      parse_fail(std::string("missing integer '") + key + "'");
    }
  }
  const auto rows = j.at("rows").get<long>();
  const auto cols = j.at("cols").get<long>();
  if (rows < 0 || cols < 0) parse_fail("negative matrix shape");
  const auto re = nested_from(j, "re");
  const auto im = nested_from(j, "im");
  if (static_cast<long>(re.size()) != rows || static_cast<long>(im.size()) != rows) {
    parse_fail("row count does not match 'rows'");
  }
  ComplexMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    if (static_cast<long>(re[r].size()) != cols || static_cast<long>(im[r].size()) != cols) {
      parse_fail("row " + std::to_string(r) + " length does not match 'cols'");
    }
    for (long c = 0; c < cols; ++c) m(r, c) = Complex(re[r][c], im[r][c]);
  }
  return m;
} catch (const Json::exception& e) {
  parse_fail(std::string("matrix: ") + e.what());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_fail(path.string() + ": " + e.what());
  }
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m, int d) {
  write_json_file(path, matrix_to_json(m, d));
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  return matrix_from_json(read_json_file(path));
}

Ket ket_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("re") || !j.at("re").is_array()) parse_fail("ket object needs 're'");
    const Json& re = j.at("re");
    const Json im = j.contains("im") ? j.at("im") : Json::array();
    if (!im.empty() && im.size() != re.size()) parse_fail("ket 're'/'im' length mismatch");
    Ket v(static_cast<Eigen::Index>(re.size()));
    for (std::size_t a = 0; a < re.size(); ++a) {
      if (!re[a].is_number() || (!im.empty() && !im[a].is_number())) parse_fail("non-numeric ket entry");
      v(static_cast<Eigen::Index>(a)) = Complex(re[a].get<double>(), im.empty() ? 0.0 : im[a].get<double>());
    }
    return v;
  }
  if (!j.is_array() || j.empty()) parse_fail("ket must be a non-empty array or {re, im} object");
  Ket v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t a = 0; a < j.size(); ++a) {
    const Json& x = j[a];
    if (x.is_number()) {
      v(static_cast<Eigen::Index>(a)) = x.get<double>();
    } else if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number()) {
      v(static_cast<Eigen::Index>(a)) = Complex(x[0].get<double>(), x[1].get<double>());
    } else {
      parse_fail("ket entries must be numbers or [re, im] pairs");
    }
  }
  return v;
}

Json ket_to_json(const Ket& v) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index a = 0; a < v.size(); ++a) {
    re.push_back(v(a).real());
    im.push_back(v(a).imag());
  }
  return Json{{"re", re}, {"im", im}};
}

Json circuit_to_json(const GateList& circuit) {
  Json gates = Json::array();
  for (const Gate& g : circuit.gates) {
    Json entry{{"kind", std::string(to_string(g.kind))}, {"wires", g.wires}};
    if (g.kind == GateKind::R || g.kind == GateKind::CR) {
      entry["k"] = g.k;
      if (g.dagger) entry["dagger"] = true;
    }
    if (g.kind == GateKind::Unitary) {
      entry["re"] = nested(g.matrix, false);
      entry["im"] = nested(g.matrix, true);
    }
    gates.push_back(std::move(entry));
  }
  return Json{{"n_qubits", circuit.n_qubits}, {"gates", gates}};
}

GateList circuit_from_json(const Json& j) try {
  if (!j.is_object() || !j.contains("n_qubits") || !j.contains("gates") ||
      !j.at("n_qubits").is_number_integer() || !j.at("gates").is_array()) {
    parse_fail("circuit needs integer 'n_qubits' and array 'gates'");
  }
  GateList out{j.at("n_qubits").get<int>(), {}};
  for (const auto& entry : j.at("gates")) {
    if (!entry.is_object() || !entry.contains("kind") || !entry.contains("wires")) {
      parse_fail("gate needs 'kind' and 'wires'");
    }
    Gate g{gate_kind_from_string(entry.at("kind").get<std::string>()), 0, {}, false, {}};
    g.wires = entry.at("wires").get<std::vector<int>>();
    if (entry.contains("k")) g.k = entry.at("k").get<int>();
    if (entry.contains("dagger")) g.dagger = entry.at("dagger").get<bool>();
    if (g.kind == GateKind::Unitary) {
      const auto re = nested_from(entry, "re");
      const auto im = nested_from(entry, "im");
      const auto n = static_cast<Eigen::Index>(re.size());
      g.matrix.resize(n, n);
      for (Eigen::Index r = 0; r < n; ++r) {
        if (static_cast<Eigen::Index>(re[r].size()) != n || im.size() != re.size() ||
            static_cast<Eigen::Index>(im[r].size()) != n) {
          parse_fail("opaque gate matrix must be square");
        }
        for (Eigen::Index c = 0; c < n; ++c) g.matrix(r, c) = Complex(re[r][c], im[r][c]);
      }
    }
    out.gates.push_back(std::move(g));
  }
  validate(out);
  return out;
} catch (const Json::exception& e) {
  parse_fail(std::string("circuit: ") + e.what());
}

Json distribution_to_json(const OutcomeDistribution& dist) {
  Json rows = Json::array();
  for (int j = 0; j < dist.dim; ++j) {
    Json row = Json::array();
    for (int k = 0; k < dist.dim; ++k) row.push_back(dist.at(j, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json counts_to_json(const OutcomeCounts& counts) {
  Json rows = Json::array();
  for (int j = 0; j < counts.dim; ++j) {
    Json row = Json::array();
    for (int k = 0; k < counts.dim; ++k) row.push_back(counts.at(j, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace naimark
