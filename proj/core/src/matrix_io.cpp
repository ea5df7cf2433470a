// Copyright 2026 The photonic-bsa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bsa/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "bsa/errors.hpp"
#include "json.hpp"

namespace bsa {

std::string matrix_to_json(const CircuitMatrix& u) {
  if (u.rows() != u.cols()) throw ContractViolation("matrix_to_json: matrix is not square");
  // one entry per line keeps files diff-able
  std::string out = "{\"m\": " + std::to_string(u.rows()) + ", \"entries\": [\n";
  for (int r = 0; r < u.rows(); ++r) {
    for (int c = 0; c < u.cols(); ++c) {
      out += "  " + nlohmann::json::array({u(r, c).real(), u(r, c).imag()}).dump();
      out += (r == u.rows() - 1 && c == u.cols() - 1) ? "\n" : ",\n";
    }
  }
  out += "]}\n";
  return out;
}

CircuitMatrix matrix_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("matrix file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("m") || !doc["m"].is_number_integer()) {
    throw ParseError("matrix file: missing integer field \"m\"");
  }
  const long long m = doc["m"].get<long long>();
  if (m < 1 || m > 64) throw ParseError("matrix file: \"m\" must be in [1, 64]");
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw ParseError("matrix file: missing array field \"entries\"");
  }
  const auto& entries = doc["entries"];
  if (entries.size() != static_cast<std::size_t>(m * m)) {
    throw ParseError("matrix file: expected " + std::to_string(m * m) + " entries, found " +
                     std::to_string(entries.size()));
  }
  CircuitMatrix u(m, m);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ParseError("matrix file: entry " + std::to_string(i) + " is not a [re, im] pair");
    }
    u(static_cast<Eigen::Index>(i) / m, static_cast<Eigen::Index>(i) % m) =
        Complex{e[0].get<double>(), e[1].get<double>()};
  }
  return u;
}

void write_matrix_file(const std::filesystem::path& path, const CircuitMatrix& u) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << matrix_to_json(u);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

CircuitMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return matrix_from_json(buf.str());
}

}  // namespace bsa
