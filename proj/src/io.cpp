// Copyright 2026 The hwsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hwsim/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hwsim/errors.hpp"
#include "json.hpp"

namespace hwsim {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": invalid JSON at byte " + std::to_string(e.byte));
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

int as_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where + ": expected an integer");
  return value.get<int>();
}

double as_double(const json& value, const std::string& where) {
  if (!value.is_number()) throw ParseError(where + ": expected a number");
  return value.get<double>();
}

std::vector<Edge> parse_edge_list(const json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError(where + ": expected an array of [i, j] pairs");
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < value.size(); ++e) {
    const std::string at = where + "[" + std::to_string(e) + "]";
    const json& pair = value[e];
    if (!pair.is_array() || pair.size() != 2) throw ParseError(at + ": expected [i, j]");
    edges.emplace_back(as_int(pair[0], at + "[0]"), as_int(pair[1], at + "[1]"));
  }
  return edges;
}

json edges_to_json(std::span<const Edge> edges) {
  json out = json::array();
  for (const auto& [i, j] : edges) out.push_back({i, j});
  return out;
}

}  // namespace

Circuit parse_circuit_json(std::string_view text) {
  const json doc = parse_json(text, "circuit");
  if (!doc.is_object()) throw ParseError("circuit: top level must be an object");
  if (const auto it = doc.find("schema"); it != doc.end()) {
    if (!it->is_string() || it->get<std::string>() != kSchema) {
      throw ParseError("circuit.schema: expected \"" + std::string(kSchema) + "\"");
    }
  }
  const int n = as_int(require(doc, "n", "circuit"), "circuit.n");
  const json& gates_json = require(doc, "gates", "circuit");
  if (!gates_json.is_array()) throw ParseError("circuit.gates: expected an array");

  std::vector<Gate> gates;
  gates.reserve(gates_json.size());
  for (std::size_t g = 0; g < gates_json.size(); ++g) {
    const std::string at = "circuit.gates[" + std::to_string(g) + "]";
    const json& item = gates_json[g];
    if (!item.is_object()) throw ParseError(at + ": expected an object");
    const json& kind = require(item, "kind", at);
    if (!kind.is_string()) throw ParseError(at + ".kind: expected \"rbs\" or \"fbs\"");
    Gate gate;
    try {
      gate.kind = parse_gate_kind(kind.get<std::string>());
    } catch (const DomainError&) {
      throw ParseError(at + ".kind: expected \"rbs\" or \"fbs\"");
    }
    gate.i = as_int(require(item, "i", at), at + ".i");
    gate.j = as_int(require(item, "j", at), at + ".j");
    gate.theta = item.contains("theta") ? as_double(item["theta"], at + ".theta") : 0.0;
    gates.push_back(gate);
  }

  std::optional<std::vector<Edge>> connectivity;
  if (const auto it = doc.find("connectivity"); it != doc.end() && !it->is_null()) {
    connectivity = parse_edge_list(*it, "circuit.connectivity");
  }
  try {
    return Circuit(n, std::move(gates), std::move(connectivity));
  } catch (const DomainError& e) {
    throw ParseError(std::string("circuit: ") + e.what());
  }
}

Circuit read_circuit_file(const std::string& path) { return parse_circuit_json(read_text_file(path)); }

std::string circuit_to_json(const Circuit& circuit, int indent) {
  json doc;
  doc["schema"] = kSchema;
  doc["n"] = circuit.n();
  json gates = json::array();
  for (const Gate& g : circuit.gates()) {
    gates.push_back({{"kind", to_string(g.kind)}, {"i", g.i}, {"j", g.j}, {"theta", g.theta}});
  }
  doc["gates"] = std::move(gates);
  if (circuit.connectivity()) doc["connectivity"] = edges_to_json(*circuit.connectivity());
  return doc.dump(indent);
}

Graph parse_graph_json(std::string_view text) {
  const json doc = parse_json(text, "graph");
  Graph graph;
  if (doc.is_array()) {
    graph.edges = parse_edge_list(doc, "graph");
    for (const auto& [i, j] : graph.edges) graph.n = std::max({graph.n, i + 1, j + 1});
  } else if (doc.is_object()) {
    graph.n = as_int(require(doc, "n", "graph"), "graph.n");
    graph.edges = parse_edge_list(require(doc, "edges", "graph"), "graph.edges");
  } else {
    throw ParseError("graph: expected an object or an edge array");
  }
  if (graph.edges.empty()) throw ParseError("graph.edges: empty edge list");
  try {
    validate_edges(graph.n, graph.edges);
  } catch (const DomainError& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
  return graph;
}

Graph read_graph_file(const std::string& path) { return parse_graph_json(read_text_file(path)); }

std::vector<Eigen::VectorXd> parse_vectors_csv(std::string_view text) {
  std::vector<Eigen::VectorXd> rows;
  std::size_t line_no = 0;
  std::size_t width = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;

    std::vector<double> values;
    std::size_t field = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = std::min(line.find(',', start), line.size());
      std::string_view cell = line.substr(start, comma - start);
      while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
      while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t')) cell.remove_suffix(1);
      ++field;
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw ParseError("csv line " + std::to_string(line_no) + ", field " + std::to_string(field) +
                         ": not a number");
      }
      values.push_back(v);
      if (comma == line.size()) break;
      start = comma + 1;
    }
    if (rows.empty()) {
      width = values.size();
    } else if (values.size() != width) {
      throw ParseError("csv line " + std::to_string(line_no) + ": expected " + std::to_string(width) +
                       " fields, got " + std::to_string(values.size()));
    }
    rows.emplace_back(Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size())));
    if (end == text.size()) break;
  }
  return rows;
}

std::vector<Eigen::VectorXd> read_vectors_file(const std::string& path) {
  return parse_vectors_csv(read_text_file(path));
}

void write_state_csv(std::ostream& out, const SubspaceState& state) {
  const BasisIndexer& indexer = state.indexer();
  out << "# schema=" << kSchema << '\n';
  out << "bitstring,amplitude\n";
  for (std::size_t r = 0; r < indexer.dim(); ++r) {
    out << indexer.to_string(indexer.unrank(r)) << ',' << format_double(state.amplitudes()(static_cast<Eigen::Index>(r)))
        << '\n';
  }
  char norm[32];
  std::snprintf(norm, sizeof norm, "%.12f", state.norm());
  out << "# norm=" << norm << '\n';
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ResourceError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ResourceError("write failed for '" + path + "'");
}

std::string format_double(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

}  // namespace hwsim
