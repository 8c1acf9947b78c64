#include "skolem/graph_doc.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "skolem/error.hpp"

namespace skolem {

using nlohmann::json;

std::string to_json(const LabelledGraphDoc& doc) {
  json j;
  j["schema"] = doc.schema;
  j["mode"] = doc.mode;
  json vertices = json::array();
  for (int v = 0; v < doc.graph.vertex_count; ++v) {
    json vj{{"id", v}};
    if (static_cast<int>(doc.graph.labels.size()) > v && doc.graph.labels[static_cast<std::size_t>(v)] >= 0)
      vj["label"] = doc.graph.labels[static_cast<std::size_t>(v)];
    else
      vj["label"] = nullptr;
    vertices.push_back(vj);
  }
  j["vertices"] = vertices;
  json edges = json::array();
  for (auto [u, v] : doc.graph.edges) edges.push_back({u, v});
  j["edges"] = edges;
  json blocks = json::array();
  for (const auto& b : doc.graph.blocks) blocks.push_back({b[0], b[1], b[2]});
  j["blocks"] = blocks;
  j["provenance"] = doc.provenance;
  return j.dump(2) + "\n";
}

LabelledGraphDoc parse_doc(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph document is not valid JSON: ") + e.what());
  }
  LabelledGraphDoc doc;
  try {
    doc.schema = j.at("schema").get<int>();
    if (doc.schema != LabelledGraphDoc::kSchemaVersion)
      throw ParseError("unsupported schema version " + std::to_string(doc.schema));
    doc.mode = j.value("mode", std::string{});
    const auto& vs = j.at("vertices");
    doc.graph.vertex_count = static_cast<int>(vs.size());
    doc.graph.labels.assign(vs.size(), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const int id = vs[i].at("id").get<int>();
      if (id != static_cast<int>(i))
        throw ParseError("vertex ids must be dense from 0; entry " + std::to_string(i) + " has id " +
                         std::to_string(id));
      const auto& lab = vs[i].at("label");
      if (!lab.is_null()) {
        const int l = lab.get<int>();
        if (l < 0) throw ParseError("vertex " + std::to_string(id) + " has a negative label");
        doc.graph.labels[i] = l;
      }
    }
    auto check = [&](int v) {
      if (v < 0 || v >= doc.graph.vertex_count)
        throw ParseError("unknown vertex id " + std::to_string(v));
      return v;
    };
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair of vertex ids");
      doc.graph.edges.emplace_back(check(e[0].get<int>()), check(e[1].get<int>()));
    }
    if (j.contains("blocks")) {
      for (const auto& b : j.at("blocks")) {
        if (!b.is_array() || b.size() != 3) throw ParseError("each block must list three vertex ids");
        doc.graph.blocks.push_back({check(b[0].get<int>()), check(b[1].get<int>()), check(b[2].get<int>())});
      }
    }
    if (j.contains("provenance")) {
      for (const auto& [k, v] : j.at("provenance").items())
        doc.provenance[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph document does not match the schema: ") + e.what());
  }
  return doc;
}

LabelledGraphDoc read_doc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_doc(buf.str());
}

void write_doc(const LabelledGraphDoc& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << to_json(doc);
  if (!out) throw InvalidInput("write to '" + path + "' failed");
}

std::string to_dot(const LabelledGraphDoc& doc) {
  const Graph& g = doc.graph;
  auto label = [&](int v) {
    return static_cast<int>(g.labels.size()) > v ? g.labels[static_cast<std::size_t>(v)] : -1;
  };
  std::ostringstream os;
  os << "graph labelled {\n";
  os << "  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count; ++v) {
    os << "  v" << v << " [label=\"";
    if (label(v) >= 0) os << label(v);
    os << "\"];\n";
  }
  for (auto [u, v] : g.edges) {
    os << "  v" << u << " -- v" << v;
    if (label(u) >= 0 && label(v) >= 0) os << " [label=\"" << std::abs(label(u) - label(v)) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace skolem
