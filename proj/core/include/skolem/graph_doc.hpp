#pragma once

// JSON document for a labelled graph, and DOT export.

#include <map>
#include <string>

#include "skolem/cactus.hpp"

namespace skolem {

struct LabelledGraphDoc {
  static constexpr int kSchemaVersion = 1;

  int schema = kSchemaVersion;
  std::string mode;  // claimed verdict: graceful / near-graceful / neither
  Graph graph;
  std::map<std::string, std::string> provenance;
};

std::string to_json(const LabelledGraphDoc& doc);
// Throws ParseError on malformed JSON or a document that breaks the schema
// (ids not dense from 0, edges naming unknown vertices, ...).
LabelledGraphDoc parse_doc(const std::string& text);

LabelledGraphDoc read_doc(const std::string& path);
void write_doc(const LabelledGraphDoc& doc, const std::string& path);

// Node per vertex in id order with its label, edge labels |f(u)-f(v)|.
std::string to_dot(const LabelledGraphDoc& doc);

}  // namespace skolem
