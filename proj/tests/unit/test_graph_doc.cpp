#include <doctest.h>

#include <filesystem>

#include "skolem/error.hpp"
#include "skolem/graph_doc.hpp"
#include "skolem/labeller.hpp"

using namespace skolem;

TEST_CASE("JSON round trip is lossless") {
  const auto w = label_type('d', 9);
  LabelledGraphDoc doc;
  doc.mode = to_string(w.verdict.verdict);
  doc.graph = w.graph;
  doc.provenance = {{"sequence", "x"}, {"method", w.method}};
  const auto text = to_json(doc);
  const auto back = parse_doc(text);
  CHECK(back.mode == doc.mode);
  CHECK(back.graph.vertex_count == doc.graph.vertex_count);
  CHECK(back.graph.edges == doc.graph.edges);
  CHECK(back.graph.blocks == doc.graph.blocks);
  CHECK(back.graph.labels == doc.graph.labels);
  CHECK(back.provenance == doc.provenance);
  CHECK(to_json(back) == text);
  CHECK(to_string(verify_labelling(back.graph).verdict) == back.mode);

  const auto path = std::filesystem::temp_directory_path() / "skolem_doc_test.json";
  write_doc(doc, path.string());
  CHECK(to_json(read_doc(path.string())) == text);
  std::filesystem::remove(path);
}

TEST_CASE("schema violations") {
  CHECK_THROWS_AS(parse_doc("{"), ParseError);
  CHECK_THROWS_AS(parse_doc(R"({"schema": 2, "vertices": [], "edges": []})"), ParseError);
  CHECK_THROWS_AS(parse_doc(R"({"schema": 1, "vertices": [{"id": 1, "label": 0}], "edges": []})"), ParseError);
  CHECK_THROWS_AS(parse_doc(R"({"schema": 1, "vertices": [{"id": 0, "label": 0}], "edges": [[0, 3]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_doc(R"({"schema": 1, "edges": []})"), ParseError);
}

TEST_CASE("DOT export") {
  Graph k3 = cycle_graph(3);
  k3.labels = {0, 1, 3};
  LabelledGraphDoc doc;
  doc.graph = k3;
  const auto dot = to_dot(doc);
  CHECK(dot == to_dot(doc));
  CHECK(dot ==
        "graph labelled {\n  node [shape=circle];\n  v0 [label=\"0\"];\n  v1 [label=\"1\"];\n  v2 [label=\"3\"];\n"
        "  v0 -- v1 [label=\"1\"];\n  v1 -- v2 [label=\"2\"];\n  v2 -- v0 [label=\"3\"];\n}\n");
}
