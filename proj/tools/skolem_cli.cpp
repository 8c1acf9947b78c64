// skolem: command-line front end for sequences, blocks, windmill labellings
// and vane attachment.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 search exhausted or no construction.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "skolem/blocks.hpp"
#include "skolem/cactus.hpp"
#include "skolem/catalog.hpp"
#include "skolem/compose.hpp"
#include "skolem/error.hpp"
#include "skolem/graph_doc.hpp"
#include "skolem/labeller.hpp"
#include "skolem/search.hpp"
#include "skolem/sequence.hpp"

using namespace skolem;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kExhausted = 3;

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse:
    case ErrorKind::invalid_input: return kUsage;
    case ErrorKind::verification_failed: return kVerifyFailed;
    case ErrorKind::infeasible:
    case ErrorKind::search_exhausted: return kExhausted;
  }
  return kUsage;
}

std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

// A Skolem-family text is hooked when its length is odd.
Sequence parse_skolem_family(const std::string& text, const std::string& kind_name) {
  if (kind_name == "skolem" || kind_name == "hooked-skolem") return parse_sequence(text, kind_from_name(kind_name));
  const bool comma = text.find(',') != std::string::npos;
  const std::size_t len = comma ? static_cast<std::size_t>(std::count(text.begin(), text.end(), ',') + 1) : text.size();
  return parse_sequence(text, len % 2 ? SeqKind::hooked_skolem() : SeqKind::skolem());
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    if (tok.size() == 1 && symbol_value(tok[0]) >= 0) {
      out.push_back(symbol_value(tok[0]));
      continue;
    }
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ParseError("bad number '" + tok + "' in list");
    }
  }
  return out;
}

BlockForm parse_form(const std::string& f) {
  if (f == "standard") return BlockForm::standard;
  if (f == "alt") return BlockForm::alt;
  throw ParseError("form must be standard or alt, got '" + f + "'");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

LabelledGraphDoc doc_from(const LabelledWindmill& w) {
  LabelledGraphDoc doc;
  doc.mode = to_string(w.verdict.verdict);
  doc.graph = w.graph;
  doc.provenance["method"] = w.method;
  doc.provenance["spec"] = w.spec.describe();
  if (w.type != '-') doc.provenance["type"] = std::string(1, w.type);
  if (w.sequence) {
    doc.provenance["sequence"] = to_text(*w.sequence);
    doc.provenance["kind"] = w.sequence->kind().name();
  }
  if (!w.detail.empty()) doc.provenance["plan"] = w.detail;
  std::string blocks;
  for (const auto& b : w.blocks) {
    if (!blocks.empty()) blocks += ' ';
    blocks += b.to_string() + ":" + to_string(b.provenance);
  }
  if (!blocks.empty()) doc.provenance["blocks"] = blocks;
  return doc;
}

void print_verdict(const LabellingVerdict& v) {
  std::cout << to_string(v.verdict) << "\n";
  if (v.verdict == Verdict::neither) {
    if (!v.reason.empty()) std::cout << "reason: " << v.reason << "\n";
    std::cout << "missing: " << join(v.missing) << "\n";
    std::cout << "duplicates: " << join(v.duplicates) << "\n";
    if (!v.repeated_vertex_labels.empty())
      std::cout << "repeated vertex labels: " << join(v.repeated_vertex_labels) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skolem-type sequences and graceful labellings of Dutch windmills"};
  app.require_subcommand(1);
  std::string catalog_path;
  app.add_option("--seed-catalog", catalog_path, "Catalog file to use instead of the bundled one");
  int workers = default_workers();

  // seq
  auto* seq = app.add_subcommand("seq", "Sequence tools");
  seq->require_subcommand(1);
  std::string kind_name = "skolem";
  int defect = 1;
  int hook = 0;
  int order = 0;
  std::size_t limit = 0;
  std::string text;

  auto* seq_validate = seq->add_subcommand("validate", "Check a sequence against its definition");
  seq_validate->add_option("--kind", kind_name, "skolem | hooked-skolem | langford | hooked-langford | extended-langford")->required();
  seq_validate->add_option("--defect", defect, "Smallest difference of a Langford kind");
  seq_validate->add_option("--hook", hook, "Hook position of an extended Langford sequence");
  seq_validate->add_option("text", text, "Sequence text")->required();

  auto* seq_pivots = seq->add_subcommand("pivots", "Print the pivots of a (hooked) Skolem sequence");
  seq_pivots->add_option("--kind", kind_name, "skolem | hooked-skolem")->required();
  seq_pivots->add_option("text", text, "Sequence text")->required();

  auto* seq_enum = seq->add_subcommand("enumerate", "List sequences in lexicographic order");
  seq_enum->add_option("--kind", kind_name, "Sequence kind")->required();
  seq_enum->add_option("--order", order, "Order (number of differences)")->required();
  seq_enum->add_option("--defect", defect, "Smallest difference of a Langford kind");
  seq_enum->add_option("--hook", hook, "Hook position of an extended Langford sequence");
  seq_enum->add_option("--limit", limit, "Stop after this many (0 = all)");
  seq_enum->add_option("--workers", workers, "Threads for the search");

  auto* seq_compose = seq->add_subcommand("compose", "Concatenate or interlace two sequences");
  bool concat = false, inter = false;
  std::string second;
  seq_compose->add_flag("--concat", concat, "(Hooked) Skolem with a (hooked) Langford sequence");
  seq_compose->add_flag("--interlace", inter, "Hooked Skolem with a hooked Langford sequence");
  seq_compose->add_option("skolem", text, "(Hooked) Skolem sequence text")->required();
  seq_compose->add_option("langford", second, "(Hooked) Langford sequence text")->required();
  seq_compose->add_option("--defect", defect, "Defect of the Langford sequence")->required();

  // blocks
  auto* blocks = app.add_subcommand("blocks", "Base blocks of a (hooked) Skolem sequence");
  std::string form = "standard";
  std::vector<int> pivot_list;
  int shift = 0;
  int shift_only = 0;
  blocks->add_option("--kind", kind_name, "skolem | hooked-skolem")->required();
  blocks->add_option("text", text, "Sequence text")->required();
  blocks->add_option("--form", form, "standard | alt");
  auto* pivot_opt = blocks->add_option("--pivot", pivot_list, "Pivot the block of this difference (repeatable)");
  auto* shift_opt = blocks->add_option("--shift", shift, "Add a constant to every block");
  blocks->add_option("--diff", shift_only, "With --shift, only shift the block of this difference");
  pivot_opt->excludes(shift_opt);

  // windmill
  auto* wm = app.add_subcommand("windmill", "Windmill labellings");
  wm->require_subcommand(1);
  std::string type_str, seq_text, pivots_text, out_path, in_path, format = "dot";
  auto* wm_label = wm->add_subcommand("label", "Label a windmill and write the graph document");
  wm_label->add_option("--order", order, "Number of triangles");
  wm_label->add_option("--type", type_str, "Pendant type a..k (omit for a plain windmill)");
  wm_label->add_option("--seq", seq_text, "Use this (hooked) Skolem sequence");
  wm_label->add_option("--pivots", pivots_text, "Pivots to apply with --seq, e.g. 1,4,7");
  wm_label->add_option("--form", form, "Block form for a plain windmill: standard | alt");
  wm_label->add_option("--workers", workers, "Threads for the search");
  wm_label->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* wm_verify = wm->add_subcommand("verify", "Certify a graph document");
  wm_verify->add_option("file", in_path, "Graph document")->required();

  auto* wm_export = wm->add_subcommand("export", "Export a graph document");
  wm_export->add_option("file", in_path, "Graph document")->required();
  wm_export->add_option("--format", format, "dot")->check(CLI::IsMember({"dot"}));
  wm_export->add_option("-o,--output", out_path, "Output file (default stdout)");

  // extend
  auto* ext = app.add_subcommand("extend", "Attach triangular vanes at a vertex labelled 0");
  int vanes = 0, which = 0;
  ext->add_option("--graph", in_path, "Graph document")->required();
  ext->add_option("--vanes", vanes, "Langford order l (cases 1 and 4 add l+1 vanes)")->required();
  ext->add_option("--case", which, "1..4")->required()->check(CLI::Range(1, 4));
  ext->add_option("--seq", seq_text, "Use this sequence instead of searching");
  ext->add_option("-o,--output", out_path, "Output file (default stdout)");

  // catalog
  auto* cat = app.add_subcommand("catalog", "Bundled tables");
  cat->require_subcommand(1);
  auto* cat_verify = cat->add_subcommand("verify", "Re-validate every catalog row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (!catalog_path.empty()) set_catalog_path(catalog_path);

    if (*seq_validate) {
      const SeqKind kind = kind_from_name(kind_name, defect, hook);
      const Sequence s = parse_sequence(text, kind);
      const auto report = validate(s);
      if (report.ok()) {
        std::cout << "ok\n";
        return kOk;
      }
      for (const auto& v : report.violations) std::cout << "violation: " << v.message << "\n";
      return kVerifyFailed;
    }
    if (*seq_pivots) {
      const Sequence s = parse_sequence(text, kind_from_name(kind_name));
      std::cout << join(pivots(s)) << "\n";
      return kOk;
    }
    if (*seq_enum) {
      const SeqKind kind = kind_from_name(kind_name, defect, hook);
      for (const auto& s : enumerate(kind, order, limit, workers)) std::cout << to_text(s) << "\n";
      return kOk;
    }
    if (*seq_compose) {
      if (concat == inter) throw InvalidInput("give exactly one of --concat or --interlace");
      const Sequence s = parse_skolem_family(text, "");
      const bool comma = second.find(',') != std::string::npos;
      const std::size_t len = comma ? static_cast<std::size_t>(std::count(second.begin(), second.end(), ',') + 1) : second.size();
      const SeqKind lk = len % 2 ? SeqKind::hooked_langford(defect) : SeqKind::langford(defect);
      const Sequence l = parse_sequence(second, lk);
      const Sequence out = concat ? concatenate(s, l) : interlace(s, l);
      std::cout << to_text(out) << "\n";
      return kOk;
    }
    if (*blocks) {
      const Sequence s = parse_sequence(text, kind_from_name(kind_name));
      const int n = s.order();
      const bool hooked = s.kind().tag == KindTag::hooked_skolem;
      auto bs = base_blocks(pairs(s), n, parse_form(form));
      for (int i : pivot_list) {
        if (i < 1 || i > n) throw InvalidInput("no block for difference " + std::to_string(i));
        bs[static_cast<std::size_t>(i - 1)] = pivot_block(bs[static_cast<std::size_t>(i - 1)], n, hooked);
      }
      if (shift != 0) {
        const int top = hooked ? 3 * n + 1 : 3 * n;
        for (auto& b : bs)
          if (shift_only == 0 || b.difference == shift_only) b = shift_block(b, shift, top);
      }
      for (const auto& b : bs) std::cout << b.to_string() << "\n";
      return kOk;
    }
    if (*wm_label) {
      std::optional<LabelledWindmill> w;
      const bool typed = !type_str.empty();
      if (typed && (type_str.size() != 1 || !is_type_letter(type_str[0])))
        throw InvalidInput("type must be one letter a..k");
      if (!seq_text.empty()) {
        const Sequence s = parse_skolem_family(seq_text, "");
        if (order != 0 && order != s.order())
          throw InvalidInput("--order " + std::to_string(order) + " does not match the sequence order " +
                             std::to_string(s.order()));
        std::optional<std::vector<int>> chosen;
        if (!pivots_text.empty()) chosen = parse_int_list(pivots_text);
        if (typed) {
          w = label_type(type_str[0], s, chosen);
        } else {
          if (chosen) throw InvalidInput("--pivots needs --type");
          w = label_windmill(s, std::vector<BlockForm>(static_cast<std::size_t>(s.order()), parse_form(form)));
        }
      } else {
        if (order < 1) throw InvalidInput("--order is required without --seq");
        if (!pivots_text.empty()) throw InvalidInput("--pivots needs --seq");
        if (typed) {
          LabelOptions opts;
          opts.workers = workers;
          w = label_type(type_str[0], order, opts);
        } else {
          w = label_windmill(order, std::nullopt, parse_form(form));
        }
      }
      emit(to_json(doc_from(*w)), out_path);
      std::cerr << to_string(w->verdict.verdict) << " (" << w->method << ")\n";
      return kOk;
    }
    if (*wm_verify) {
      const LabelledGraphDoc doc = read_doc(in_path);
      const auto v = verify_labelling(doc.graph);
      print_verdict(v);
      if (v.verdict == Verdict::neither) return kVerifyFailed;
      if (!doc.mode.empty() && doc.mode != to_string(v.verdict)) {
        std::cout << "claim mismatch: document claims " << doc.mode << "\n";
        return kVerifyFailed;
      }
      return kOk;
    }
    if (*wm_export) {
      emit(to_dot(read_doc(in_path)), out_path);
      return kOk;
    }
    if (*ext) {
      const LabelledGraphDoc doc = read_doc(in_path);
      std::optional<Sequence> supplied;
      if (!seq_text.empty()) {
        const int m = doc.graph.edge_count();
        SeqKind kind;
        switch (which) {
          case 1: kind = SeqKind::modified_extended(m + 2, 2 * vanes + 2 - m, m, false); break;
          case 2: kind = SeqKind::langford(m + 1); break;
          case 3: kind = SeqKind::hooked_langford(m + 1); break;
          default: kind = SeqKind::modified_extended(m + 2, 2 * vanes + 3 - m, m, true); break;
        }
        supplied = parse_sequence(seq_text, kind, vanes);
      }
      const auto r = attach_vanes(doc.graph, vanes, which, supplied);
      LabelledGraphDoc out;
      out.mode = to_string(r.verdict.verdict);
      out.graph = r.graph;
      out.provenance = doc.provenance;
      out.provenance["extend"] = "case " + std::to_string(which) + ", " + std::to_string(r.added.size()) + " vanes";
      if (r.sequence) out.provenance["extend_sequence"] = to_text(*r.sequence);
      emit(to_json(out), out_path);
      std::cerr << to_string(r.verdict.verdict) << "\n";
      return kOk;
    }
    if (*cat_verify) {
      const Catalog& c = bundled_catalog();
      const auto report = catalog_verify(c);
      for (const auto& i : report.issues) std::cout << "FAIL " << i.message << "\n";
      std::cout << report.rows_checked << " rows checked, " << report.issues.size() << " issues\n";
      return report.ok() ? kOk : kVerifyFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
