#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "galfold/charts.hpp"
#include "galfold/document.hpp"
#include "galfold/error.hpp"
#include "galfold/folding.hpp"
#include "galfold/render_svg.hpp"
#include "galfold/verify.hpp"

namespace {

// Exit code contract: 0 ok, 1 invalid gallery / failed verification,
// 2 parse error, 3 strict-paper validity failure, 4 operator undefined,
// 5 unsupported rank.
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitStrictPaper = 3;
constexpr int kExitUndefined = 4;
constexpr int kExitRank = 5;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) galfold::fail(galfold::Errc::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

galfold::OperatorKind parse_op(const std::string& name) {
  if (name == "e") return galfold::OperatorKind::E;
  if (name == "f") return galfold::OperatorKind::F;
  if (name == "etilde") return galfold::OperatorKind::ETilde;
  galfold::fail(galfold::Errc::InvalidArgument,
                "op must be one of e, f, etilde");
}

void print_violations(const std::vector<galfold::Violation>& violations,
                      std::size_t gallery_index) {
  for (const auto& v : violations)
    std::cout << "gallery " << gallery_index << ": "
              << galfold::violation_name(v.kind) << " at "
              << (v.at_panel ? "panel " : "alcove ") << v.index << " ("
              << v.detail << ")\n";
}

int cmd_validate(const std::string& file) {
  galfold::GalleryDocument doc = galfold::parse_document(read_input(file));
  galfold::RootSystem rs = galfold::RootSystem::build(doc.root_system);
  bool all_ok = true;
  for (std::size_t i = 0; i < doc.galleries.size(); ++i) {
    auto violations = galfold::validate(rs, doc.galleries[i]);
    if (!violations.empty()) {
      all_ok = false;
      print_violations(violations, i);
    }
  }
  if (all_ok)
    std::cout << "ok: " << doc.galleries.size() << " galleries valid\n";
  return all_ok ? 0 : kExitInvalid;
}

int cmd_apply(const std::string& file, const std::string& op_name, int root,
              std::size_t index, bool strict_paper) {
  galfold::GalleryDocument doc = galfold::parse_document(read_input(file));
  galfold::RootSystem rs = galfold::RootSystem::build(doc.root_system);
  if (index >= doc.galleries.size())
    galfold::fail(galfold::Errc::IndexOutOfRange, "no gallery at --index",
                  static_cast<long>(index));
  galfold::OperatorKind kind = parse_op(op_name);
  galfold::OperatorApplication app = galfold::apply_operator(
      rs, doc.galleries[index], root - 1, kind, strict_paper);

  galfold::GalleryDocument out{doc.root_system, {app.gallery}};
  if (strict_paper) {
    for (const auto& note : app.notes) std::cerr << "note: " << note << "\n";
    auto violations = galfold::validate(rs, app.gallery);
    std::cout << galfold::serialize_document(out) << "\n";
    if (!violations.empty()) {
      print_violations(violations, 0);
      return kExitStrictPaper;
    }
    return 0;
  }
  std::cout << galfold::serialize_document(out) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const galfold::VerifyOptions& opts) {
  galfold::VerifyReport rep;
  if (suite == "operators")
    rep = galfold::verify_operators(opts);
  else if (suite == "theorems")
    rep = galfold::verify_theorems(opts);
  else if (suite == "tree")
    rep = galfold::verify_tree(opts);
  else if (suite == "all")
    rep = galfold::verify_all(opts);
  else
    galfold::fail(galfold::Errc::InvalidArgument,
                  "suite must be operators, theorems, tree or all");
  std::cout << rep.text();
  return rep.pass ? 0 : kExitInvalid;
}

int cmd_render(const std::string& file, const std::string& out_path) {
  galfold::GalleryDocument doc = galfold::parse_document(read_input(file));
  galfold::RootSystem rs = galfold::RootSystem::build(doc.root_system);
  std::string svg = galfold::render_svg(rs, doc.galleries);
  std::ofstream out(out_path, std::ios::binary);
  if (!out)
    galfold::fail(galfold::Errc::InvalidArgument, "cannot write " + out_path);
  out << svg;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"galfold: folding operators on combinatorial galleries"};
  app.require_subcommand(1);

  std::string file = "-";
  std::string op_name = "e";
  int root = 1;
  std::size_t index = 0;
  bool strict_paper = false;
  std::string suite = "all";
  std::string out_path = "out.svg";
  galfold::VerifyOptions vopts;

  auto* validate = app.add_subcommand("validate", "validate a gallery document");
  validate->add_option("file", file, "document path or - for stdin");

  auto* apply = app.add_subcommand("apply", "apply a folding operator");
  apply->add_option("file", file, "document path or - for stdin");
  apply->add_option("--op", op_name, "operator: e, f or etilde")->required();
  apply->add_option("--root", root, "simple root index (1-based)")->required();
  apply->add_option("--index", index, "gallery index in the document");
  apply->add_flag("--strict-paper", strict_paper,
                  "use the printed operator variants and report the damage");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "operators, theorems, tree or all");
  verify->add_option("--type", vopts.type, "root system for the corpora");
  verify->add_option("--samples", vopts.samples, "corpus size");
  verify->add_option("--seed", vopts.seed, "corpus seed");
  verify->add_option("--max-length", vopts.max_length, "corpus length bound");
  verify->add_option("--q", vopts.tree_q, "tree branching parameter");
  verify->add_option("--depth", vopts.tree_depth, "tree truncation radius");
  verify->add_flag("--experiment", vopts.experiment,
                   "report non-regular theorem statistics in detail");

  auto* render = app.add_subcommand("render", "render rank-2 galleries as SVG");
  render->add_option("file", file, "document path or - for stdin");
  render->add_option("--out", out_path, "output SVG path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (apply->parsed()) return cmd_apply(file, op_name, root, index, strict_paper);
    if (verify->parsed()) return cmd_verify(suite, vopts);
    if (render->parsed()) return cmd_render(file, out_path);
  } catch (const galfold::Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case galfold::Errc::ParseError:
      case galfold::Errc::UnsupportedType:
        return kExitParse;
      case galfold::Errc::OperatorUndefined:
        return kExitUndefined;
      case galfold::Errc::RankUnsupported:
        return kExitRank;
      default:
        return kExitInvalid;
    }
  }
  return 0;
}
