#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "ternary/catalog.hpp"
#include "ternary/constructions.hpp"
#include "ternary/error.hpp"
#include "ternary/hopf/bundle.hpp"
#include "ternary/hopf/checks.hpp"
#include "ternary/hopf/format.hpp"
#include "ternary/predicates.hpp"
#include "ternary/report.hpp"
#include "ternary/text_format.hpp"

using namespace ternary;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInput = 2;
constexpr int kBound = 3;

const char* kFooter =
    "Exit codes:\n"
    "  0  success, all requested verifications passed\n"
    "  1  a checked property failed (the report names the witness)\n"
    "  2  input or parse error\n"
    "  3  resource bound refused (e.g. counit enumeration cap)\n";

struct Options {
  std::string input;
  std::string second;
  std::string output;
  std::string c, a, b;
  std::string kind = "standard";
  std::uint32_t p = 5;
  bool exhaustive = false;
  bool json = false;
  bool function = false;
};

Element element(const Carrier& carrier, const std::string& name, const char* flag) {
  if (name.empty()) throw InputError(std::string("missing ") + flag);
  for (Element x = 0; x < carrier.size(); ++x)
    if (carrier.label(x) == name) return x;
  throw InputError(std::string(flag) + ": no element labelled '" + name + "'");
}

// Writes the artifact to --o, or after the report on stdout.
void emit(const Options& o, const std::string& artifact) {
  if (o.output.empty())
    std::cout << artifact;
  else
    write_text_file(o.output, artifact);
}

TernaryTable load_cube(const Options& o) { return parse_tcube(read_text_file(o.input)); }

// nullopt when t is a ternary group, else exit 1 after naming the witness.
std::optional<int> require_group(const TernaryTable& t) {
  const auto status = group_status(t);
  if (status.is_group()) return std::nullopt;
  std::cout << "group: " << report::group_text(t, status) << '\n';
  return kFailed;
}

void reparse(const TernaryTable& t, const std::string& text) {
  if (!(parse_tcube(text) == t)) throw DefectError("emitted tcube does not re-parse to the same table");
}

void reparse(const BinaryTable& b, const std::string& text) {
  if (!(parse_bsq(text) == b)) throw DefectError("emitted bsq does not re-parse to the same table");
}

int analyze(const Options& o) {
  const auto t = load_cube(o);
  const auto r = classify(t, o.exhaustive);
  std::optional<DerivedVerdict> derived;
  if (r.associative) derived = is_derived(t);
  std::cout << (o.json ? report::properties_json(t, r, derived) : report::properties_text(t, r, derived));
  return kOk;
}

int post_cover_verb(const Options& o) {
  const auto t = load_cube(o);
  if (auto code = require_group(t)) return *code;
  const auto cover = post_cover(t, element(t.carrier(), o.c, "--c"));
  const auto text = write_bsq(cover.group);
  reparse(cover.group, text);
  std::cout << report::post_cover_text(t, cover);
  emit(o, text);
  return kOk;
}

int gluskin_verb(const Options& o) {
  const auto t = load_cube(o);
  if (auto code = require_group(t)) return *code;
  std::cout << report::gluskin_text(t, gluskin_hosszu(t, element(t.carrier(), o.a, "--a")));
  return kOk;
}

int retract_verb(const Options& o) {
  const auto t = load_cube(o);
  const auto r = retract(t, element(t.carrier(), o.a, "--a"));
  const auto text = write_bsq(r);
  reparse(r, text);
  emit(o, text);
  return kOk;
}

int derive_verb(const Options& o, bool with_b) {
  const auto b2 = parse_bsq(read_text_file(o.input));
  const auto t = with_b ? b_derive3(b2, element(b2.carrier(), o.b, "--b")) : derive3(b2);
  const auto text = write_tcube(t);
  reparse(t, text);
  emit(o, text);
  return kOk;
}

int iso_verb(const Options& o) {
  const auto t = load_cube(o);
  if (auto code = require_group(t)) return *code;
  const Element a = element(t.carrier(), o.a, "--a");
  const Element b = element(t.carrier(), o.b, "--b");
  const auto iso = find_isomorphism(retract(t, a), retract(t, b));
  if (!iso) {
    std::cout << "retracts: " << t.carrier().label(a) << ' ' << t.carrier().label(b) << "\nmap: none\n";
    return kFailed;
  }
  std::cout << report::isomorphism_text(t, a, b, *iso);
  return kOk;
}

int gen_verb(const Options& o) {
  std::size_t n = 0;
  if (!o.second.empty()) {
    try {
      std::size_t used = 0;
      n = std::stoul(o.second, &used);
      if (used != o.second.size()) throw std::invalid_argument(o.second);
    } catch (const std::logic_error&) {
      throw InputError("gen: size '" + o.second + "' is not a number");
    }
  }
  const auto t = catalog::generate(o.input, n);
  const auto text = write_tcube(t);
  reparse(t, text);
  emit(o, text);
  return kOk;
}

int hopf_build(const Options& o) {
  const auto t = load_cube(o);
  if (auto code = require_group(t)) return *code;
  const auto h = o.function ? hopf::build_function_hopf(t, o.p) : hopf::build_group_hopf(t, o.p);
  const auto text = hopf::write_thopf(h);
  if (!(hopf::write_thopf(hopf::parse_thopf(text)) == text)) throw DefectError("emitted thopf does not round-trip");
  const auto lines = report::hopf_suite(h, o.exhaustive);
  if (!o.output.empty()) std::cout << "kind: " << hopf::to_string(h.kind) << '\n' << report::suite_text(lines);
  emit(o, text);
  return report::suite_passed(lines) ? kOk : kFailed;
}

int hopf_check(const Options& o) {
  const auto h = hopf::parse_thopf(read_text_file(o.input));
  const auto lines = report::hopf_suite(h, o.exhaustive);
  std::cout << "kind: " << hopf::to_string(h.kind) << '\n' << report::suite_text(lines);
  return report::suite_passed(lines) ? kOk : kFailed;
}

int counit_search(const Options& o) {
  const auto h = hopf::parse_thopf(read_text_file(o.input));
  const auto kind = hopf::counit_kind_from_string(o.kind);
  const auto solutions = hopf::search_counits(h.coalgebra, kind);
  std::cout << report::counit_solutions_text(h.coalgebra, kind, solutions);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for finite ternary operations and ternary Hopf algebras over GF(p)", "ternwb"};
  app.footer(kFooter);
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* sub, const char* what) { sub->add_option("input", o.input, what)->required(); };
  auto output = [&](CLI::App* sub) { sub->add_option("--o", o.output, "Write the artifact here instead of stdout"); };

  auto* analyze_cmd = app.add_subcommand("analyze", "Classify a tcube table");
  input(analyze_cmd, "tcube file");
  analyze_cmd->add_flag("--exhaustive", o.exhaustive, "Run the medial check above order 4");
  analyze_cmd->add_flag("--json", o.json, "Emit the report as JSON");

  auto* post_cmd = app.add_subcommand("post-cover", "Build the Post cover of a ternary group");
  input(post_cmd, "tcube file");
  post_cmd->add_option("--c", o.c, "Base element")->required();
  output(post_cmd);

  auto* gluskin_cmd = app.add_subcommand("gluskin", "Gluskin-Hosszu decomposition at a base point");
  input(gluskin_cmd, "tcube file");
  gluskin_cmd->add_option("--a", o.a, "Base element")->required();

  auto* retract_cmd = app.add_subcommand("retract", "Binary retract x.y = [x a y]");
  input(retract_cmd, "tcube file");
  retract_cmd->add_option("--a", o.a, "Middle element")->required();
  output(retract_cmd);

  auto* derive_cmd = app.add_subcommand("derive", "Ternary operation (x.y).z of a bsq table");
  input(derive_cmd, "bsq file");
  output(derive_cmd);

  auto* bderive_cmd = app.add_subcommand("b-derive", "Ternary operation ((x.y).z).b of a bsq table");
  input(bderive_cmd, "bsq file");
  bderive_cmd->add_option("--b", o.b, "Translation element")->required();
  output(bderive_cmd);

  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism between the retracts at two base points");
  input(iso_cmd, "tcube file");
  iso_cmd->add_option("--a", o.a, "First base element")->required();
  iso_cmd->add_option("--b", o.b, "Second base element")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Write a catalog table");
  gen_cmd->add_option("family", o.input, "derZ | derZ4b1 | a3 | derS3 | boolean")->required();
  gen_cmd->add_option("n", o.second, "Order for derZ");
  output(gen_cmd);

  auto* build_cmd = app.add_subcommand("hopf-build", "Build k(G), or F(G) with --function, from a ternary group");
  input(build_cmd, "tcube file");
  build_cmd->add_option("--p", o.p, "Field characteristic")->capture_default_str();
  build_cmd->add_flag("--function", o.function, "Build the function algebra F(G)");
  build_cmd->add_flag("--exhaustive", o.exhaustive, "Run the comedial check above dimension 4");
  output(build_cmd);

  auto* check_cmd = app.add_subcommand("hopf-check", "Run every applicable check on a thopf bundle");
  input(check_cmd, "thopf file");
  check_cmd->add_flag("--exhaustive", o.exhaustive, "Run the comedial check above dimension 4");

  auto* counit_cmd = app.add_subcommand("counit-search", "Enumerate counits of a thopf coalgebra");
  input(counit_cmd, "thopf file");
  counit_cmd->add_option("--kind", o.kind, "standard | polyadic | long")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*analyze_cmd) return analyze(o);
    if (*post_cmd) return post_cover_verb(o);
    if (*gluskin_cmd) return gluskin_verb(o);
    if (*retract_cmd) return retract_verb(o);
    if (*derive_cmd) return derive_verb(o, false);
    if (*bderive_cmd) return derive_verb(o, true);
    if (*iso_cmd) return iso_verb(o);
    if (*gen_cmd) return gen_verb(o);
    if (*build_cmd) return hopf_build(o);
    if (*check_cmd) return hopf_check(o);
    if (*counit_cmd) return counit_search(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const BoundError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kBound;
  } catch (const PreconditionError& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kFailed;
  } catch (const DefectError& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return kFailed;
  }
  return kInput;
}
