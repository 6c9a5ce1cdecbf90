// bolkit command-line tool. Exit codes: 0 success, 1 verification failure
// (or "not isomorphic" for `iso`), 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "bolkit/construct.hpp"
#include "bolkit/gf2.hpp"
#include "bolkit/iso.hpp"
#include "bolkit/oracle.hpp"
#include "bolkit/structure.hpp"
#include "bolkit/verify.hpp"

using namespace bolkit;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

int cmd_check(const std::string& path) {
  auto q = load_table(path);
  std::cout << structure_report(q);
  return kOk;
}

int cmd_construct(const std::vector<std::string>& parts, const std::string& out) {
  std::string spec;
  for (const auto& p : parts) spec += (spec.empty() ? "" : " ") + p;
  auto q = construct_from_spec(spec);
  if (out.empty() || out == "-") std::cout << render(q);
  else save_table(q, out);
  return kOk;
}

int cmd_classify(const std::vector<std::string>& paths) {
  std::vector<LoopTable> loops;
  for (const auto& p : paths) loops.push_back(load_table(p));
  std::cout << classification_report(loops, classify(loops));
  return kOk;
}

int cmd_enumerate_q9(bool with_classes) {
  auto family = gf2::enumerate_q9();
  std::vector<LoopTable> tables;
  for (const auto& m : family) {
    auto com = commutant(m.table);
    std::cout << gf2::to_string(m.params) << " left_bol=" << (is_left_bol(m.table) ? "true" : "false")
              << " commutant_size=" << com.size()
              << " commutant_is_subloop=" << (is_subloop(m.table, com) ? "true" : "false") << "\n";
    tables.push_back(m.table);
  }
  if (with_classes) std::cout << classification_report(tables, classify(tables));
  return kOk;
}

int cmd_oracle(const std::string& which, std::uint64_t budget) {
  if (which.rfind("order", 0) != 0) throw Error(ErrorKind::BadSpec, "expected order<N>, e.g. order8");
  std::size_t n = 0;
  try {
    n = std::stoul(which.substr(5));
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadSpec, "expected order<N>, e.g. order8");
  }
  auto r = run_bol_oracle(n, budget);
  std::cout << "order: " << r.order << "\n"
            << "left_bol_tables: " << r.tables << "\n"
            << "search_nodes: " << r.nodes << "\n"
            << "isomorphism_classes: " << r.classes << "\n"
            << "associative_classes: " << r.associative_classes << "\n"
            << "nonassociative_classes: " << r.nonassociative_classes << "\n"
            << "all_commutants_subloops: " << (r.all_commutants_subloops ? "true" : "false") << "\n";
  return r.all_commutants_subloops ? kOk : kFailed;
}

int cmd_verify(const std::string& fixtures, bool timing) {
  VerifyContext ctx;
  if (!fixtures.empty()) ctx.fixture_dir = fixtures;
  auto report = verify_paper(ctx);
  std::cout << report.render(timing);
  return report.all_pass() ? kOk : kFailed;
}

int cmd_iso(const std::string& a, const std::string& b) {
  auto q1 = load_table(a), q2 = load_table(b);
  if (auto phi = find_isomorphism(q1, q2)) {
    std::cout << "isomorphic: " << to_string(*phi) << "\n";
    return kOk;
  }
  std::cout << "not isomorphic\n";
  return kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bolkit: finite loops, Bol loops and their commutants"};
  app.require_subcommand(1);

  std::string path, out, fixtures, which = "order8";
  std::vector<std::string> paths, spec;
  bool with_classes = false, timing = false;
  std::uint64_t budget = kDefaultSearchBudget;

  auto* check = app.add_subcommand("check", "structural report for a .tbl file");
  check->add_option("FILE", path)->required();

  auto* construct = app.add_subcommand("construct", "build a table from a spec and write it");
  construct->add_option("SPEC", spec, "e.g. \"q9 000000000\", exceptional, \"named order12\"")->required();
  construct->add_option("-o,--output", out, "output file (default stdout)");

  auto* cls = app.add_subcommand("classify", "partition tables into isomorphism classes");
  cls->add_option("FILE", paths)->required();

  auto* enq9 = app.add_subcommand("enumerate-q9", "list the 512 cocycle loops");
  enq9->add_flag("--classify", with_classes, "also print the isomorphism classes");

  auto* oracle = app.add_subcommand("oracle", "exhaustive left Bol search");
  oracle->add_option("WHICH", which, "order8")->required();
  oracle->add_option("--budget", budget, "search node budget");

  auto* verify = app.add_subcommand("verify-paper", "run every claim check");
  verify->add_option("--fixtures", fixtures, "fixture directory");
  verify->add_flag("--timing", timing, "append run times");

  auto* iso = app.add_subcommand("iso", "find an isomorphism between two tables");
  iso->add_option("FILE1", paths)->required()->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(path);
    if (construct->parsed()) return cmd_construct(spec, out);
    if (cls->parsed()) return cmd_classify(paths);
    if (enq9->parsed()) return cmd_enumerate_q9(with_classes);
    if (oracle->parsed()) return cmd_oracle(which, budget);
    if (verify->parsed()) return cmd_verify(fixtures, timing);
    if (iso->parsed()) return cmd_iso(paths[0], paths[1]);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::SearchBudgetExceeded ? kFailed : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
