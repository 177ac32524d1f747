#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eqpos/errors.hpp"
#include "eqpos_app/problem.hpp"
#include "eqpos_app/run.hpp"
#include "eqpos_app/selftest.hpp"

namespace {

using eqpos::app::OrderedJson;

struct Flags {
  std::string input;
  std::string output;
  std::string dot;
  std::string point;
  bool json = false;
  bool timing = false;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw eqpos::InvalidInput("cannot open output file '" + path + "'");
  out << text;
}

void emit(const Flags& flags, const OrderedJson& doc, const std::string& text) {
  if (!flags.output.empty()) write_file(flags.output, doc.dump(2) + "\n");
  if (flags.json)
    std::cout << doc.dump(2) << "\n";
  else if (flags.output.empty())
    std::cout << text;
}

std::string describe_text(const OrderedJson& d) {
  std::ostringstream out;
  out << "type " << d["type"].get<std::string>() << ", rank " << d["rank"] << ", " << d["positive_root_count"]
      << " positive roots";
  if (!d["weyl_order"].is_null()) out << ", |W| = " << d["weyl_order"];
  out << "\ncartan:\n";
  for (const auto& row : d["cartan"]) out << "  " << row.dump() << "\n";
  out << "positive roots (root, coroot):\n";
  for (const auto& r : d["positive_roots"]) out << "  " << r["root"].dump() << "  " << r["coroot"].dump() << "\n";
  return out.str();
}

int run_query(const Flags& flags, eqpos::app::Mode mode, const std::string& op) {
  if (flags.input.empty()) throw eqpos::InvalidInput("--input: required");
  auto problem = eqpos::app::load_problem(flags.input);
  if (problem.mode != mode)
    throw eqpos::InvalidInput(std::string("mode: the input file is not a ") +
                              (mode == eqpos::app::Mode::kBsdh ? "bsdh" : "wonderful") + " problem");
  eqpos::app::Query q{op, std::nullopt};
  if (!flags.point.empty()) q.point = eqpos::app::Json(flags.point);
  problem.queries = {q};
  const auto doc = eqpos::app::run(problem, {flags.timing});
  if (op == "gkm-graph" && !flags.dot.empty()) write_file(flags.dot, doc["results"][0]["dot"].get<std::string>());
  emit(flags, doc, eqpos::app::render_text(doc));
  return 0;
}

void add_io_flags(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--input", flags.input, "problem file (JSON), '-' for stdin");
  cmd->add_option("--output", flags.output, "write the result JSON to this file");
  cmd->add_flag("--json", flags.json, "print the result JSON to stdout");
  cmd->add_option("--point", flags.point, "bit string (bsdh) or Weyl word such as 1,2 (wonderful)");
  cmd->add_flag("--timing", flags.timing, "add per-query timings to the result");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eqpos: positivity of equivariant bundles on BSDH varieties and wonderful compactifications"};
  app.require_subcommand(1);
  Flags flags;

  std::string type;
  auto* describe = app.add_subcommand("describe", "summarize a root system");
  describe->add_option("type", type, "Cartan type such as A2, B3, A1xA1")->required();
  describe->add_flag("--json", flags.json, "print JSON");
  describe->add_option("--output", flags.output, "write JSON to this file");

  std::string bsdh_op;
  auto* bsdh = app.add_subcommand("bsdh", "queries on a BSDH variety");
  bsdh->add_option("op", bsdh_op, "curves | nef | ample | seshadri | gkm-graph")
      ->required()
      ->check(CLI::IsMember({"curves", "nef", "ample", "seshadri", "gkm-graph"}));
  add_io_flags(bsdh, flags);
  bsdh->add_option("--dot", flags.dot, "write the GKM graph in DOT format to this file");

  std::string wonderful_op;
  auto* wonderful = app.add_subcommand("wonderful", "queries on a wonderful compactification");
  wonderful->add_option("op", wonderful_op, "classes | nef | ample | seshadri")
      ->required()
      ->check(CLI::IsMember({"classes", "nef", "ample", "seshadri"}));
  add_io_flags(wonderful, flags);

  auto* run = app.add_subcommand("run", "execute every query of a problem file");
  add_io_flags(run, flags);

  bool full = false;
  auto* selftest = app.add_subcommand("selftest", "run the invariant corpus");
  selftest->add_flag("--full", full, "full corpus (word length 6, 1000 random trees)");
  selftest->add_option("--output", flags.output, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << eqpos::app::error_json("schema", 2, e.what()).dump() << "\n";
    return 2;
  }

  try {
    if (*describe) {
      const auto doc = eqpos::app::describe(type);
      emit(flags, doc, describe_text(doc));
      return 0;
    }
    if (*bsdh) return run_query(flags, eqpos::app::Mode::kBsdh, bsdh_op);
    if (*wonderful) return run_query(flags, eqpos::app::Mode::kWonderful, wonderful_op == "classes" ? "curves" : wonderful_op);
    if (*run) {
      if (flags.input.empty()) throw eqpos::InvalidInput("--input: required");
      const auto doc = eqpos::app::run(eqpos::app::load_problem(flags.input), {flags.timing});
      emit(flags, doc, eqpos::app::render_text(doc));
      return 0;
    }
    const auto report = eqpos::app::run_selftest(full ? eqpos::app::Depth::kFull : eqpos::app::Depth::kSmall);
    const auto text = report.render();
    if (!flags.output.empty()) write_file(flags.output, text);
    std::cout << text;
    return report.all_pass() ? 0 : 1;
  } catch (const eqpos::Error& e) {
    const int code = eqpos::app::exit_code(e.kind());
    std::cerr << eqpos::app::error_json(eqpos::to_string(e.kind()), code, e.what()).dump() << "\n";
    return code;
  } catch (const std::exception& e) {
    std::cerr << eqpos::app::error_json("internal", 1, e.what()).dump() << "\n";
    return 1;
  }
}
