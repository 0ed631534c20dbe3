// Batch front end: check theories, expand a theorem's proof to primitive
// rules, or report macro-vs-expanded proof sizes.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "holcheck/conv.hpp"
#include "holcheck/error.hpp"
#include "holcheck/theory.hpp"

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;
using namespace holcheck;

namespace {

struct CommonOpts {
  std::vector<std::string> paths;
  std::uint32_t trust = 0;
  std::size_t budget = 0;
  std::string report = "human";
  bool no_gaps = false;
  bool fail_fast = false;
};

void add_common_flags(CLI::App* cmd, CommonOpts& opts, bool with_check_flags) {
  cmd->add_option("--path", opts.paths, "Directory searched for imported theories (repeatable)");
  cmd->add_option("--trust", opts.trust, "Macros with level <= N are trusted unexpanded");
  cmd->add_option("--budget", opts.budget, "Rewrite step budget for conversions");
  if (with_check_flags) {
    cmd->add_option("--report", opts.report, "Report format: human or json")
        ->check(CLI::IsMember({"human", "json"}));
    cmd->add_flag("--no-gaps", opts.no_gaps, "Fail when any proof contains sorry");
    cmd->add_flag("--fail-fast", opts.fail_fast, "Stop at the first failing theorem");
  }
}

std::vector<std::string> search_paths_for(const std::string& input, const CommonOpts& opts) {
  std::vector<std::string> out = opts.paths;
  if (const char* env = std::getenv("HOLCHECK_PATH")) {
    std::string s(env);
    std::size_t start = 0;
    while (start <= s.size()) {
      std::size_t end = s.find(':', start);
      if (end == std::string::npos) end = s.size();
      if (end > start) out.push_back(s.substr(start, end - start));
      start = end + 1;
    }
  }
  fs::path parent = fs::path(input).parent_path();
  out.push_back(parent.empty() ? "." : parent.string());
  return out;
}

void apply_budget(const CommonOpts& opts) {
  if (opts.budget > 0) set_default_conv_budget(opts.budget);
}

struct CheckedTheory {
  std::string path;
  Theory theory;
  TheoryCheckReport report;
};

ojson gaps_to_json(const std::vector<ProofId>& gaps) {
  ojson out = ojson::array();
  for (const auto& g : gaps) out.push_back(id_to_string(g));
  return out;
}

ojson check_report_json(const std::vector<CheckedTheory>& checked, std::uint32_t trust,
                        bool all_ok) {
  ojson doc;
  doc["command"] = "check";
  doc["trust"] = trust;
  ojson theories = ojson::array();
  for (const auto& ct : checked) {
    ojson tj;
    tj["name"] = ct.theory.name();
    tj["path"] = ct.path;
    ojson thms = ojson::array();
    std::size_t failed = 0;
    for (const auto& out : ct.report.theorems) {
      ojson j;
      j["name"] = out.name;
      j["ok"] = out.ok;
      j["error"] = out.error;
      j["steps_checked"] = out.report.steps_checked;
      j["macro_steps_trusted"] = out.report.macro_steps_trusted;
      j["macro_steps_expanded"] = out.report.macro_steps_expanded;
      j["gaps"] = gaps_to_json(out.report.gaps);
      if (!out.ok) ++failed;
      thms.push_back(std::move(j));
    }
    tj["theorems"] = std::move(thms);
    ojson totals;
    totals["theorems"] = ct.report.theorems.size();
    totals["failed"] = failed;
    totals["steps_checked"] = ct.report.total_steps;
    totals["macro_steps_trusted"] = ct.report.total_trusted;
    totals["macro_steps_expanded"] = ct.report.total_expanded;
    tj["totals"] = std::move(totals);
    tj["theorems_with_gaps"] = ct.report.theorems_with_gaps;
    theories.push_back(std::move(tj));
  }
  doc["theories"] = std::move(theories);
  doc["ok"] = all_ok;
  return doc;
}

void print_human_check(const std::vector<CheckedTheory>& checked) {
  for (const auto& ct : checked) {
    std::size_t failed = 0;
    for (const auto& out : ct.report.theorems)
      if (!out.ok) ++failed;
    std::cout << "theory " << ct.theory.name() << ": " << (failed == 0 ? "ok" : "FAIL") << " ("
              << ct.report.theorems.size() << " theorems; steps " << ct.report.total_steps
              << "; macros trusted " << ct.report.total_trusted << ", expanded "
              << ct.report.total_expanded << "; theorems with gaps "
              << ct.report.theorems_with_gaps.size() << ")\n";
    for (const auto& out : ct.report.theorems) {
      if (out.ok) {
        std::cout << "  ok " << out.name << " (steps " << out.report.steps_checked;
        if (out.report.macro_steps_trusted)
          std::cout << ", trusted " << out.report.macro_steps_trusted;
        if (out.report.macro_steps_expanded)
          std::cout << ", expanded " << out.report.macro_steps_expanded;
        if (!out.report.gaps.empty()) std::cout << ", gaps " << out.report.gaps.size();
        std::cout << ")\n";
      } else {
        std::cout << "  FAIL " << out.name << ": " << out.error << "\n";
      }
    }
  }
}

int run_check(const std::vector<std::string>& inputs, const CommonOpts& opts) {
  apply_budget(opts);
  std::vector<CheckedTheory> checked;
  for (const auto& input : inputs) {
    Theory thy = load_theory(input, search_paths_for(input, opts));  // throws: exit 2
    CheckOptions copts;
    copts.trust.threshold = opts.trust;
    copts.fail_fast = opts.fail_fast;
    TheoryCheckReport report = check_theory(thy, copts);
    checked.push_back(CheckedTheory{input, std::move(thy), std::move(report)});
  }
  bool all_ok = true;
  for (const auto& ct : checked) all_ok = all_ok && ct.report.ok(opts.no_gaps);
  if (opts.report == "json") {
    std::cout << check_report_json(checked, opts.trust, all_ok).dump(2) << "\n";
  } else {
    print_human_check(checked);
    if (!all_ok) {
      for (const auto& ct : checked)
        if (opts.no_gaps && !ct.report.theorems_with_gaps.empty() && ct.report.all_ok())
          std::cout << "theory " << ct.theory.name() << ": gaps present (--no-gaps)\n";
    }
  }
  return all_ok ? 0 : 1;
}

int run_stats(const std::vector<std::string>& inputs, const CommonOpts& opts) {
  apply_budget(opts);
  bool all_ok = true;
  ojson theories = ojson::array();
  struct Row {
    std::string name;
    std::size_t at_trust, expanded;
    double ratio;
  };
  std::vector<std::pair<std::string, std::vector<Row>>> tables;

  for (const auto& input : inputs) {
    Theory thy = load_theory(input, search_paths_for(input, opts));
    CheckOptions at_trust;
    at_trust.trust.threshold = opts.trust;
    CheckOptions expanded;  // trust 0: expand everything
    TheoryCheckReport r1 = check_theory(thy, at_trust);
    TheoryCheckReport r0 = check_theory(thy, expanded);
    std::vector<Row> rows;
    ojson thms = ojson::array();
    for (std::size_t i = 0; i < r1.theorems.size(); ++i) {
      const auto& a = r1.theorems[i];
      const auto& b = r0.theorems[i];
      if (!a.ok || !b.ok) {
        all_ok = false;
        std::cerr << "stats: theorem " << a.name << " failed to check\n";
        continue;
      }
      Row row{a.name, a.report.steps_checked, b.report.steps_checked,
              static_cast<double>(b.report.steps_checked) /
                  static_cast<double>(a.report.steps_checked)};
      ojson j;
      j["name"] = row.name;
      j["steps_at_trust"] = row.at_trust;
      j["steps_expanded"] = row.expanded;
      j["ratio"] = row.ratio;
      thms.push_back(std::move(j));
      rows.push_back(std::move(row));
    }
    ojson tj;
    tj["name"] = thy.name();
    tj["path"] = input;
    tj["theorems"] = std::move(thms);
    theories.push_back(std::move(tj));
    tables.emplace_back(thy.name(), std::move(rows));
  }

  if (opts.report == "json") {
    ojson doc;
    doc["command"] = "stats";
    doc["trust"] = opts.trust;
    doc["theories"] = std::move(theories);
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& [name, rows] : tables) {
      std::cout << "theory " << name << " (steps at trust " << opts.trust
                << " vs fully expanded)\n";
      for (const auto& row : rows)
        std::cout << "  " << row.name << ": " << row.at_trust << " vs " << row.expanded
                  << " (ratio " << row.ratio << ")\n";
    }
  }
  return all_ok ? 0 : 1;
}

int run_expand(const std::string& input, const std::string& theorem, const std::string& output,
               const CommonOpts& opts) {
  apply_budget(opts);
  Theory thy = load_theory(input, search_paths_for(input, opts));
  Theory expanded = expand_theorem(thy, theorem);
  save_theory(expanded, output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holcheck: an independent checker for HOL theories in JSON format"};
  app.require_subcommand(1);

  CommonOpts check_opts, stats_opts, expand_opts;
  std::vector<std::string> check_inputs, stats_inputs;
  std::string expand_input, expand_thm, expand_out;

  CLI::App* check = app.add_subcommand("check", "Check every proof in the given theories");
  check->add_option("theories", check_inputs, "Theory files")->required();
  add_common_flags(check, check_opts, true);

  CLI::App* stats = app.add_subcommand(
      "stats", "Per-theorem step counts at the configured trust vs fully expanded");
  stats->add_option("theories", stats_inputs, "Theory files")->required();
  add_common_flags(stats, stats_opts, true);

  CLI::App* expand = app.add_subcommand(
      "expand", "Replace a theorem's proof by its fully macro-expanded form");
  expand->add_option("theory", expand_input, "Theory file")->required();
  expand->add_option("theorem", expand_thm, "Theorem name")->required();
  expand->add_option("output", expand_out, "Output theory file")->required();
  add_common_flags(expand, expand_opts, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(check_inputs, check_opts);
    if (stats->parsed()) return run_stats(stats_inputs, stats_opts);
    if (expand->parsed()) return run_expand(expand_input, expand_thm, expand_out, expand_opts);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ImportCycle& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ImportNotFound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TypeInferenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const HolError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
