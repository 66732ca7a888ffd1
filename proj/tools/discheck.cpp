// discheck: run disentanglement checks on finite instances, print the
// worked-example gallery, run the theorem suites, or decompose a magma.
//
// Exit codes: 0 = ran and every asserted expectation held; 1 = a check
// failed or a suite found a counterexample; 2 = input or usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fincat/checker.hpp>
#include <fincat/gallery.hpp>
#include <fincat/instance_io.hpp>
#include <fincat/theorems.hpp>

namespace {

using fincat::Json;
using fincat::Report;
using fincat::SchemaError;
using fincat::Verdict;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw SchemaError("cannot parse '" + path + "': " + e.what());
  }
  if (j.contains("version") && j.at("version").get<int>() != fincat::kSchemaVersion)
    throw SchemaError("unsupported schema version in '" + path + "'");
  return j;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("DISCHECK_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw SchemaError("DISCHECK_BUDGET is not a number");
    }
  }
  return fincat::kDefaultSearchBudget;
}

void render_report_text(const Report& rep, std::ostream& os) {
  os << "category: " << rep.category << "\n";
  std::size_t width = 0;
  for (const auto& [k, v] : rep.verdicts) width = std::max(width, k.size());
  for (const auto& [k, v] : rep.verdicts)
    os << "  " << k << std::string(width - k.size() + 2, ' ') << fincat::verdict_name(v) << "\n";
  for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
}

// Returns the keys whose expected verdict does not match the report.
std::vector<std::string> expectation_mismatches(
    const std::vector<std::pair<std::string, Verdict>>& expect, const Report& rep) {
  std::vector<std::string> bad;
  for (const auto& [key, want] : expect) {
    auto got = rep.get(key);
    if (!got || *got != want)
      bad.push_back(key + ": expected " + fincat::verdict_name(want) + ", got " +
                    (got ? fincat::verdict_name(*got) : "nothing"));
  }
  return bad;
}

std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int run_check(const std::string& path, const std::string& definitions,
              const std::string& tolerance, std::uint64_t budget, const std::string& format) {
  Json j = load_json(path);
  fincat::CheckConfig cfg;
  cfg.budget = budget;
  if (!tolerance.empty()) cfg.eps = fincat::parse_rat(tolerance);

  std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : "instance";
  Report rep;
  if (kind == "instance") {
    fincat::Instance inst = fincat::instance_from_json(j, cfg.eps);
    rep = fincat::evaluate(inst, split_ids(definitions), cfg);
  } else if (kind == "count") {
    rep = fincat::evaluate_count(fincat::count_from_json(j));
  } else if (kind == "action") {
    rep = fincat::evaluate_action(fincat::action_from_json(j), cfg.budget);
  } else if (kind == "magma") {
    throw SchemaError("'" + path + "' holds a magma table; use the decompose subcommand");
  } else {
    throw SchemaError("unknown kind '" + kind + "'");
  }

  if (format == "json")
    std::cout << fincat::report_to_json(rep).dump(2) << "\n";
  else
    render_report_text(rep, std::cout);

  auto bad = expectation_mismatches(fincat::expectations_from_json(j), rep);
  for (const auto& b : bad) std::cerr << "expectation failed: " << b << "\n";
  return bad.empty() ? 0 : 1;
}

int run_gallery(const std::string& format) {
  bool all_ok = true;
  Json out = Json::array();
  for (const auto& entry : fincat::gallery()) {
    Report got = entry.instance ? fincat::evaluate(*entry.instance)
                                : fincat::evaluate_scene(*entry.scene);
    bool ok = fincat::verdicts_match(entry.expected, got);
    all_ok = all_ok && ok;
    if (format == "json") {
      out.push_back({{"name", entry.name},
                     {"report", fincat::report_to_json(got)},
                     {"matches_expected", ok}});
    } else {
      std::cout << "== " << entry.name << (ok ? "" : "  [MISMATCH]") << "\n";
      render_report_text(got, std::cout);
      std::cout << "\n";
    }
  }
  if (format == "json") std::cout << out.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int run_theorems(std::uint64_t seed, int max_size, int trials, std::uint64_t budget,
                 const std::string& format) {
  fincat::SuiteConfig cfg;
  cfg.seed = seed;
  cfg.max_factor_size = max_size;
  cfg.trials = trials;
  cfg.budget = budget;
  fincat::SuiteReport rep = fincat::theorem_suite(cfg);
  if (format == "json") {
    std::cout << fincat::suite_report_to_json(cfg, rep).dump(2) << "\n";
  } else {
    for (const auto& s : rep.suites) {
      std::cout << (s.passed() ? "PASS" : "FAIL") << "  " << s.name << "  (" << s.cases
                << " cases)";
      if (s.partial) std::cout << "  [partial: budget exceeded]";
      std::cout << "\n";
      if (!s.passed()) std::cout << "      counterexample: " << s.first_counterexample << "\n";
    }
    std::cout << (rep.all_passed() ? "all suites passed" : "counterexample found") << "\n";
  }
  return rep.all_passed() ? 0 : 1;
}

int run_decompose(const std::string& path, int max_size) {
  Json j = load_json(path);
  fincat::MagmaTable g = fincat::magma_from_json(j);
  auto pairs = fincat::find_decompositions(g, max_size);
  std::cout << pairs.size() << " decomposition(s)\n";
  for (const auto& [s1, s2] : pairs) {
    auto render = [&](const std::vector<int>& s) {
      std::string out = "{";
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += g.elements[static_cast<std::size_t>(s[i])];
      }
      return out + "}";
    };
    std::cout << "  " << render(s1) << " x " << render(s2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"disentanglement checks on finite instances"};
  app.require_subcommand(1);

  std::string file, definitions, tolerance, format = "text";
  std::uint64_t seed = 0;
  int max_size = 3, trials = 500, carrier_cap = 12;
  std::uint64_t budget = 0;  // 0 = take the env default

  auto* check = app.add_subcommand("check", "evaluate the definitions on an instance file");
  check->add_option("file", file, "instance file (JSON)")->required();
  check->add_option("--definitions", definitions, "comma-separated definition ids");
  check->add_option("--tolerance", tolerance, "comparison tolerance, e.g. 1e-9 (default: exact)");
  check->add_option("--budget", budget, "search budget in candidate maps");
  check->add_option("--report", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* gallery_cmd = app.add_subcommand("gallery", "print the worked examples and their verdicts");
  gallery_cmd->add_option("--report", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* theorems = app.add_subcommand("theorems", "run the property suites");
  theorems->add_option("--seed", seed, "seed for the randomized families");
  theorems->add_option("--max-size", max_size, "maximum factor size");
  theorems->add_option("--trials", trials, "randomized trials per suite");
  theorems->add_option("--budget", budget, "search budget in candidate maps");
  theorems->add_option("--report", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* decompose = app.add_subcommand("decompose", "enumerate direct-product decompositions");
  decompose->add_option("file", file, "magma table file (JSON)")->required();
  decompose->add_option("--max-size", carrier_cap, "carrier size cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << "\n";
    return 2;
  }

  try {
    std::uint64_t b = budget ? budget : default_budget();
    if (check->parsed()) return run_check(file, definitions, tolerance, b, format);
    if (gallery_cmd->parsed()) return run_gallery(format);
    if (theorems->parsed()) return run_theorems(seed, max_size, trials, b, format);
    if (decompose->parsed()) return run_decompose(file, carrier_cap);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
