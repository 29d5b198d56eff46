#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbicalc/errors.hpp"
#include "orbicalc/obstruction.hpp"
#include "orbicalc/scenario.hpp"

namespace fs = std::filesystem;
using namespace orbicalc;

namespace {

std::vector<fs::path> scenario_dirs() {
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv("ORBICALC_SCENARIO_PATH")) {
    std::istringstream is(env);
    std::string item;
    while (std::getline(is, item, ':'))
      if (!item.empty()) dirs.emplace_back(item);
  }
  return dirs;
}

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Resolution order: literal path, bundled name, then the scenario path
/// directories (name or name.orb).
std::optional<std::string> load_scenario(const std::string& ref) {
  if (fs::exists(ref) && fs::is_regular_file(ref)) return read_file(ref);
  for (const auto& b : bundled_scenarios())
    if (ref == b.name) return std::string(b.source);
  for (const auto& dir : scenario_dirs())
    for (const auto& cand : {dir / ref, dir / (ref + ".orb")})
      if (fs::exists(cand) && fs::is_regular_file(cand)) return read_file(cand);
  return std::nullopt;
}

int cmd_run(const std::string& file, const std::string& format,
            const std::vector<std::string>& params) {
  auto source = load_scenario(file);
  if (!source) {
    std::cerr << "error: cannot find scenario '" << file << "'\n";
    return 2;
  }
  RunOptions opts;
  for (const auto& kv : params) {
    std::size_t eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --params wants key=value, got '" << kv << "'\n";
      return 2;
    }
    opts.params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  try {
    Report report = run_scenario(*source, opts);
    std::cout << (format == "record" ? report.to_record() : report.to_text());
    return report.all_passed() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_list() {
  // bundled corpus first, then user directories; deterministic order
  for (const auto& b : bundled_scenarios())
    std::cout << b.name << " - " << scenario_description(b.source) << "\n";
  for (const auto& dir : scenario_dirs()) {
    if (!fs::is_directory(dir)) continue;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".orb")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      auto text = read_file(f);
      std::cout << f.stem().string() << " - " << (text ? scenario_description(*text) : "")
                << " [" << dir.string() << "]\n";
    }
  }
  return 0;
}

int cmd_search(long long bound, long long nbound, bool positivity) {
  SearchOptions so;
  so.coefficient_bound = bound;
  so.n_bound = nbound;
  so.apply_positivity = positivity;
  auto hits = exhaustive_search(so);
  std::cout << "bound=" << bound << " nbound=" << nbound
            << " positivity=" << (positivity ? "on" : "off") << "\n";
  for (const auto& c : hits)
    std::cout << "candidate n=" << c.n << " a=" << c.a << " b=" << c.b << "\n";
  std::cout << "surviving=" << hits.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbicalc: exact invariant calculus for cyclic orbifold surfaces"};
  app.require_subcommand(1);

  std::string file, format = "text";
  std::vector<std::string> params;
  auto* run = app.add_subcommand("run", "run a scenario file and report");
  run->add_option("file", file, "scenario path or bundled name")->required();
  run->add_option("--format", format, "text or record")
      ->check(CLI::IsMember({"text", "record"}));
  run->add_option("--params", params, "parameter overrides k=v");

  auto* list = app.add_subcommand("list", "list available scenarios");

  long long bound = 100, nbound = 100;
  bool no_positivity = false;
  auto* search = app.add_subcommand("search-prop54", "exhaustive disjoint-pair search");
  search->add_option("--bound", bound, "coefficient bound for |a|, |b|");
  search->add_option("--nbound", nbound, "upper bound for the Hirzebruch index n");
  search->add_flag("--no-positivity", no_positivity, "skip the Kaehler positivity filter");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return cmd_run(file, format, params);
  if (list->parsed()) return cmd_list();
  if (search->parsed()) return cmd_search(bound, nbound, !no_positivity);
  return 2;
}
