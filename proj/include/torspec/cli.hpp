#pragma once

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "torspec/json_io.hpp"

namespace torspec::cli {

enum class Command { weights, spectrum, levels, verify, info };
enum class OutputFormat { text, json };

struct CliConfig {
  Command command = Command::info;
  std::string group;
  std::string highest;
  std::string element;
  std::string epsilon;
  OutputFormat format = OutputFormat::text;
  Limits limits;
  std::uint64_t seed = 1;
  int max_level = 3;
  int height_bound = kLevelTableHeightBound;
  std::string check;
  std::string family;
  std::size_t rank = 0;
  Int dim_bound = 40;
  int depth = 1;
  std::size_t samples = 500;
};

enum ExitCode { kOk = 0, kFail = 1, kUsage = 2, kResource = 3, kInternal = 4 };

namespace detail {

inline const RootDatum& group_of(const CliConfig& cfg) {
  if (!cfg.group.empty()) return parse_group(cfg.group);
  const auto colon = cfg.highest.find(':');
  if (colon == std::string::npos) throw InvalidInput("--group is required unless --highest has a FAMILYRANK: prefix");
  return parse_group(cfg.highest.substr(0, colon));
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline TorusElement element_of(const RootDatum& d, const CliConfig& cfg) {
  if (!cfg.epsilon.empty() && !cfg.element.empty()) throw InvalidInput("give either --element or --epsilon, not both");
  if (!cfg.epsilon.empty()) return parse_epsilon_shorthand(d, cfg.epsilon);
  if (cfg.element.empty()) throw InvalidInput("spectrum needs --element or --epsilon");
  std::string text = cfg.element;
  const auto first = text.find_first_not_of(" \t\n");
  if (first == std::string::npos || text[first] != '{') {
    std::ifstream probe(text);
    if (!probe) return parse_epsilon_shorthand(d, text);
    text = slurp(cfg.element);
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("element JSON: ") + e.what());
  }
  return element_from_json(d, j);
}

inline void banner(std::ostream& out) { out << "# " << kValidityBanner << "\n"; }

inline std::size_t width(const Json& rows, std::size_t col) {
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r[col].get<std::string>().size());
  return w;
}

inline void render_weights(const Json& j, std::ostream& out) {
  out << "highest " << j["highest"].get<std::string>() << "  dim " << j["dim"].get<Int>() << "\n";
  const std::size_t w = width(j["entries"], 0);
  for (const auto& e : j["entries"])
    out << std::left << std::setw(static_cast<int>(w)) << e[0].get<std::string>() << "  " << e[1].get<Int>() << "\n";
  banner(out);
}

inline void render_spectrum(const Json& j, std::ostream& out) {
  out << "element " << j["element"].get<std::string>() << " on " << j["highest"].get<std::string>() << "  dim "
      << j["dim"].get<Int>() << "\n";
  const std::size_t w = width(j["entries"], 0);
  for (const auto& e : j["entries"])
    out << std::left << std::setw(static_cast<int>(w)) << e[0].get<std::string>() << "  " << e[1].get<Int>() << "\n";
  out << "classification " << j["classification"].get<std::string>();
  if (!j["heavy_value"].is_null())
    out << " (heavy value " << j["heavy_value"].get<std::string>() << ", multiplicity " << j["max_multiplicity"].get<Int>() << ")";
  out << "\n";
  banner(out);
}

inline void render_levels(const Json& j, std::ostream& out) {
  out << j["family"].get<std::string>() << j["rank"].get<std::size_t>() << "\n";
  for (const auto& [level, ws] : j["levels"].items()) {
    out << "level " << level << ":";
    for (const auto& w : ws) out << " " << w.get<std::string>();
    out << "\n";
  }
  banner(out);
}

inline void render_report(const Json& j, std::ostream& out) {
  out << "check " << j["check_id"].get<std::string>() << ": " << j["status"].get<std::string>() << "\n";
  for (const auto& n : j["notes"]) out << "# " << n.get<std::string>() << "\n";
  for (const auto& c : j["cases"]) {
    out << "[" << c["status"].get<std::string>() << "] " << c["label"].get<std::string>();
    if (!c["expected"].get<std::string>().empty()) out << "\n    expected " << c["expected"].get<std::string>();
    out << "\n    actual   " << c["actual"].get<std::string>() << "\n";
  }
  banner(out);
}

inline Json info_json(const RootDatum& d, Int dim_bound) {
  Json fundamental = Json::array();
  for (std::size_t i = 0; i < d.rank; ++i) {
    const Weight w = d.omega(i);
    fundamental.push_back(Json{{"weight", format_coords(w)},
                               {"dim", weyl_dimension(w).str()},
                               {"level", is_minuscule(w) ? 1 : weight_level(w)}});
  }
  Json small = Json::array();
  for (const Weight& w : dominant_weights_up_to_dimension(d, dim_bound))
    small.push_back(Json::array({format_coords(w), weyl_dimension_int(w)}));
  return Json{{"group", d.name()},
              {"rank", d.rank},
              {"cartan", d.cartan},
              {"positive_roots", d.positive_roots.size()},
              {"weyl_group_order", d.weyl_group_order()},
              {"highest_root", format_coords(d.highest_root)},
              {"highest_short_root", format_coords(d.highest_short_root)},
              {"fundamental", std::move(fundamental)},
              {"modules_up_to_dim", std::move(small)},
              {"dim_bound", dim_bound},
              {"banner", kValidityBanner}};
}

inline void render_info(const Json& j, std::ostream& out) {
  out << j["group"].get<std::string>() << "  rank " << j["rank"].get<std::size_t>() << "  positive roots "
      << j["positive_roots"].get<std::size_t>() << "  |W| " << j["weyl_group_order"].get<Int>() << "\n";
  out << "cartan";
  for (const auto& row : j["cartan"]) out << " " << row.dump();
  out << "\nhighest root " << j["highest_root"].get<std::string>() << "  highest short root "
      << j["highest_short_root"].get<std::string>() << "\n";
  for (const auto& f : j["fundamental"])
    out << "fundamental " << f["weight"].get<std::string>() << "  dim " << f["dim"].get<std::string>() << "  level "
        << f["level"].get<int>() << "\n";
  out << "modules of dimension <= " << j["dim_bound"].get<Int>() << ":";
  for (const auto& m : j["modules_up_to_dim"]) out << " " << m[0].get<std::string>() << "(" << m[1].get<Int>() << ")";
  out << "\n";
  banner(out);
}

inline VerificationReport run_check(const CliConfig& cfg) {
  auto need_group = [&]() -> const RootDatum& {
    if (cfg.family.size() != 1) throw InvalidInput("--family must be one of A-G");
    const auto f = family_from_char(cfg.family[0]);
    if (!f) throw InvalidInput("unknown family '" + cfg.family + "'");
    if (cfg.rank == 0) throw InvalidInput("--rank is required for --check " + cfg.check);
    return root_datum(*f, cfg.rank);
  };
  if (cfg.check == "level-table") {
    const RootDatum& d = need_group();
    return verify_level_table(d.family, d.rank);
  }
  if (cfg.check == "witnesses") return verify_witnesses();
  if (cfg.check == "c99") return verify_almost_simple_sweep(need_group(), cfg.dim_bound, cfg.depth, cfg.seed);
  if (cfg.check == "bounds") return verify_multiplicity_bounds(need_group(), cfg.dim_bound, cfg.seed, cfg.depth);
  if (cfg.check == "natural") {
    const RootDatum& d = need_group();
    return verify_natural_module_regularity(d.family, d.rank, cfg.samples, cfg.seed);
  }
  throw InvalidInput("unknown check '" + cfg.check + "'");
}

inline int dispatch(const CliConfig& cfg, std::ostream& out) {
  const bool json = cfg.format == OutputFormat::json;
  auto emit = [&](const Json& j, void (*render)(const Json&, std::ostream&)) {
    if (json) out << j.dump(2) << "\n";
    else render(j, out);
  };
  switch (cfg.command) {
    case Command::weights: {
      const RootDatum& d = group_of(cfg);
      const Weight lambda = parse_weight(d, cfg.highest);
      emit(to_json(*cached_multiplicities(lambda, cfg.limits)), render_weights);
      return kOk;
    }
    case Command::spectrum: {
      const RootDatum& d = group_of(cfg);
      const Weight lambda = parse_weight(d, cfg.highest);
      const TorusElement s = element_of(d, cfg);
      emit(to_json(spectrum(s, lambda, cfg.limits)), render_spectrum);
      return kOk;
    }
    case Command::levels: {
      const RootDatum& d = parse_group(cfg.group.empty() ? throw InvalidInput("levels needs --group") : cfg.group);
      emit(level_table_json(d, level_sets(d, cfg.max_level, cfg.height_bound)), render_levels);
      return kOk;
    }
    case Command::verify: {
      const VerificationReport r = run_check(cfg);
      emit(to_json(r), render_report);
      return r.status == CheckStatus::Fail ? kFail : kOk;
    }
    case Command::info: {
      if (cfg.group.empty()) throw InvalidInput("info needs --group");
      emit(info_json(parse_group(cfg.group), cfg.dim_bound), render_info);
      return kOk;
    }
  }
  return kInternal;
}

}  // namespace detail

/// Runs the tool on the arguments after the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Eigenvalue spectra of semisimple torus elements in irreducible modules", "torspec"};
  app.require_subcommand(1, 1);
  bool json = false;
  auto group_opts = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "group such as A3, C2, G2");
    sub->add_option("--orbit-bound", cfg.limits.orbit_bound, "largest Weyl orbit to enumerate")->check(CLI::PositiveNumber);
    sub->add_option("--dim-bound", cfg.limits.dimension_bound, "largest module dimension to expand")->check(CLI::PositiveNumber);
  };
  auto* weights = app.add_subcommand("weights", "weights of V(highest) with multiplicities");
  group_opts(weights);
  weights->add_option("--highest", cfg.highest, "highest weight, [c1,...] or A2:[c1,...]")->required();
  auto* spec = app.add_subcommand("spectrum", "spectrum of a torus element on V(highest)");
  group_opts(spec);
  spec->add_option("--highest", cfg.highest, "highest weight")->required();
  spec->add_option("--element", cfg.element, "element as JSON, a JSON file, or epsilon shorthand");
  spec->add_option("--epsilon", cfg.epsilon, "epsilon shorthand such as a,a,-1/a,-1/a");
  auto* levels = app.add_subcommand("levels", "weights grouped by level");
  levels->add_option("--group", cfg.group, "group")->required();
  levels->add_option("--max-level", cfg.max_level, "largest level to list")->check(CLI::PositiveNumber);
  levels->add_option("--bound", cfg.height_bound, "largest coordinate sum examined")->check(CLI::NonNegativeNumber);
  auto* verify = app.add_subcommand("verify", "run a verification check");
  verify->add_option("--check", cfg.check, "level-table|witnesses|c99|bounds|natural")
      ->required()
      ->check(CLI::IsMember({"level-table", "witnesses", "c99", "bounds", "natural"}));
  verify->add_option("--family", cfg.family, "A-G");
  verify->add_option("--rank", cfg.rank, "rank")->check(CLI::PositiveNumber);
  verify->add_option("--dim-bound", cfg.dim_bound, "largest module dimension swept")->check(CLI::PositiveNumber);
  verify->add_option("--depth", cfg.depth, "root-kernel stratum depth")->check(CLI::Range(1, 2));
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--samples", cfg.samples, "samples for randomized checks")->check(CLI::PositiveNumber);
  auto* info = app.add_subcommand("info", "root datum summary");
  info->add_option("--group", cfg.group, "group")->required();
  info->add_option("--dim-bound", cfg.dim_bound, "list modules up to this dimension")->check(CLI::PositiveNumber);
  for (auto* sub : {weights, spec, levels, verify, info}) sub->add_flag("--json", json, "emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (weights->parsed()) cfg.command = Command::weights;
  else if (spec->parsed()) cfg.command = Command::spectrum;
  else if (levels->parsed()) cfg.command = Command::levels;
  else if (verify->parsed()) cfg.command = Command::verify;
  else cfg.command = Command::info;
  cfg.format = json ? OutputFormat::json : OutputFormat::text;

  try {
    return detail::dispatch(cfg, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const ArithmeticOverflow& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace torspec::cli
