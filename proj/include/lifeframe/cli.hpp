// Copyright 2026 The lifeframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "lifeframe/catalog.hpp"
#include "lifeframe/frame_kinematics.hpp"
#include "lifeframe/life_engine.hpp"
#include "lifeframe/pattern_io.hpp"
#include "lifeframe/ship_detector.hpp"
#include "lifeframe/verify.hpp"

// Command-line front end. run_cli() is the whole program minus process
// plumbing so tests can drive it with captured streams.
namespace lifeframe::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

enum class Format { table, kv };

inline constexpr const char* kFactorEnv = "LIFEFRAME_EXPLOSION_FACTOR";
inline constexpr const char* kExtentEnv = "LIFEFRAME_EXPLOSION_EXTENT";

struct UsageError : Error {
  using Error::Error;
};

/// Default bound, overridden by the environment. 0 disables a limit.
inline ExplosionBound explosion_bound_from_env() {
  ExplosionBound bound;
  auto read = [](const char* name, auto& field) {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0') return;
    try {
      long long v = std::stoll(value);
      if (v < 0) throw std::invalid_argument("negative");
      field = static_cast<std::remove_reference_t<decltype(field)>>(v == 0 ? std::numeric_limits<std::int64_t>::max() : v);
    } catch (const std::exception&) {
      throw UsageError(std::string(name) + " must be a non-negative integer");
    }
  };
  read(kFactorEnv, bound.population_factor);
  read(kExtentEnv, bound.max_extent);
  return bound;
}

inline PatternDocument load_pattern(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_pattern(buf.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

inline Rational parse_fraction(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

inline std::string offset_str(const Offset& o) { return "(" + std::to_string(o.dx) + "," + std::to_string(o.dy) + ")"; }
inline std::string vec_str(const Velocity2& v) { return "(" + v.vx.str() + "," + v.vy.str() + ")"; }

inline std::string tangent_str(const std::optional<Tangent>& t, Format f) {
  if (!t) return "none";
  if (t->vertical()) return "vertical";
  return f == Format::kv ? t->value->fraction_str() : t->value->str();
}

inline std::string degrees_str(double deg) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << deg;
  return os.str();
}

// ---------------------------------------------------------------------------

struct RunOptions {
  std::string file;
  std::uint64_t generations = 0;
  std::string out;
  Format format = Format::table;
};

inline int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
  PatternDocument doc = load_pattern(opt.file);
  ExplosionBound bound = explosion_bound_from_env();
  Pattern start = doc.pattern();
  Pattern cur = start;
  for (std::uint64_t g = 0; g < opt.generations; ++g) {
    cur = step(cur);
    if (bound.exceeded(start.size(), cur)) {
      err << "explosion bound exceeded at generation " << cur.generation() << " (population " << cur.size()
          << "); raise " << kFactorEnv << " / " << kExtentEnv << "\n";
      return kCheckFailed;
    }
  }

  PatternDocument result = PatternDocument::from_pattern(cur, doc.name);
  result.comments = doc.comments;
  bool plaintext = opt.out.size() >= 6 && opt.out.substr(opt.out.size() - 6) == ".cells";
  std::string text = plaintext ? emit_plaintext(result) : emit_rle(result) + "\n";

  std::ostringstream summary;
  if (opt.format == Format::kv) {
    summary << "generation=" << cur.generation() << "\npopulation=" << cur.size() << "\n";
    if (!cur.empty()) {
      Box b = bounding_box(cur);
      summary << "bbox_min_x=" << b.min_x << "\nbbox_min_y=" << b.min_y << "\nbbox_max_x=" << b.max_x << "\nbbox_max_y=" << b.max_y << "\n";
    }
  } else {
    summary << "generation=" << cur.generation() << " population=" << cur.size() << " bbox=";
    if (cur.empty()) {
      summary << "none";
    } else {
      Box b = bounding_box(cur);
      summary << "(" << b.min_x << "," << b.min_y << ")-(" << b.max_x << "," << b.max_y << ")";
    }
    summary << "\n";
  }

  if (opt.out.empty()) {
    out << text;
    err << summary.str();
  } else {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + opt.out + "'");
    file << text;
    out << summary.str();
  }
  return kOk;
}

struct DetectOptions {
  std::string file;
  std::uint64_t max_period = 256;
  Format format = Format::table;
};

inline void print_report(const ShipReport& r, Format format, std::ostream& out) {
  if (format == Format::kv) {
    out << "kind=" << to_string(r.kind) << "\nperiod=" << r.period << "\ndx=" << r.displacement.dx << "\ndy=" << r.displacement.dy
        << "\nvx=" << r.velocity.vx.fraction_str() << "\nvy=" << r.velocity.vy.fraction_str() << "\nspeed=" << r.speed.fraction_str()
        << "\n";
    return;
  }
  out << to_string(r.kind) << " P=" << r.period;
  if (r.kind == ShipKind::ship) {
    out << " d=" << offset_str(r.displacement) << " v=" << vec_str(r.velocity) << " speed=" << r.speed;
  }
  out << "\n";
}

inline int cmd_detect(const DetectOptions& opt, std::ostream& out) {
  Pattern p = load_pattern(opt.file).pattern();
  if (p.empty()) throw UsageError(opt.file + ": pattern is empty");
  Detection d = detect_ship(p, opt.max_period, explosion_bound_from_env());
  if (const auto* r = std::get_if<ShipReport>(&d)) {
    print_report(*r, opt.format, out);
    return kOk;
  }
  const auto& np = std::get<NotPeriodic>(d);
  std::string reason = np.exploded ? "exploded" : np.died ? "died" : "no-recurrence";
  if (opt.format == Format::kv) {
    out << "kind=not-periodic\nreason=" << reason << "\ngenerations=" << np.generations_examined << "\n";
  } else {
    out << "not-periodic (" << reason << " after " << np.generations_examined << " generations)\n";
  }
  return kOk;
}

struct ComposeOptions {
  std::string law = "life";
  std::string v1 = "0";
  std::string v2x = "0";
  std::string v2y = "0";
  Format format = Format::table;
};

inline int cmd_compose(const ComposeOptions& opt, std::ostream& out) {
  Law law = parse_law(opt.law);
  CompositionInput in{parse_fraction(opt.v1, "--v1"), {parse_fraction(opt.v2x, "--v2x"), parse_fraction(opt.v2y, "--v2y")}};
  CompositionResult res = compose(law, in);

  if (opt.format == Format::kv) {
    out << "law=" << to_string(law) << "\nv1=" << in.v1.fraction_str() << "\nv2x=" << in.bullet.vx.fraction_str()
        << "\nv2y=" << in.bullet.vy.fraction_str() << "\nv12x=" << res.v12.vx.fraction_str() << "\nv12y=" << res.v12.vy.fraction_str()
        << "\nspeed=" << chebyshev_speed(res.v12).fraction_str() << "\ntan_chi=" << tangent_str(res.tan_chi, Format::kv) << "\n";
    if (res.tan_chi) out << "chi_deg_display=" << degrees_str(direction_degrees(res.v12)) << "\n";
  } else {
    out << "law=" << to_string(law) << " v1=" << in.v1 << " bullet=" << vec_str(in.bullet) << "\n";
    out << "v12x=" << res.v12.vx << " v12y=" << res.v12.vy << " speed=" << chebyshev_speed(res.v12) << "\n";
    out << "tan_chi=" << tangent_str(res.tan_chi, Format::table);
    if (res.tan_chi) out << " chi=" << degrees_str(direction_degrees(res.v12)) << " deg (display only)";
    out << "\n";
  }

  for (Law other : {Law::life, Law::galilean, Law::lorentz}) {
    std::string v12x;
    std::string v12y;
    try {
      CompositionResult c = compose(other, in);
      v12x = opt.format == Format::kv ? c.v12.vx.fraction_str() : c.v12.vx.str();
      v12y = opt.format == Format::kv ? c.v12.vy.fraction_str() : c.v12.vy.str();
    } catch (const IrrationalError&) {
      v12x = v12y = "irrational";
    }
    if (opt.format == Format::kv) {
      out << "compare_" << to_string(other) << "_v12x=" << v12x << "\ncompare_" << to_string(other) << "_v12y=" << v12y << "\n";
    } else {
      out << "  " << std::left << std::setw(9) << to_string(other) << " v12=(" << v12x << "," << v12y << ")\n";
    }
  }
  return kOk;
}

struct VerifyOptions {
  std::string suite = "all";
  Format format = Format::table;
};

inline void print_suite(const verify::SuiteReport& r, Format format, std::ostream& out) {
  for (const auto& c : r.checks) {
    if (format == Format::kv) {
      out << "check=" << r.suite << "/" << c.name << "\nresult=" << (c.passed ? "pass" : "fail") << "\ndetail=" << c.detail << "\n";
    } else {
      out << (c.passed ? "PASS " : "FAIL ") << r.suite << ": " << c.name << " -- " << c.detail << "\n";
    }
  }
  for (const auto& f : r.findings) {
    if (format == Format::kv) out << "finding=" << r.suite << "/" << f.name << "\ndetail=" << f.detail << "\n";
    else out << "FINDING " << r.suite << ": " << f.name << " -- " << f.detail << "\n";
  }
}

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  std::vector<std::string_view> suites;
  if (opt.suite == "all") {
    suites.assign(std::begin(verify::kSuites), std::end(verify::kSuites));
  } else {
    bool known = std::find(std::begin(verify::kSuites), std::end(verify::kSuites), opt.suite) != std::end(verify::kSuites);
    if (!known) throw UsageError("unknown suite '" + opt.suite + "'");
    // The catalog is always re-measured first.
    suites.emplace_back("catalog");
    if (opt.suite != "catalog") suites.emplace_back(opt.suite);
  }
  std::size_t passed = 0;
  std::size_t failed = 0;
  for (auto name : suites) {
    verify::SuiteReport r = verify::run_suite(name);
    print_suite(r, opt.format, out);
    for (const auto& c : r.checks) (c.passed ? passed : failed) += 1;
  }
  if (opt.format == Format::kv) out << "passed=" << passed << "\nfailed=" << failed << "\n";
  else out << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? kOk : kCheckFailed;
}

struct CatalogOptions {
  bool list = false;
  std::string emit;
  Format format = Format::table;
};

inline int cmd_catalog(const CatalogOptions& opt, std::ostream& out) {
  if (!opt.emit.empty()) {
    out << catalog_entry(opt.emit).rle << "\n";
    return kOk;
  }
  for (const auto& e : catalog()) {
    Pattern p = e.pattern();
    if (opt.format == Format::kv) {
      out << "name=" << e.name << "\npopulation=" << p.size();
      if (e.expected) out << "\nperiod=" << e.expected->period << "\ndx=" << e.expected->displacement.dx << "\ndy=" << e.expected->displacement.dy;
      out << "\n";
      continue;
    }
    out << std::left << std::setw(11) << e.name << " pop=" << std::setw(4) << p.size();
    if (e.expected) {
      auto period = static_cast<std::int64_t>(e.expected->period);
      Velocity2 v{Rational(e.expected->displacement.dx, period), Rational(e.expected->displacement.dy, period)};
      out << " P=" << e.expected->period << " d=" << offset_str(e.expected->displacement) << " v=" << vec_str(v)
          << " speed=" << chebyshev_speed(v);
    }
    out << "  " << e.note << "\n";
  }
  return kOk;
}

struct EmissionsOptions {
  std::string file;
  std::string builtin;
  std::uint64_t horizon = 300;
  std::string v1 = "0";
  Format format = Format::table;
};

/*!
 * Emission census for a pattern. With --v1 the carrier is taken to move
 * along +x at v1, and each event is also reported in the carrier's frame.
 */
inline int cmd_emissions(const EmissionsOptions& opt, std::ostream& out) {
  if (opt.file.empty() == opt.builtin.empty()) throw UsageError("give exactly one of a pattern file or --builtin NAME");
  Pattern p = opt.file.empty() ? catalog_entry(opt.builtin).pattern() : load_pattern(opt.file).pattern();
  Rational v1 = parse_fraction(opt.v1, "--v1");
  if (v1 < Rational(0) || v1 >= Rational(1)) throw UsageError("--v1 must satisfy 0 <= v1 < 1");
  std::vector<ShipReport> ships = emission_catalog();
  std::vector<EmissionEvent> events = detect_emissions(p, opt.horizon, ships);

  bool consistent = true;
  for (const auto& e : events) {
    std::string name(kEmissionShips[e.ship]);
    std::optional<Velocity2> embryo;
    bool round_trip = false;
    try {
      embryo = invert_oblique(v1, e.ground_velocity);
      round_trip = compose_oblique({v1, *embryo}).v12 == e.ground_velocity;
    } catch (const DomainError&) {
    }
    consistent = consistent && round_trip;
    if (opt.format == Format::kv) {
      out << "ship=" << name << "\nbirth=" << e.birth_generation << "\nx=" << e.first_sighting.x << "\ny=" << e.first_sighting.y
          << "\nvx=" << e.ground_velocity.vx.fraction_str() << "\nvy=" << e.ground_velocity.vy.fraction_str()
          << "\nconfirmed=" << e.confirmed_generation << "\n";
      if (embryo) out << "embryo_vx=" << embryo->vx.fraction_str() << "\nembryo_vy=" << embryo->vy.fraction_str() << "\n";
      out << "round_trip=" << (round_trip ? "ok" : "fail") << "\n";
    } else {
      out << name << " birth=" << e.birth_generation << " at=(" << e.first_sighting.x << "," << e.first_sighting.y
          << ") v=" << vec_str(e.ground_velocity) << " confirmed=" << e.confirmed_generation;
      if (v1 != Rational(0)) out << " embryo=" << (embryo ? vec_str(*embryo) : std::string("superluminal"));
      out << (round_trip ? "" : " INCONSISTENT") << "\n";
    }
  }
  if (opt.format == Format::kv) out << "events=" << events.size() << "\n";
  else out << events.size() << " emission events\n";
  return consistent ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Velocity composition and ship kinematics on the Life lattice", "lifeframe"};
  app.require_subcommand(1);
  const std::map<std::string, Format> formats{{"table", Format::table}, {"kv", Format::kv}};
  auto add_format = [&](CLI::App* sub, Format& target) {
    sub->add_option("--format", target, "Output format: table or kv (key=value)")->transform(CLI::CheckedTransformer(formats));
  };

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Evolve a pattern and write the result as RLE");
  run_cmd->add_option("file", run.file, "Pattern file (RLE or plaintext)")->required();
  run_cmd->add_option("--gens", run.generations, "Generations to run")->required();
  run_cmd->add_option("--out", run.out, "Output file (.cells writes plaintext); default stdout");
  add_format(run_cmd, run.format);

  DetectOptions detect;
  auto* detect_cmd = app.add_subcommand("detect", "Measure period, displacement and velocity");
  detect_cmd->add_option("file", detect.file, "Pattern file")->required();
  detect_cmd->add_option("--max-period", detect.max_period, "Largest period to look for")->check(CLI::PositiveNumber);
  add_format(detect_cmd, detect.format);

  ComposeOptions compose_opt;
  auto* compose_cmd = app.add_subcommand("compose", "Compose a carrier velocity with a bullet velocity");
  compose_cmd->add_option("--law", compose_opt.law, "life, galilean or lorentz")->check(CLI::IsMember({"life", "galilean", "lorentz"}));
  compose_cmd->add_option("--v1", compose_opt.v1, "Carrier velocity along +x, as p/q")->required();
  compose_cmd->add_option("--v2x", compose_opt.v2x, "Bullet x velocity in the carrier frame, as p/q");
  compose_cmd->add_option("--v2y", compose_opt.v2y, "Bullet y velocity in the carrier frame, as p/q");
  add_format(compose_cmd, compose_opt.format);

  VerifyOptions verify_opt;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", verify_opt.suite, "all, catalog, parallel, oblique, oracle, deviation or emissions");
  add_format(verify_cmd, verify_opt.format);

  CatalogOptions catalog_opt;
  auto* catalog_cmd = app.add_subcommand("catalog", "List or emit built-in patterns");
  auto* list_flag = catalog_cmd->add_flag("--list", catalog_opt.list, "List entries");
  auto* emit_opt = catalog_cmd->add_option("--emit", catalog_opt.emit, "Print the RLE of one entry");
  list_flag->excludes(emit_opt);
  add_format(catalog_cmd, catalog_opt.format);

  EmissionsOptions emissions;
  auto* emissions_cmd = app.add_subcommand("emissions", "Detect ships escaping from a pattern");
  emissions_cmd->add_option("file", emissions.file, "Pattern file");
  emissions_cmd->add_option("--builtin", emissions.builtin, "Use a catalog entry instead of a file");
  emissions_cmd->add_option("--horizon", emissions.horizon, "Generations to simulate");
  emissions_cmd->add_option("--v1", emissions.v1, "Carrier velocity along +x, as p/q");
  add_format(emissions_cmd, emissions.format);

  std::vector<const char*> argv{"lifeframe"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run, out, err);
    if (*detect_cmd) return cmd_detect(detect, out);
    if (*compose_cmd) return cmd_compose(compose_opt, out);
    if (*verify_cmd) return cmd_verify(verify_opt, out);
    if (*catalog_cmd) return cmd_catalog(catalog_opt, out);
    if (*emissions_cmd) return cmd_emissions(emissions, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace lifeframe::cli
