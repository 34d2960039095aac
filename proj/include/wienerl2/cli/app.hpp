// Copyright 2026 The wienerl2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Precedence: flags > --config file > defaults.
// Exit codes: 0 success, 1 a validation check failed, 2 usage or config
// error (including an unreachable tolerance).

#pragma once

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "wienerl2/cli/commands.hpp"
#include "wienerl2/cli/run_config.hpp"
#include "wienerl2/cli/validate.hpp"

namespace wienerl2::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct FlagValues {
  std::optional<std::string> config;
  std::optional<double> T;
  std::optional<std::string> convention;
  std::optional<double> eps;
  std::optional<std::size_t> terms;
  std::optional<std::string> grid;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> paths;
  std::optional<std::size_t> steps;
  std::optional<std::string> out;
};

inline void add_flags(CLI::App& cmd, FlagValues& f) {
  cmd.add_option("--config", f.config, "JSON config file (flags override it)");
  cmd.add_option("--T", f.T, "time horizon T > 0 (default 1)");
  cmd.add_option("--convention", f.convention,
                 "paper: E exp(-lambda X) = cosh(sqrt(lambda) T)^-1/2\n"
                 "cameron-martin: X = J, the integral of w^2\n"
                 "(default paper)");
  auto* eps = cmd.add_option("--eps", f.eps,
                             "target absolute error (default 1e-10)");
  auto* terms = cmd.add_option("--terms", f.terms, "fixed number of terms N");
  eps->excludes(terms);
  cmd.add_option("--grid", f.grid,
                 "MIN:MAX:COUNT[:log] (default 0.01:100:50:log)");
  cmd.add_option("--format", f.format, "csv | json (default csv)");
  cmd.add_option("--seed", f.seed, "Monte Carlo seed");
  cmd.add_option("--paths", f.paths, "Monte Carlo path count");
  cmd.add_option("--steps", f.steps, "time steps per path");
  cmd.add_option("--out", f.out, "write output to FILE instead of stdout");
}

inline RunConfig resolve(const FlagValues& f) {
  RunConfig cfg;
  if (f.config) apply_config_file(cfg, *f.config);
  if (f.T) cfg.T = *f.T;
  if (f.convention) cfg.convention = parse_convention(*f.convention);
  if (f.eps) {
    cfg.eps = *f.eps;
    cfg.terms.reset();
  }
  if (f.terms) cfg.terms = *f.terms;
  if (f.grid) cfg.grid = parse_grid(*f.grid);
  if (f.format) cfg.format = parse_format(*f.format);
  if (f.seed) cfg.seed = *f.seed;
  if (f.paths) cfg.paths = *f.paths;
  if (f.steps) cfg.steps = *f.steps;
  if (f.out) cfg.out = *f.out;
  cfg.validate();
  return cfg;
}

inline void diagnose(std::ostream& err, const std::string& msg) {
  const bool color = std::getenv("NO_COLOR") == nullptr && ::isatty(2) != 0 &&
                     &err == &std::cerr;
  if (color) {
    err << "\x1b[31merror:\x1b[0m " << msg << '\n';
  } else {
    err << "error: " << msg << '\n';
  }
}

inline void emit(const std::string& text, const RunConfig& cfg,
                 std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw ConfigError("cannot write '" + cfg.out + "'");
  file << text;
}

/// Parses argv and runs one subcommand.
inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Distribution of the squared L2 norm of a Wiener path"};
  app.name("wienerl2");
  app.require_subcommand(1);
  FlagValues flags;
  auto* density = app.add_subcommand("density", "density table f(x) of X");
  auto* cdf_cmd = app.add_subcommand("cdf", "CDF table Pr{X <= c}");
  auto* tail = app.add_subcommand("tail", "tail table Pr{X > c}");
  auto* table = app.add_subcommand("table", "density, cdf and tail together");
  auto* validate = app.add_subcommand("validate", "run oracle cross-checks");
  for (auto* sub : {density, cdf_cmd, tail, table, validate}) {
    add_flags(*sub, flags);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    diagnose(err, e.what());
    return kExitUsage;
  }

  try {
    const RunConfig cfg = resolve(flags);
    if (validate->parsed()) {
      const ValidationReport rep = cmd_validate(cfg);
      emit(render(rep, cfg), cfg, out);
      if (!rep.passed()) {
        diagnose(err, "one or more validation checks failed");
        return kExitCheckFailed;
      }
      return kExitOk;
    }
    if (density->parsed()) {
      emit(render(cmd_density(cfg), false, cfg), cfg, out);
    } else if (cdf_cmd->parsed()) {
      emit(render(cmd_cdf(cfg), false, cfg), cfg, out);
    } else if (tail->parsed()) {
      emit(render(cmd_tail(cfg), false, cfg), cfg, out);
    } else {
      emit(render(cmd_table(cfg), true, cfg), cfg, out);
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    diagnose(err, e.what());
    return kExitUsage;
  } catch (const DomainError& e) {
    diagnose(err, e.what());
    return kExitUsage;
  } catch (const IterationLimitError& e) {
    diagnose(err, e.what());
    return kExitUsage;
  } catch (const AccuracyError& e) {
    diagnose(err, e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    diagnose(err, e.what());
    return kExitCheckFailed;
  }
}

}  // namespace wienerl2::cli
