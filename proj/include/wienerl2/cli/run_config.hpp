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

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wienerl2/distribution.hpp"
#include "wienerl2/errors.hpp"
#include "wienerl2/oracles/monte_carlo.hpp"
#include "wienerl2/series.hpp"

namespace wienerl2::cli {

enum class Format { csv, json };
enum class Method { series, quadrature, monte_carlo };

inline std::string_view to_string(Format f) {
  return f == Format::csv ? "csv" : "json";
}

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::series:
      return "series";
    case Method::quadrature:
      return "quadrature";
    case Method::monte_carlo:
      return "monte_carlo";
  }
  return "series";
}

/// Evaluation grid MIN:MAX:COUNT[:log|:lin].
struct Grid {
  double min = 0.01;
  double max = 100.0;
  std::size_t count = 50;
  bool log = true;

  void validate() const {
    if (!std::isfinite(min) || !std::isfinite(max)) {
      throw ConfigError("grid bounds must be finite");
    }
    if (count < 1) throw ConfigError("grid count must be >= 1");
    if (count == 1 ? min > max : !(min < max)) {
      throw ConfigError("grid requires min < max");
    }
    if (!(min > 0.0)) throw ConfigError("grid points must be positive");
  }

  /// Points in increasing order. A single-point grid is {min}.
  [[nodiscard]] std::vector<double> points() const {
    validate();
    std::vector<double> pts(count);
    if (count == 1) {
      pts[0] = min;
      return pts;
    }
    const double denom = static_cast<double>(count - 1);
    const double ratio = max / min;
    for (std::size_t i = 0; i < count; ++i) {
      const double t = static_cast<double>(i) / denom;
      pts[i] = log ? min * std::pow(ratio, t) : min + (max - min) * t;
    }
    pts.back() = max;
    return pts;
  }

  [[nodiscard]] std::string spec() const;
};

inline double parse_double(std::string_view text, std::string_view what) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw ConfigError("invalid number for " + std::string(what) + ": '" + s +
                      "'");
  }
  return v;
}

inline std::uint64_t parse_unsigned(std::string_view text,
                                    std::string_view what) {
  const std::string s(text);
  char* end = nullptr;
  if (s.empty() || s.front() == '-') {
    throw ConfigError("invalid count for " + std::string(what) + ": '" + s +
                      "'");
  }
  const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size()) {
    throw ConfigError("invalid count for " + std::string(what) + ": '" + s +
                      "'");
  }
  return v;
}

inline Grid parse_grid(std::string_view text) {
  std::vector<std::string> parts;
  std::stringstream ss{std::string(text)};
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() < 3 || parts.size() > 4) {
    throw ConfigError("grid must be MIN:MAX:COUNT[:log]");
  }
  Grid g;
  g.min = parse_double(parts[0], "grid min");
  g.max = parse_double(parts[1], "grid max");
  g.count = parse_unsigned(parts[2], "grid count");
  g.log = false;
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      g.log = true;
    } else if (parts[3] != "lin" && parts[3] != "linear") {
      throw ConfigError("grid spacing must be 'log' or 'lin'");
    }
  }
  g.validate();
  return g;
}

inline std::string Grid::spec() const {
  std::ostringstream os;
  os.precision(17);
  os << min << ':' << max << ':' << count << (log ? ":log" : ":lin");
  return os.str();
}

inline Convention parse_convention(std::string_view s) {
  if (s == "paper") return Convention::paper;
  if (s == "cameron-martin" || s == "cameron_martin") {
    return Convention::cameron_martin;
  }
  throw ConfigError("convention must be 'paper' or 'cameron-martin'");
}

inline Format parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw ConfigError("format must be 'csv' or 'json'");
}

/// Everything a subcommand needs. Defaults: T = 1, paper convention,
/// eps = 1e-10, log grid [0.01, 100] x 50.
struct RunConfig {
  double T = 1.0;
  Convention convention = Convention::paper;
  double eps = 1e-10;
  std::optional<std::size_t> terms;
  Grid grid;
  Format format = Format::csv;
  std::uint64_t seed = 20260101;
  std::size_t paths = 100'000;
  std::size_t steps = 1024;
  std::string out;

  [[nodiscard]] ProcessParams process() const { return {T, convention}; }

  [[nodiscard]] TruncationControl truncation() const {
    if (terms) return TruncationControl::fixed_terms(*terms);
    return TruncationControl::tolerance(eps);
  }

  [[nodiscard]] McConfig monte_carlo() const {
    McConfig mc;
    mc.paths = paths;
    mc.steps = steps;
    mc.seed = seed;
    return mc;
  }

  void validate() const {
    if (!(std::isfinite(T) && T > 0.0)) throw ConfigError("T must be positive");
    if (terms) {
      if (*terms < 1) throw ConfigError("--terms must be >= 1");
    } else if (!(std::isfinite(eps) && eps > 0.0)) {
      throw ConfigError("--eps must be a finite positive number");
    }
    grid.validate();
    if (paths < 1) throw ConfigError("--paths must be >= 1");
    if (steps < 2) throw ConfigError("--steps must be >= 2");
  }

  /// Provenance block echoed into JSON output.
  [[nodiscard]] nlohmann::ordered_json echo() const {
    nlohmann::ordered_json j;
    j["T"] = T;
    j["convention"] = std::string(to_string(convention));
    if (terms) {
      j["terms"] = *terms;
    } else {
      j["eps"] = eps;
    }
    j["grid"] = grid.spec();
    j["seed"] = seed;
    j["paths"] = paths;
    j["steps"] = steps;
    return j;
  }
};

/// Overlay keys from a JSON config object. Recognised keys mirror the long
/// flag names: T, convention, eps, terms, grid, format, seed, paths, steps,
/// out.
inline void apply_json(RunConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "T") {
        cfg.T = value.get<double>();
      } else if (key == "convention") {
        cfg.convention = parse_convention(value.get<std::string>());
      } else if (key == "eps") {
        cfg.eps = value.get<double>();
        cfg.terms.reset();
      } else if (key == "terms") {
        const auto n = value.get<std::int64_t>();
        if (n < 1) throw ConfigError("terms must be >= 1");
        cfg.terms = static_cast<std::size_t>(n);
      } else if (key == "grid") {
        cfg.grid = parse_grid(value.get<std::string>());
      } else if (key == "format") {
        cfg.format = parse_format(value.get<std::string>());
      } else if (key == "seed") {
        cfg.seed = value.get<std::uint64_t>();
      } else if (key == "paths") {
        cfg.paths = value.get<std::size_t>();
      } else if (key == "steps") {
        cfg.steps = value.get<std::size_t>();
      } else if (key == "out") {
        cfg.out = value.get<std::string>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
}

inline void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  apply_json(cfg, j);
}

}  // namespace wienerl2::cli
