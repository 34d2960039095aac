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

// Table-producing subcommands and their CSV / JSON rendering.
//
// CSV schema (density, cdf, tail):
//   input,value,error_bound,terms_used,method
// CSV schema (table):
//   input,quantity,value,error_bound,terms_used,method
// Reals are written with 17 significant digits. JSON output is
//   {"config": {...}, "records": [{"input": .., "value": .., ...}, ...]}
// with the same field names.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wienerl2/cli/run_config.hpp"
#include "wienerl2/distribution.hpp"

namespace wienerl2::cli {

struct OutputRecord {
  double input = 0.0;
  double value = 0.0;
  double error_bound = 0.0;
  std::size_t terms_used = 1;
  Method method = Method::series;
  std::string quantity;  // set by `table` only
};

inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline OutputRecord density_record(double x, const RunConfig& cfg) {
  const BoundedValue f = density_f(x, cfg.process(), cfg.truncation());
  return {x, f.value, f.error_bound, f.terms_used, Method::series, {}};
}

inline OutputRecord cdf_record(double c, const RunConfig& cfg) {
  const BoundedValue r = cdf_prob(TailQuery(c), cfg.process(), cfg.truncation());
  return {c, r.value, r.error_bound, r.terms_used, Method::series, {}};
}

inline OutputRecord tail_record(double c, const RunConfig& cfg) {
  const TailResult t = tail_prob(TailQuery(c), cfg.process(), cfg.truncation());
  return {c, t.probability, t.error_bound, t.terms_used, Method::series, {}};
}

inline std::vector<OutputRecord> cmd_density(const RunConfig& cfg) {
  cfg.validate();
  std::vector<OutputRecord> out;
  for (double x : cfg.grid.points()) out.push_back(density_record(x, cfg));
  return out;
}

/// Running max (or min) over records with ascending inputs. Each point is
/// evaluated on its own N, so neighbours can cross inside their error bars.
/// The true cdf is monotone, so a replaced value a_{i-1} still lies within
/// max(e_i, e_{i-1}) of the truth at i; the bound is widened to that.
inline void enforce_monotone(std::vector<OutputRecord>& records,
                             bool increasing) {
  for (std::size_t i = 1; i < records.size(); ++i) {
    const OutputRecord& prev = records[i - 1];
    OutputRecord& cur = records[i];
    const bool crosses =
        increasing ? cur.value < prev.value : cur.value > prev.value;
    if (crosses) {
      cur.value = prev.value;
      cur.error_bound = std::max(cur.error_bound, prev.error_bound);
    }
  }
}

inline std::vector<OutputRecord> cmd_cdf(const RunConfig& cfg) {
  cfg.validate();
  std::vector<OutputRecord> out;
  for (double c : cfg.grid.points()) out.push_back(cdf_record(c, cfg));
  enforce_monotone(out, true);
  return out;
}

inline std::vector<OutputRecord> cmd_tail(const RunConfig& cfg) {
  cfg.validate();
  std::vector<OutputRecord> out;
  for (double c : cfg.grid.points()) out.push_back(tail_record(c, cfg));
  enforce_monotone(out, false);
  return out;
}

/// density, cdf and tail at every grid point, tagged by `quantity`.
inline std::vector<OutputRecord> cmd_table(const RunConfig& cfg) {
  cfg.validate();
  const std::vector<double> grid = cfg.grid.points();
  const std::vector<OutputRecord> cdfs = cmd_cdf(cfg);
  const std::vector<OutputRecord> tails = cmd_tail(cfg);
  std::vector<OutputRecord> out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out.push_back(density_record(grid[i], cfg));
    out.back().quantity = "density";
    out.push_back(cdfs[i]);
    out.back().quantity = "cdf";
    out.push_back(tails[i]);
    out.back().quantity = "tail";
  }
  return out;
}

inline std::string render_csv(const std::vector<OutputRecord>& records,
                              bool with_quantity) {
  std::string s = with_quantity
                      ? "input,quantity,value,error_bound,terms_used,method\n"
                      : "input,value,error_bound,terms_used,method\n";
  for (const auto& r : records) {
    s += format_real(r.input);
    s += ',';
    if (with_quantity) {
      s += r.quantity;
      s += ',';
    }
    s += format_real(r.value);
    s += ',';
    s += format_real(r.error_bound);
    s += ',';
    s += std::to_string(r.terms_used);
    s += ',';
    s += to_string(r.method);
    s += '\n';
  }
  return s;
}

inline std::string render_json(const std::vector<OutputRecord>& records,
                               bool with_quantity, const RunConfig& cfg) {
  nlohmann::ordered_json doc;
  doc["config"] = cfg.echo();
  auto& arr = doc["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["input"] = r.input;
    if (with_quantity) j["quantity"] = r.quantity;
    j["value"] = r.value;
    j["error_bound"] = r.error_bound;
    j["terms_used"] = r.terms_used;
    j["method"] = std::string(to_string(r.method));
    arr.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

inline std::string render(const std::vector<OutputRecord>& records,
                          bool with_quantity, const RunConfig& cfg) {
  return cfg.format == Format::csv ? render_csv(records, with_quantity)
                                   : render_json(records, with_quantity, cfg);
}

}  // namespace wienerl2::cli
