// Copyright 2026 The cheshire Authors
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

#include "cheshire/tables.hpp"

#include <stdexcept>

#include "cheshire/textio.hpp"

namespace cheshire {

namespace {

constexpr std::string_view kWeakValueHeader =
    "alpha_deg,wPL,wPR,wWL,wWR,source,errPL,errPR,errWL,errWR";
constexpr std::string_view kIteCurveHeader = "T,t,N,N_err";
constexpr std::string_view kFitPrefix = "# fit observable=";

[[noreturn]] void fail(std::string_view doc, size_t line, const std::string& what) {
  throw std::runtime_error(std::string(doc) + " line " + format_u64(line) + ": " + what);
}

}  // namespace

std::string write_weak_values_csv(const std::vector<WeakValueRow>& rows) {
  std::string out(kWeakValueHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += format_double(r.alpha_deg);
    for (double w : {r.w_pl, r.w_pr, r.w_wl, r.w_wr}) {
      out += ',';
      out += format_double(w);
    }
    out += ',';
    out += r.source;
    for (double e : {r.err_pl, r.err_pr, r.err_wl, r.err_wr}) {
      out += ',';
      out += format_double(e);
    }
    out += '\n';
  }
  return out;
}

std::vector<WeakValueRow> parse_weak_values_csv(std::string_view csv) {
  auto lines = split_lines(csv);
  if (lines.empty() || lines[0] != kWeakValueHeader) {
    fail("weak_values", 1, "expected header '" + std::string(kWeakValueHeader) + "'");
  }
  std::vector<WeakValueRow> rows;
  for (size_t i = 1; i < lines.size(); i++) {
    auto f = split_fields(lines[i], ',');
    if (f.size() != 10) fail("weak_values", i + 1, "expected 10 fields");
    WeakValueRow r;
    try {
      r.alpha_deg = parse_double(f[0]);
      r.w_pl = parse_double(f[1]);
      r.w_pr = parse_double(f[2]);
      r.w_wl = parse_double(f[3]);
      r.w_wr = parse_double(f[4]);
      r.source = std::string(f[5]);
      r.err_pl = parse_double(f[6]);
      r.err_pr = parse_double(f[7]);
      r.err_wl = parse_double(f[8]);
      r.err_wr = parse_double(f[9]);
    } catch (const std::exception& e) {
      fail("weak_values", i + 1, e.what());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string write_ite_curve_csv(const IteCurveTable& table) {
  std::string out(kIteCurveHeader);
  out += '\n';
  for (const auto& r : table.rows) {
    out += format_double(r.transmission);
    out += ',';
    out += format_double(r.t);
    out += ',';
    out += format_double(r.incidence);
    out += ',';
    out += format_double(r.incidence_err);
    out += '\n';
  }
  out += kFitPrefix;
  out += table.observable_id;
  out += " slope=" + format_double(table.slope);
  out += " intercept=" + format_double(table.intercept);
  out += " weak_value=" + format_double(table.weak_value);
  out += " weak_value_err=" + format_double(table.weak_value_err);
  out += '\n';
  return out;
}

IteCurveTable parse_ite_curve_csv(std::string_view csv) {
  auto lines = split_lines(csv);
  if (lines.empty() || lines[0] != kIteCurveHeader) {
    fail("ite_curve", 1, "expected header '" + std::string(kIteCurveHeader) + "'");
  }
  IteCurveTable table{};
  bool saw_fit = false;
  for (size_t i = 1; i < lines.size(); i++) {
    std::string_view line = lines[i];
    if (line.rfind(kFitPrefix, 0) == 0) {
      if (saw_fit) fail("ite_curve", i + 1, "duplicate fit line");
      auto f = split_fields(line.substr(kFitPrefix.size()), ' ');
      if (f.size() != 5) fail("ite_curve", i + 1, "expected 5 fit fields");
      auto value_of = [&](std::string_view field, std::string_view key) {
        if (field.substr(0, key.size()) != key) {
          fail("ite_curve", i + 1, "expected '" + std::string(key) + "'");
        }
        return parse_double(field.substr(key.size()));
      };
      try {
        table.observable_id = std::string(f[0]);
        table.slope = value_of(f[1], "slope=");
        table.intercept = value_of(f[2], "intercept=");
        table.weak_value = value_of(f[3], "weak_value=");
        table.weak_value_err = value_of(f[4], "weak_value_err=");
      } catch (const std::exception& e) {
        fail("ite_curve", i + 1, e.what());
      }
      saw_fit = true;
      continue;
    }
    if (saw_fit) fail("ite_curve", i + 1, "data after fit line");
    auto f = split_fields(line, ',');
    if (f.size() != 4) fail("ite_curve", i + 1, "expected 4 fields");
    IteCurveTable::Row r;
    try {
      r.transmission = parse_double(f[0]);
      r.t = parse_double(f[1]);
      r.incidence = parse_double(f[2]);
      r.incidence_err = parse_double(f[3]);
    } catch (const std::exception& e) {
      fail("ite_curve", i + 1, e.what());
    }
    table.rows.push_back(r);
  }
  if (!saw_fit) fail("ite_curve", lines.size(), "missing fit line");
  return table;
}

}  // namespace cheshire
