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

#ifndef CHESHIRE_TABLES_HPP
#define CHESHIRE_TABLES_HPP

#include <string>
#include <string_view>
#include <vector>

namespace cheshire {

// The CSV documents the command-line tool emits. Writers and parsers live
// together so the round-trip contract (parse then re-emit reproduces the
// file byte-for-byte) is testable without invoking the tool.

/// One row of the weak-value table. source says how the numbers were
/// obtained: "closed_form" (the alpha formula), "exact" (inner products),
/// or "fitted" (attenuation sweep with counting noise). The err columns are
/// 0 except on fitted rows.
struct WeakValueRow {
  double alpha_deg;
  double w_pl, w_pr, w_wl, w_wr;
  std::string source;
  double err_pl, err_pr, err_wl, err_wr;
};

/// Header: alpha_deg,wPL,wPR,wWL,wWR,source,errPL,errPR,errWL,errWR.
std::string write_weak_values_csv(const std::vector<WeakValueRow>& rows);
std::vector<WeakValueRow> parse_weak_values_csv(std::string_view csv);

/// One attenuation sweep of one observable plus its line fit. N_err is the
/// per-point counting error (0 in exact mode).
struct IteCurveTable {
  struct Row {
    double transmission;
    double t;
    double incidence;
    double incidence_err;
  };
  std::vector<Row> rows;
  std::string observable_id;
  double slope;
  double intercept;
  double weak_value;
  double weak_value_err;
};

/// Header: T,t,N,N_err. The fit travels in a trailing comment line
/// `# fit observable=.. slope=.. intercept=.. weak_value=.. weak_value_err=..`
/// that row-oriented consumers can skip on the `#` prefix.
std::string write_ite_curve_csv(const IteCurveTable& table);
IteCurveTable parse_ite_curve_csv(std::string_view csv);

}  // namespace cheshire

#endif
