// Copyright 2026 The tricount Authors
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

// Serialized forms: the measurement CSV, fit JSON and columnar plot data.
//
// Measurement CSV header (exact):
//   graph,algorithm,vertices,edges,nnz,trials,time_s_min,time_s_median,rate_eps,n_t,include_aux
// Floating fields use the shortest decimal that round-trips. Lines starting
// with '#' and blank lines are skipped on read.

#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "tricount/bench.hpp"
#include "tricount/error.hpp"
#include "tricount/model_fit.hpp"

namespace tricount {

inline constexpr std::string_view kMeasurementCsvHeader =
    "graph,algorithm,vertices,edges,nnz,trials,time_s_min,time_s_median,rate_eps,n_t,include_aux";

/// Shortest round-trip decimal form of `x`.
inline std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw Error("cannot format double");
  return std::string(buf, ptr);
}

namespace detail {

inline std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::vector<std::string> csv_split(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"' && cur.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError(line_no, "unterminated quoted field");
  fields.push_back(std::move(cur));
  return fields;
}

template <typename T>
T csv_number(const std::string& field, std::size_t line_no, const char* column) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError(line_no, std::string("bad ") + column + " value '" + field + "'");
  }
  return value;
}

inline bool csv_bool(const std::string& field, std::size_t line_no) {
  if (field == "true" || field == "1") return true;
  if (field == "false" || field == "0") return false;
  throw ParseError(line_no, "bad include_aux value '" + field + "'");
}

}  // namespace detail

inline void write_measurement_csv(std::span<const MeasurementRecord> records, std::ostream& out,
                                  bool with_header = true) {
  if (with_header) out << kMeasurementCsvHeader << '\n';
  for (const auto& r : records) {
    out << detail::csv_escape(r.graph_name) << ',' << detail::csv_escape(r.algorithm) << ','
        << r.num_vertices << ',' << r.n_e << ',' << r.nnz << ',' << r.trials << ','
        << format_double(r.time_s_min) << ',' << format_double(r.time_s_median) << ','
        << format_double(r.rate_eps) << ',' << r.n_t << ',' << (r.include_aux ? "true" : "false")
        << '\n';
  }
}

inline std::string write_measurement_csv(std::span<const MeasurementRecord> records) {
  std::ostringstream out;
  write_measurement_csv(records, out);
  return out.str();
}

inline std::vector<MeasurementRecord> read_measurement_csv(std::istream& in) {
  std::vector<MeasurementRecord> out;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kMeasurementCsvHeader) {
        throw ParseError(line_no, "expected header '" + std::string(kMeasurementCsvHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    const auto f = detail::csv_split(line, line_no);
    if (f.size() != 11) {
      throw ParseError(line_no, "expected 11 fields, got " + std::to_string(f.size()));
    }
    MeasurementRecord r;
    r.graph_name = f[0];
    r.algorithm = f[1];
    r.num_vertices = detail::csv_number<std::uint64_t>(f[2], line_no, "vertices");
    r.n_e = detail::csv_number<std::uint64_t>(f[3], line_no, "edges");
    r.nnz = detail::csv_number<std::uint64_t>(f[4], line_no, "nnz");
    r.trials = detail::csv_number<std::uint64_t>(f[5], line_no, "trials");
    r.time_s_min = detail::csv_number<double>(f[6], line_no, "time_s_min");
    r.time_s_median = detail::csv_number<double>(f[7], line_no, "time_s_median");
    r.rate_eps = detail::csv_number<double>(f[8], line_no, "rate_eps");
    r.n_t = detail::csv_number<count_t>(f[9], line_no, "n_t");
    r.include_aux = detail::csv_bool(f[10], line_no);
    out.push_back(std::move(r));
  }
  if (!header_seen) throw ParseError(line_no == 0 ? 1 : line_no, "missing CSV header");
  return out;
}

inline std::vector<MeasurementRecord> read_measurement_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_measurement_csv(in);
}

/// (edges, time_s_median) pairs for the power-law fitter.
inline std::vector<FitPoint> fit_points(std::span<const MeasurementRecord> records) {
  std::vector<FitPoint> pts;
  pts.reserve(records.size());
  for (const auto& r : records) {
    pts.push_back({static_cast<double>(r.n_e), r.time_s_median});
  }
  return pts;
}

inline nlohmann::json to_json(const PowerLawFit& fit) {
  return {{"alpha", fit.alpha},
          {"beta", fit.beta},
          {"n1", fit.n1},
          {"residual_rms", fit.residual_rms},
          {"num_points", fit.num_points},
          {"snapped", fit.snapped}};
}

inline PowerLawFit fit_from_json(const nlohmann::json& j) {
  try {
    PowerLawFit fit;
    fit.alpha = j.at("alpha").get<double>();
    fit.beta = j.at("beta").get<double>();
    fit.n1 = j.at("n1").get<double>();
    fit.residual_rms = j.value("residual_rms", 0.0);
    fit.num_points = j.value("num_points", std::uint64_t{0});
    fit.snapped = j.value("snapped", false);
    if (!(fit.n1 > 0.0) || !(fit.beta > 0.0)) throw DomainError("fit needs positive n1 and beta");
    return fit;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("fit JSON: ") + e.what());
  }
}

/// "T = (N_e/N1)^beta" with the fitted numbers substituted.
inline std::string describe_fit(const PowerLawFit& fit) {
  std::ostringstream out;
  out << "T = (N_e/" << format_double(fit.n1) << ")^" << format_double(fit.beta);
  return out.str();
}

/// Whitespace-separated columns n_e, time_s, rate_eps; one block per model,
/// each preceded by a '# series:' comment and separated by two blank lines
/// (gnuplot `index` blocks).
inline void write_plot_data(const ComparisonTable& table, std::ostream& out) {
  out << "# columns: n_e time_s rate_eps time_ratio_to_soa\n";
  for (std::size_t s = 0; s < table.series.size(); ++s) {
    const auto& series = table.series[s];
    if (s > 0) out << "\n\n";
    out << "# series: " << series.label << " n1=" << format_double(series.n1)
        << " beta=" << format_double(series.beta) << " kind=" << (series.is_fit ? "fit" : "reference")
        << '\n';
    for (const auto& p : series.points) {
      out << format_double(p.n_e) << '\t' << format_double(p.time_s) << '\t'
          << format_double(p.rate_eps) << '\t' << format_double(p.time_ratio_to_soa) << '\n';
    }
  }
}

inline std::string write_plot_data(const ComparisonTable& table) {
  std::ostringstream out;
  write_plot_data(table, out);
  return out.str();
}

}  // namespace tricount
