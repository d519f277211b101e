// Copyright 2026 The fracgen Authors
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
#include "fracgen/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fracgen/errors.hpp"

namespace fracgen {

void fill_observed_orders(ConvergenceReport& report) {
  auto& rows = report.rows;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    rows[k].observed_order.reset();
    if (k == 0 || rows[k].failed() || rows[k - 1].failed()) continue;
    const double e0 = rows[k - 1].max_error;
    const double e1 = rows[k].max_error;
    const double ratio = static_cast<double>(rows[k].intervals) / rows[k - 1].intervals;
    if (e0 > 0 && e1 > 0 && ratio > 0 && ratio != 1.0) {
      rows[k].observed_order = std::log(e0 / e1) / std::log(ratio);
    }
  }
}

std::string format_error(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4e", value);
  return buf;
}

std::string format_order(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

namespace {

std::string format_alpha(double alpha) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", alpha);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw UsageError("");
    return v;
  } catch (const std::exception&) {
    throw UsageError("malformed number in CSV: '" + s + "'");
  }
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw UsageError("");
    return v;
  } catch (const std::exception&) {
    throw UsageError("malformed integer in CSV: '" + s + "'");
  }
}

constexpr char kFailureMarker[] = "solver failure";

}  // namespace

void write_csv(std::ostream& os, const std::vector<ConvergenceReport>& reports) {
  for (const auto& r : reports) {
    if (!r.problem.empty()) {
      os << "# problem=" << r.problem << ",alpha=" << format_alpha(r.alpha) << ",scheme=" << r.scheme
         << "\n";
    }
  }
  os << kCsvHeader << "\n";
  for (const auto& r : reports) {
    for (const auto& row : r.rows) {
      os << row.intervals << ',' << row.steps << ',' << format_alpha(r.alpha) << ',' << r.scheme
         << ',' << (row.failed() ? std::string("nan") : format_error(row.max_error)) << ','
         << (row.observed_order ? format_order(*row.observed_order) : std::string()) << "\n";
    }
  }
}

std::string to_csv(const std::vector<ConvergenceReport>& reports) {
  std::ostringstream os;
  write_csv(os, reports);
  return os.str();
}

std::vector<ConvergenceReport> parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::pair<std::string, std::string>> problems;  // (alpha|scheme key, problem)
  bool header_seen = false;
  std::vector<ConvergenceReport> out;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string meta = line.substr(1);
      while (!meta.empty() && meta.front() == ' ') meta.erase(meta.begin());
      std::string problem, alpha, scheme;
      for (const auto& kv : split(meta, ',')) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) continue;
        const auto key = kv.substr(0, eq);
        const auto value = kv.substr(eq + 1);
        if (key == "problem") problem = value;
        if (key == "alpha") alpha = value;
        if (key == "scheme") scheme = value;
      }
      if (!problem.empty()) problems.emplace_back(alpha + "|" + scheme, problem);
      continue;
    }
    if (!header_seen) {
      if (line != kCsvHeader) throw UsageError("CSV header mismatch: '" + line + "'");
      header_seen = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 6) throw UsageError("CSV row needs 6 fields: '" + line + "'");
    ConvergenceRow row;
    row.intervals = parse_int(fields[0]);
    row.steps = parse_int(fields[1]);
    const double alpha = parse_double(fields[2]);
    const std::string& scheme = fields[3];
    if (fields[4] == "nan") {
      row.max_error = std::numeric_limits<double>::quiet_NaN();
      row.failure = kFailureMarker;
    } else {
      row.max_error = parse_double(fields[4]);
    }
    if (!fields[5].empty()) row.observed_order = parse_double(fields[5]);

    if (out.empty() || out.back().alpha != alpha || out.back().scheme != scheme) {
      ConvergenceReport r;
      r.alpha = alpha;
      r.scheme = scheme;
      const std::string key = fields[2] + "|" + scheme;
      for (const auto& [k, p] : problems) {
        if (k == key) r.problem = p;
      }
      out.push_back(std::move(r));
    }
    out.back().rows.push_back(std::move(row));
  }
  if (!header_seen) throw UsageError("CSV has no header row");
  return out;
}

ConvergenceReport rounded_for_csv(const ConvergenceReport& report) {
  ConvergenceReport r = report;
  for (auto& row : r.rows) {
    if (row.failed()) {
      row.max_error = std::numeric_limits<double>::quiet_NaN();
      row.failure = kFailureMarker;
    } else {
      row.max_error = std::stod(format_error(row.max_error));
    }
    if (row.observed_order) row.observed_order = std::stod(format_order(*row.observed_order));
  }
  return r;
}

std::string to_json(const std::vector<ConvergenceReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
      nlohmann::json j{{"N", row.intervals}, {"M", row.steps}};
      j["max_error"] = row.failed() ? nlohmann::json(nullptr) : nlohmann::json(row.max_error);
      j["observed_order"] =
          row.observed_order ? nlohmann::json(*row.observed_order) : nlohmann::json(nullptr);
      if (row.failed()) j["failure"] = row.failure;
      rows.push_back(std::move(j));
    }
    out.push_back({{"problem", r.problem}, {"scheme", r.scheme}, {"alpha", r.alpha}, {"rows", rows}});
  }
  return out.dump(2);
}

void write_file_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw UsageError("cannot open '" + tmp.string() + "' for writing");
    os << contents;
    if (!os.flush()) throw UsageError("failed writing '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

}  // namespace fracgen
