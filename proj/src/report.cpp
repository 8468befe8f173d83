// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "tacsearch/harness.hpp"

namespace tacsearch {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::vector<std::string> strategies_in_order(const std::vector<EvalRecord>& records) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const EvalRecord& r : records) {
    if (seen.insert(r.strategy).second) out.push_back(r.strategy);
  }
  return out;
}

}  // namespace

std::map<std::string, std::string> report_files(const std::vector<EvalRecord>& records,
                                                const StrategyTable& table, bool include_timing) {
  std::map<std::string, std::string> files;
  const std::vector<std::string> order = strategies_in_order(records);

  std::string& results = files["results.csv"];
  results = "theorem,theory,strategy,outcome,node_count,proof_size,script";
  if (include_timing) results += ",elapsed,wall_seconds";
  results += '\n';
  for (const EvalRecord& r : records) {
    results += csv_field(r.theorem) + ',' + csv_field(r.theory) + ',' + csv_field(r.strategy) +
               ',' + std::string(status_name(r.outcome)) + ',' + std::to_string(r.node_count) +
               ',' + std::to_string(r.proof_size) + ',' + csv_field(r.script);
    if (include_timing) results += ',' + fixed(r.elapsed, 6) + ',' + fixed(r.wall_seconds, 6);
    results += '\n';
  }

  std::string& st = files["strategy_table.csv"];
  st = "strategy,attempted,solved,percent,U(" + table.reference + ")\n";
  for (const StrategyRow& row : table.rows) {
    st += csv_field(row.strategy) + ',' + std::to_string(row.attempted) + ',' +
          std::to_string(row.solved) + ',' + fixed(row.percent, 2) + ',' +
          std::to_string(row.unique_vs_reference) + '\n';
  }

  std::string& hist = files["size_histogram.csv"];
  hist = "strategy,proof_size,count\n";
  for (const std::string& s : order) {
    std::map<std::size_t, std::size_t> counts;
    for (const EvalRecord& r : records) {
      if (r.strategy == s && r.outcome == SearchResult::Status::Proved) ++counts[r.proof_size];
    }
    for (const auto& [size, n] : counts) {
      hist += csv_field(s) + ',' + std::to_string(size) + ',' + std::to_string(n) + '\n';
    }
  }

  if (include_timing) {
    std::string& curve = files["time_curve.csv"];
    curve = "strategy,time,solved\n";
    double top = 0.0;
    for (const EvalRecord& r : records) top = std::max(top, r.elapsed);
    const long buckets = std::max(1L, static_cast<long>(std::ceil(top / 0.1 - 1e-9)));
    for (const std::string& s : order) {
      for (long b = 1; b <= buckets; ++b) {
        const double t = 0.1 * static_cast<double>(b);
        std::size_t n = 0;
        for (const EvalRecord& r : records) {
          if (r.strategy == s && r.outcome == SearchResult::Status::Proved && r.elapsed < t + 1e-12) {
            ++n;
          }
        }
        curve += csv_field(s) + ',' + fixed(t, 1) + ',' + std::to_string(n) + '\n';
      }
    }
  }

  std::string& pt = files["per_theory.csv"];
  pt = "strategy,theory,attempted,solved,percent\n";
  for (const std::string& s : order) {
    std::vector<std::string> theories;
    std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
    for (const EvalRecord& r : records) {
      if (r.strategy != s) continue;
      if (!counts.count(r.theory)) theories.push_back(r.theory);
      auto& c = counts[r.theory];
      ++c.first;
      if (r.outcome == SearchResult::Status::Proved) ++c.second;
    }
    for (const std::string& th : theories) {
      const auto [a, v] = counts[th];
      pt += csv_field(s) + ',' + csv_field(th) + ',' + std::to_string(a) + ',' +
            std::to_string(v) + ',' +
            fixed(a ? 100.0 * static_cast<double>(v) / static_cast<double>(a) : 0.0, 2) + '\n';
    }
  }
  return files;
}

void report(const std::vector<EvalRecord>& records, const StrategyTable& table,
            const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, text] : report_files(records, table, true)) {
    const std::string path = (std::filesystem::path(dir) / name).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
  }
}

}  // namespace tacsearch
