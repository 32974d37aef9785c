#pragma once

#include <string>
#include <vector>

#include "sco/igm.hpp"

namespace sco {

// Deterministic float formatting shared by every writer (shortest %.17g).
std::string fmt_double(double v);

// Run schema: k,calls,gap,walltime_ns. Timings are written as 0 unless
// requested so re-runs stay byte-identical.
std::string run_csv(const RunRecord& rec, bool include_timings = false);

struct SweepRow {
  double eps = 0.0;
  std::uint64_t seed = 0;
  long long calls = 0;
  long long iterations = 0;
  double gap = 0.0;
};

// Sweep schema: eps,seed,calls,iterations,gap.
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

CsvTable parse_csv(const std::string& text);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

std::uint64_t content_hash(const std::string& text);  // FNV-1a 64
std::string hash_hex(std::uint64_t h);

}  // namespace sco
