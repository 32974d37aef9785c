#include "sco/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sco/rng.hpp"

namespace sco {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string run_csv(const RunRecord& rec, bool include_timings) {
  std::ostringstream os;
  os << "k,calls,gap,walltime_ns\n";
  for (const auto& r : rec.rows)
    os << r.k << ',' << r.calls << ',' << fmt_double(r.gap) << ','
       << (include_timings ? r.walltime_ns : 0) << '\n';
  return os.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "eps,seed,calls,iterations,gap\n";
  for (const auto& r : rows)
    os << fmt_double(r.eps) << ',' << r.seed << ',' << r.calls << ',' << r.iterations << ','
       << fmt_double(r.gap) << '\n';
  return os.str();
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream is(text);
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (first) {
      t.header = cells;
      first = false;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) {
      try {
        row.push_back(std::stod(c));
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed CSV cell: '" + c + "'");
      }
    }
    if (row.size() != t.header.size())
      throw std::invalid_argument("malformed CSV row: wrong cell count");
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::uint64_t content_hash(const std::string& text) { return CounterRng::fnv1a(text); }

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace sco
