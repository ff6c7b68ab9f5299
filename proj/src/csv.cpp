#include "relacc/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace relacc {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open output file: " + path);
  out << header << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << format_double(row[i]);
    }
    out << "\n";
  }
}

void write_meta(
    const std::string& out_path,
    const std::vector<std::pair<std::string, std::string>>& entries) {
  const std::string path = out_path + ".meta.txt";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open output file: " + path);
  for (const auto& [key, value] : entries) out << key << "=" << value << "\n";
}

ErrorSeries read_error_series_csv(const std::string& path,
                                  const std::string& label) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open input file: " + path);
  ErrorSeries series;
  series.method_label = label.empty() ? path : label;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1) {
      if (line != "h,err")
        throw DataError(path + ":1: expected header 'h,err'");
      continue;
    }
    std::istringstream ss(line);
    double h, err;
    char comma;
    if (!(ss >> h >> comma >> err) || comma != ',')
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": malformed row '" + line + "'");
    series.samples.push_back({h, err});
  }
  if (series.samples.empty())
    throw DataError(path + ": no data rows");
  return series;
}

void write_error_series_csv(const std::string& path,
                            const ErrorSeries& series) {
  std::vector<std::vector<double>> rows;
  rows.reserve(series.samples.size());
  for (const auto& s : series.samples) rows.push_back({s.h, s.err});
  write_csv(path, "h,err", rows);
}

}  // namespace relacc
