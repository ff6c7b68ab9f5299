#ifndef RELACC_CSV_HPP
#define RELACC_CSV_HPP

#include <map>
#include <string>
#include <vector>

#include "relacc/calibrate.hpp"
#include "relacc/types.hpp"

namespace relacc {

// 17 significant digits, enough to round-trip a double exactly.
std::string format_double(double v);

// Writes a CSV file with the given header row and rows of doubles,
// LF line endings.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows);

// key=value sidecar recording how an output file was produced.
void write_meta(const std::string& out_path,
                const std::vector<std::pair<std::string, std::string>>& entries);

// Reads an `h,err` CSV. Throws DataError naming the offending line.
ErrorSeries read_error_series_csv(const std::string& path,
                                  const std::string& label);

void write_error_series_csv(const std::string& path, const ErrorSeries& series);

}  // namespace relacc

#endif
