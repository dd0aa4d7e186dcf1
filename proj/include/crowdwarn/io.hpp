#ifndef CROWDWARN_IO_HPP
#define CROWDWARN_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace crowdwarn {

// Real formatted at 17 significant digits; parses back to the identical
// double. Used by every JSON contract file.
std::string format_real17(double v);

// Shorter form for plot-ready CSV metrics.
std::string format_metric(double v);

// Whole-file helpers; throw Error(io_error) on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Creates the directory (and parents) if missing; throws Error(io_error).
void ensure_directory(const std::string& path);

// Splits one CSV line on commas. No quoting: the artifact's formats never
// embed commas in fields. A trailing '\r' is stripped.
std::vector<std::string> split_csv_line(const std::string& line);

// Splits file content into lines, tolerating a missing final newline.
std::vector<std::string> split_lines(const std::string& text);

} // namespace crowdwarn

#endif
