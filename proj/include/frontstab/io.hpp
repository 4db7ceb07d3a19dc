#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace frontstab {

/// Shortest-safe round-trip decimal form: 17 significant digits.
std::string format_double(double x);

/// Comma-separated writer. Doubles are formatted with format_double.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::initializer_list<std::string> header);
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

  void row(std::initializer_list<double> values);
  /// Pre-formatted cells, for mixed columns (flags, blanks).
  void row_cells(const std::vector<std::string>& cells);

 private:
  std::ofstream out_;
  std::size_t columns_;
};

/// Binary PGM (P5, maxval 255). `pixels` is row-major, top row first.
void write_pgm(const std::filesystem::path& path, int width, int height,
               std::span<const std::uint8_t> pixels);

/// Maps [0, 1] to [0, 255] with clamping and rounding.
std::uint8_t to_gray(double value);

/// Creates the directory (and parents). Throws std::runtime_error on failure.
void ensure_directory(const std::filesystem::path& dir);

}  // namespace frontstab
