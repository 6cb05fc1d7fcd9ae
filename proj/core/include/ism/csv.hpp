#pragma once

#include <cstddef>
#include <fstream>
#include <string>
#include <vector>

namespace ism {

// 17 significant digits, general format. nan and inf as text.
std::string format_double(double x);

// Comma-separated writer with a header row and "\n" line endings.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, std::vector<std::string> columns);

  CsvWriter& operator<<(double x);
  CsvWriter& operator<<(std::size_t i);
  // Throws Error if the row width does not match the header.
  void end_row();
  void close();

  const std::string& path() const { return path_; }

 private:
  void sep();

  std::string path_;
  std::ofstream out_;
  std::size_t width_ = 0;
  std::size_t col_ = 0;
  std::string row_;
};

// Whole-file reader for the files written above.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  // Index of a column; throws Error naming the missing column.
  std::size_t column(const std::string& name) const;
  bool has(const std::string& name) const;

  static CsvTable read(const std::string& path);
};

}  // namespace ism
