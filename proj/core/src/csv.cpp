#include "ism/csv.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "ism/error.hpp"

namespace ism {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

CsvWriter::CsvWriter(const std::string& path, std::vector<std::string> columns)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc), width_(columns.size()) {
  if (!out_) throw Error("cannot open '" + path + "' for writing");
  for (std::size_t i = 0; i < columns.size(); ++i) row_ += (i ? "," : "") + columns[i];
  row_ += "\n";
  out_ << row_;
  row_.clear();
}

void CsvWriter::sep() {
  if (col_++) row_ += ',';
}

CsvWriter& CsvWriter::operator<<(double x) {
  sep();
  row_ += format_double(x);
  return *this;
}

CsvWriter& CsvWriter::operator<<(std::size_t i) {
  sep();
  row_ += std::to_string(i);
  return *this;
}

void CsvWriter::end_row() {
  if (col_ != width_)
    throw Error(path_ + ": row has " + std::to_string(col_) + " fields, header has " + std::to_string(width_));
  row_ += '\n';
  out_ << row_;
  row_.clear();
  col_ = 0;
}

void CsvWriter::close() {
  out_.close();
  if (out_.fail()) throw Error("write failure on '" + path_ + "'");
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw Error("CSV is missing column '" + name + "'");
}

bool CsvTable::has(const std::string& name) const {
  for (const auto& c : columns)
    if (c == name) return true;
  return false;
}

namespace {
double parse_field(const std::string& s, const std::string& path, std::size_t line) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  double x = 0.0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), x);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw Error(path + ":" + std::to_string(line) + ": not a number: '" + s + "'");
  return x;
}
}  // namespace

CsvTable CsvTable::read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw Error(path + ": empty file");
  {
    std::istringstream h(line);
    std::string c;
    while (std::getline(h, c, ',')) t.columns.push_back(c);
  }
  std::size_t n = 1;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    std::vector<double> row;
    row.reserve(t.columns.size());
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      row.push_back(parse_field(line.substr(start, comma - start), path, n));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (row.size() != t.columns.size())
      throw Error(path + ":" + std::to_string(n) + ": expected " + std::to_string(t.columns.size()) + " fields");
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace ism
