#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace quasibell::cli {

using Cell = std::variant<std::int64_t, double>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  void append(const Table& other);
};

enum class Format { csv, json };

/// 12 significant digits, locale independent, -0 printed as 0. Throws
/// std::runtime_error on non-finite input.
std::string format_number(double value);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);
void write_table(const Table& table, Format format, std::ostream& out);

}  // namespace quasibell::cli
