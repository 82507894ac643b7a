#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace nqs::cli {

/// Fixed notation carrying 12 significant digits, '.' as the decimal
/// separator. Values below 1e-30 in magnitude print as zero; negative zero
/// prints without a sign.
std::string format_number(double value);

/// Streams rows as they are produced; the header is written on construction.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header);
  void row(std::initializer_list<double> values);

 private:
  std::ostream& out_;
  std::size_t columns_;
};

}  // namespace nqs::cli
