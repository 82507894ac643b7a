#include <nqs/cli/csv.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace nqs::cli {

std::string format_number(double value) {
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  constexpr int kSignificant = 12;
  constexpr int kMaxDecimals = 30;
  int decimals = kSignificant - 1;
  char buf[512];
  if (value != 0.0) {
    // The exponent of the rounded scientific form accounts for carries such
    // as 0.99999999999996 -> 1.00000000000.
    std::snprintf(buf, sizeof buf, "%.*e", kSignificant - 1, value);
    const int exponent = std::atoi(std::strchr(buf, 'e') + 1);
    decimals = std::clamp(kSignificant - 1 - exponent, 0, kMaxDecimals);
  }
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

CsvWriter::CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header)
    : out_(out), columns_(header.size()) {
  bool first = true;
  for (std::string_view h : header) {
    if (!first) out_ << ',';
    out_ << h;
    first = false;
  }
  out_ << '\n';
}

void CsvWriter::row(std::initializer_list<double> values) {
  if (values.size() != columns_) throw std::logic_error("CSV row width differs from header");
  bool first = true;
  for (double v : values) {
    if (!first) out_ << ',';
    out_ << format_number(v);
    first = false;
  }
  out_ << '\n';
}

}  // namespace nqs::cli
