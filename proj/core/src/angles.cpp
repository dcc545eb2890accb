#include "spacs/angles.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "spacs/error.hpp"

namespace spacs {
namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

bool parse_integer(std::string_view text, long long& out) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

double parse_real(std::string_view text) {
  const std::string s = strip_spaces(text);
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::parse_error, "not a real number: '" + std::string(text) + "'");
  }
  return value;
}

double parse_angle(std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) return parse_real(s);

  // numerator: [sign][integer][*] before "pi"
  std::string head = s.substr(0, pi_pos);
  if (!head.empty() && head.back() == '*') head.pop_back();
  long long numerator = 1;
  if (head.empty() || head == "+") {
    numerator = 1;
  } else if (head == "-") {
    numerator = -1;
  } else {
    if (head.front() == '+') head.erase(0, 1);
    if (!parse_integer(head, numerator)) {
      throw Error(ErrorCode::parse_error, "bad multiple of pi: '" + std::string(text) + "'");
    }
  }

  const std::string tail = s.substr(pi_pos + 2);
  long long denominator = 1;
  if (!tail.empty()) {
    if (tail.front() != '/' || !parse_integer(std::string_view(tail).substr(1), denominator) ||
        denominator <= 0) {
      throw Error(ErrorCode::parse_error, "bad pi denominator: '" + std::string(text) + "'");
    }
  }
  const double scaled = static_cast<double>(numerator) * std::numbers::pi;
  return denominator == 1 ? scaled : scaled / static_cast<double>(denominator);
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace spacs
