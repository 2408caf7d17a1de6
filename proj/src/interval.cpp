#include "cfdim/interval.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace cfdim {

namespace {

// Format x to `digits` fractional digits, rounded toward -inf (down=true)
// or +inf. A double is a binary rational, so its decimal expansion
// terminates within 1074 fractional digits; glibc printf produces it
// exactly at that precision, after which truncation plus an optional
// decimal carry is exact.
std::string directed_decimal(double x, int digits, bool down) {
  if (digits < 1) digits = 1;
  char buf[1500];
  std::snprintf(buf, sizeof buf, "%.1080f", x);
  std::string s(buf);
  bool negative = s[0] == '-';
  auto dot = s.find('.');
  std::string head = s.substr(0, dot + 1 + static_cast<std::string::size_type>(digits));
  bool dropped_nonzero = false;
  for (auto i = head.size(); i < s.size(); ++i)
    if (s[i] != '0') dropped_nonzero = true;

  // Truncation moved the magnitude toward zero. For negative/down or
  // positive/up we must step one unit away from zero when anything was lost.
  bool step_away = dropped_nonzero && (down == negative);
  if (step_away) {
    for (auto i = head.size(); i-- > 0;) {
      if (head[i] == '.') continue;
      if (head[i] == '-') {  // carried past the leading digit
        head.insert(i + 1, "1");
        break;
      }
      if (head[i] != '9') {
        head[i] = static_cast<char>(head[i] + 1);
        break;
      }
      head[i] = '0';
      if (i == 0) {
        head.insert(0, "1");
        break;
      }
    }
  }
  // "-0.000000" with nothing dropped is just 0
  if (!dropped_nonzero && negative) {
    bool all_zero = true;
    for (char c : head)
      if (c >= '1' && c <= '9') all_zero = false;
    if (all_zero) head.erase(0, 1);
  }
  return head;
}

}  // namespace

std::string decimal_down(double x, int digits) { return directed_decimal(x, digits, true); }
std::string decimal_up(double x, int digits) { return directed_decimal(x, digits, false); }

std::string to_string(const Interval& a, int digits) {
  return "[" + decimal_down(a.lo, digits) + ", " + decimal_up(a.hi, digits) + "]";
}

std::string exact_decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str()) throw ParamError("unparseable number: '" + s + "'");
  return v;
}

}  // namespace cfdim
