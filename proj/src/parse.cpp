#include "uqfi/parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "uqfi/errors.hpp"

namespace uqfi {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool parse_real(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* begin = s.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end == begin + s.size();
}

}  // namespace

double parse_angle(std::string_view text) {
  const std::string s = trim(text);
  const auto fail = [&]() -> double {
    throw DomainError("cannot parse angle '" + std::string(text) + "'");
  };
  if (s.empty()) return fail();

  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) {
    double v = 0.0;
    if (!parse_real(s, v)) return fail();
    return v;
  }

  std::string coef = s.substr(0, pi_pos);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  double k = 1.0;
  if (coef == "-") {
    k = -1.0;
  } else if (coef == "+" || coef.empty()) {
    k = 1.0;
  } else if (!parse_real(coef, k)) {
    return fail();
  }

  std::string rest = s.substr(pi_pos + 2);
  double den = 1.0;
  if (!rest.empty()) {
    if (rest[0] != '/' || !parse_real(rest.substr(1), den) || den == 0.0) return fail();
  }
  return k * std::numbers::pi / den;
}

cplx parse_complex(std::string_view text) {
  std::string s = trim(text);
  const auto fail = [&]() -> cplx {
    throw DomainError("cannot parse complex number '" + std::string(text) + "'");
  };
  if (s.empty()) return fail();

  if (s.back() != 'i') {
    double re = 0.0;
    if (!parse_real(s, re)) return fail();
    return {re, 0.0};
  }
  s.pop_back();

  // split at the last sign that is not a leading sign or an exponent sign
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";

  double re = 0.0, im = 0.0;
  if (!re_part.empty() && !parse_real(re_part, re)) return fail();
  if (!parse_real(im_part, im)) return fail();
  return {re, im};
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace uqfi
