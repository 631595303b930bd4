#include "maglap/angles.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "maglap/error.hpp"

namespace maglap {

double normalize_angle(double x) {
  double a = std::fmod(x, two_pi);
  if (a < 0.0) a += two_pi;
  if (a >= two_pi || two_pi - a < eps_angle) a = 0.0;
  return a;
}

double angle_distance(double a, double b) {
  double d = normalize_angle(a - b);
  return std::min(d, two_pi - d);
}

bool angles_equal(double a, double b, double tol) {
  return angle_distance(a, b) < tol;
}

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

double parse_number(const std::string& s, const std::string& full) {
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw Error(Error::Code::ParseError, "bad angle: '" + full + "'");
  return v;
}

} // namespace

double parse_angle(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw Error(Error::Code::ParseError, "empty angle");

  auto at = s.find("pi");
  if (at == std::string::npos) return parse_number(s, text);

  std::string coef_str = s.substr(0, at);
  std::string rest = s.substr(at + 2);

  double coef = 1.0;
  if (!coef_str.empty() && coef_str.back() == '*') coef_str.pop_back();
  if (coef_str == "-")
    coef = -1.0;
  else if (!coef_str.empty() && coef_str != "+")
    coef = parse_number(coef_str, text);

  double den = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/' || rest.size() < 2)
      throw Error(Error::Code::ParseError, "bad angle: '" + text + "'");
    den = parse_number(rest.substr(1), text);
    if (den == 0.0) throw Error(Error::Code::ParseError, "zero denominator in angle");
  }
  return coef * pi / den;
}

} // namespace maglap
