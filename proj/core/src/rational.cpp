#include "qsched/rational.hpp"

#include <cctype>

#include "qsched/errors.hpp"

namespace qsched {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(const std::string& digits, const std::string& context) {
  if (!all_digits(digits)) {
    throw ParseError("invalid rational literal: '" + context + "'");
  }
  return mpz_class(digits, 10);
}

}  // namespace

Rat rat_from_string(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty rational literal");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s.erase(0, 1);
  }
  if (s.empty()) throw ParseError("invalid rational literal: '" + text + "'");

  Rat value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpz_class num = parse_integer(s.substr(0, slash), text);
    mpz_class den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    value = Rat(num, den);
    value.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ipart = s.substr(0, dot);
    std::string fpart = s.substr(dot + 1);
    if (ipart.empty()) ipart = "0";
    if (fpart.empty()) fpart = "0";
    mpz_class num = parse_integer(ipart, text);
    mpz_class frac = parse_integer(fpart, text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fpart.size());
    value = Rat(num * scale + frac, scale);
    value.canonicalize();
  } else {
    value = Rat(parse_integer(s, text));
  }
  if (negative) value = -value;
  return value;
}

std::string rat_to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace qsched
