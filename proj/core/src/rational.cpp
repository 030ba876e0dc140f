#include "sofic/rational.hpp"

#include <cctype>

#include "sofic/error.hpp"

namespace sofic {

std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_decimal_string(const Rational& q, int digits) {
  Rational c = q;
  c.canonicalize();
  const bool negative = sgn(c) < 0;
  if (negative) c = -c;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round half up
  mpz_class scaled = (c.get_num() * scale * 2 + c.get_den()) / (c.get_den() * 2);
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  if (negative && scaled != 0) out.insert(0, "-");
  return out;
}

Rational parse_rational(std::string_view text) {
  std::string t(text);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  std::size_t b = 0;
  while (b < t.size() && std::isspace(static_cast<unsigned char>(t[b]))) ++b;
  t = t.substr(b);
  if (t.empty()) throw InputError("empty rational literal");
  try {
    if (auto dot = t.find('.'); dot != std::string::npos) {
      std::string digits = t.substr(0, dot) + t.substr(dot + 1);
      if (digits.empty() || digits == "-" || digits == "+")
        throw InputError("bad decimal literal '" + t + "'");
      mpz_class num(digits, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, t.size() - dot - 1);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    Rational q(t, 10);
    if (q.get_den() == 0) throw InputError("zero denominator in '" + t + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InputError("bad rational literal '" + t + "'");
  }
}

}  // namespace sofic
