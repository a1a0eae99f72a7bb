#include "scg/rational.hpp"

#include <algorithm>
#include <cctype>

#include "scg/errors.hpp"

namespace scg {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational parse_rational(std::string_view text) {
  auto fail = [&] { return ValidationError("not a rational number: '" + std::string(text) + "'"); };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) throw fail();
    mpz_class d = parse_integer(den);
    if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    Rational r(parse_integer(num), d);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole = "0";
    if (!is_integer_literal(whole) || frac.empty() ||
        !std::all_of(frac.begin(), frac.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw fail();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class w = parse_integer(whole);
    if (w < 0) w = -w;
    Rational r(w * scale + parse_integer(frac), scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  if (!is_integer_literal(text)) throw fail();
  return Rational(parse_integer(text));
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace scg
