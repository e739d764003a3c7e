#include "scar/rational.hpp"

#include <cctype>
#include <ostream>

#include "scar/errors.hpp"

namespace scar {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ValidationError("malformed rational literal: '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ValidationError("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    mpz_class den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw ValidationError("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(mpq_class(num, den));
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if (int_part.empty()) int_part = "0";
    if (!all_digits(int_part) || !all_digits(frac_part))
      throw ValidationError("malformed rational literal: '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    mpz_class num = mpz_class(std::string(int_part), 10) * scale + mpz_class(std::string(frac_part), 10);
    if (negative) num = -num;
    return Rational(mpq_class(num, scale));
  }

  return Rational(mpq_class(parse_integer(text, text)));
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw ValidationError("division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace scar
