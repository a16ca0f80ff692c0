#include "locc/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace locc {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  return Integer(std::string(s), 10);
}

Integer pow10(unsigned long e) { return pow(Integer(10), e); }

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not an exact decimal number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(s.substr(0, slash));
    Rational den = parse_decimal(s.substr(slash + 1));
    if (den == 0) bad(text);
    return num / den;
  }

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (exp_part.empty() || exp_part.size() > 6 || !all_digits(exp_part)) bad(text);
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad(text);
  if (!all_digits(int_part) || !all_digits(frac_part)) bad(text);

  std::string digits = std::string(int_part) + std::string(frac_part);
  Integer mantissa = parse_integer(digits);
  if (negative) mantissa = -mantissa;
  long scale = exponent - static_cast<long>(frac_part.size());
  if (scale >= 0) return Rational(mantissa * pow10(static_cast<unsigned long>(scale)));
  return make_rational(mantissa, pow10(static_cast<unsigned long>(-scale)));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer round_half_even(const Rational& q) {
  Integer floor_value;
  mpz_fdiv_q(floor_value.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational frac = q - Rational(floor_value);
  int c = cmp(frac, Rational(1, 2));
  if (c < 0) return floor_value;
  if (c > 0) return floor_value + 1;
  return mpz_even_p(floor_value.get_mpz_t()) ? floor_value : Integer(floor_value + 1);
}

std::string to_decimal(const Rational& q, int digits, bool trim) {
  if (digits < 1) throw std::invalid_argument("to_decimal needs at least one digit");
  if (q == 0) return "0";
  Rational magnitude = abs(q);

  // e such that 10^e <= magnitude < 10^(e+1)
  long e = static_cast<long>(std::floor(std::log10(magnitude.get_d())));
  auto power_of_ten = [](long k) {
    return k >= 0 ? Rational(pow10(static_cast<unsigned long>(k)))
                  : make_rational(1, pow10(static_cast<unsigned long>(-k)));
  };
  while (magnitude < power_of_ten(e)) --e;
  while (magnitude >= power_of_ten(e + 1)) ++e;

  Integer scaled = round_half_even(magnitude * power_of_ten(digits - 1 - e));
  if (scaled == pow10(static_cast<unsigned long>(digits))) {
    scaled /= 10;
    ++e;
  }

  std::string body = scaled.get_str();
  std::string out;
  if (e >= digits - 1) {
    out = body + std::string(static_cast<std::size_t>(e - (digits - 1)), '0');
  } else if (e < 0) {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + body;
  } else {
    out = body.substr(0, static_cast<std::size_t>(e + 1)) + "." +
          body.substr(static_cast<std::size_t>(e + 1));
  }

  if (trim && out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return q < 0 ? "-" + out : out;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
  return make_rational(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
}

}  // namespace locc
