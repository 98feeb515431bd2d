#include "hn/rational.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "hn/errors.hpp"

namespace hn {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class pow10(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

// round(|num/den|) with ties away from zero, for den > 0.
mpz_class round_half_up(const mpz_class& num, const mpz_class& den) {
  mpz_class twice = 2 * num + den;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
  return q;
}

std::string insert_point(std::string digits, long point_pos) {
  // point_pos = number of digits before the decimal point (may be <= 0)
  if (point_pos <= 0) {
    digits = std::string(static_cast<std::size_t>(-point_pos), '0') + digits;
    digits = "0." + digits;
  } else if (static_cast<std::size_t>(point_pos) >= digits.size()) {
    digits += std::string(static_cast<std::size_t>(point_pos) - digits.size(), '0');
  } else {
    digits.insert(static_cast<std::size_t>(point_pos), ".");
  }
  if (digits.find('.') != std::string::npos) {
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
  }
  return digits;
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r{mpz_class(std::to_string(num), 10), mpz_class(std::to_string(den), 10)};
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational literal");

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed fraction '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    result = Rational(mpz_class(std::string(num), 10), d);
    result.canonicalize();
  } else {
    auto dot = body.find('.');
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw ParseError("malformed number '" + std::string(text) + "'");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    if (dot != std::string_view::npos && frac_part.empty() && int_part.empty()) {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    if (digits.empty()) digits = "0";
    result = Rational(mpz_class(digits, 10), pow10(frac_part.size()));
    result.canonicalize();
  }
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int significant) {
  if (significant < 1) significant = 1;
  if (value == 0) return "0";
  mpz_class num = abs(value.get_num());
  const mpz_class& den = value.get_den();

  // exponent e with 10^e <= |value| < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto scaled_ge = [&](long exp) {  // |value| >= 10^exp
    if (exp >= 0) return num >= den * pow10(static_cast<unsigned long>(exp));
    return num * pow10(static_cast<unsigned long>(-exp)) >= den;
  };
  while (!scaled_ge(e)) --e;
  while (scaled_ge(e + 1)) ++e;

  long shift = significant - 1 - e;  // multiply by 10^shift
  mpz_class q;
  if (shift >= 0) {
    q = round_half_up(num * pow10(static_cast<unsigned long>(shift)), den);
  } else {
    q = round_half_up(num, den * pow10(static_cast<unsigned long>(-shift)));
  }
  if (q == pow10(static_cast<unsigned long>(significant))) {
    q /= 10;
    ++e;
  }
  std::string digits = q.get_str();
  std::string out = insert_point(digits, e + 1);
  return value < 0 ? "-" + out : out;
}

std::string to_fixed(const Rational& value, int places) {
  if (places < 0) places = 0;
  mpz_class scaled = round_half_up(abs(value.get_num()) * pow10(static_cast<unsigned long>(places)), value.get_den());
  std::string digits = scaled.get_str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits = std::string(static_cast<std::size_t>(places) + 1 - digits.size(), '0') + digits;
  }
  if (places > 0) digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  bool is_zero = scaled == 0;
  return (value < 0 && !is_zero) ? "-" + digits : digits;
}

Rational rounded_sqrt(const Rational& value, std::int64_t denom) {
  if (value < 0) throw std::invalid_argument("rounded_sqrt of a negative value");
  if (denom < 1) throw std::invalid_argument("rounded_sqrt: denominator must be >= 1");
  // nearest integer r to sqrt(x), x = value * denom^2 = a/b
  mpz_class d(std::to_string(denom), 10);
  mpz_class a = value.get_num() * d * d;
  const mpz_class& b = value.get_den();
  mpz_class floor_x = a / b;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), floor_x.get_mpz_t());
  // sqrt(x) >= r + 1/2  <=>  4a >= (2r+1)^2 b
  mpz_class twice = 2 * r + 1;
  if (4 * a >= twice * twice * b) r += 1;
  Rational out(r, d);
  out.canonicalize();
  return out;
}

Rational sum(const std::vector<Rational>& values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace hn
