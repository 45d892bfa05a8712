#include "miv/rational.hpp"

#include "miv/error.hpp"

#include <cctype>
#include <ostream>

namespace miv {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt to_big(std::string_view digits) {
  BigInt v = 0;
  for (char c : digits) v = v * 10 + (c - '0');
  return v;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InvalidInstance("rational with zero denominator");
  value_ = boost::multiprecision::cpp_rational(numerator, denominator);
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw InvalidInstance("rational with zero denominator");
  value_ = boost::multiprecision::cpp_rational(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError(1, 1, "empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num)) throw ParseError(1, 1, "bad numerator in '" + std::string(text) + "'");
    if (!all_digits(den)) throw ParseError(1, slash + 2, "bad denominator in '" + std::string(text) + "'");
    BigInt d = to_big(den);
    if (d == 0) throw ParseError(1, slash + 2, "zero denominator in '" + std::string(text) + "'");
    BigInt n = to_big(num);
    return Rational(negative ? BigInt(-n) : n, d);
  }

  std::string_view body = text;
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view whole = body;
  std::string_view frac;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    whole = body.substr(0, dot);
    frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw ParseError(1, 1, "bad number '" + std::string(text) + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      throw ParseError(1, 1, "bad number '" + std::string(text) + "'");
    }
  } else if (!all_digits(whole)) {
    throw ParseError(1, 1, "bad number '" + std::string(text) + "'");
  }
  BigInt scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  BigInt n = to_big(whole) * scale + to_big(frac);
  return Rational(negative ? BigInt(-n) : n, scale);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

std::string Rational::to_string() const {
  BigInt d = denominator();
  if (d == 1) return numerator().str();
  return numerator().str() + "/" + d.str();
}

double Rational::to_double() const { return value_.convert_to<double>(); }

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw InvalidInstance("division by zero rational");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace miv
