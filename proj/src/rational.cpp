#include "cyclebound/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "cyclebound/errors.hpp"

namespace cyclebound {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty weight");

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  if (body.empty()) throw ParseError("malformed number '" + s + "'");

  mpq_class value;
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed rational '" + s + "' (expected p/q with q > 0)");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw ParseError("malformed number '" + s + "'");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw ParseError("malformed decimal '" + s + "'");
    mpz_class scaled(std::string(ip) + std::string(fp), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    value = mpq_class(scaled, scale);
  } else {
    if (!all_digits(body)) throw ParseError("malformed number '" + s + "'");
    value = mpq_class(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(std::move(value));
}

std::string Rational::str() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.value_; }

}  // namespace cyclebound
