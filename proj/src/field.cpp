#include "skewgentle/field.hpp"

#include <cctype>

namespace skewgentle {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto digits_ok = [](std::string_view part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::domain_error("zero denominator in '" + s + "'");
  return Rational(mpq_class(n, d));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("prime out of range");
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
  FieldSpec f;
  f.kind = Kind::prime;
  f.p = p;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s;
  for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "q" || s == "rationals" || s == "qq") return rationals();
  std::string_view rest = s;
  if (rest.substr(0, 2) == "gf") rest.remove_prefix(2);
  else if (!rest.empty() && (rest[0] == 'f' || rest[0] == 'p')) rest.remove_prefix(1);
  else throw std::invalid_argument("unknown field '" + std::string(text) + "'");
  if (rest.empty()) throw std::invalid_argument("unknown field '" + std::string(text) + "'");
  for (char c : rest)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("unknown field '" + std::string(text) + "'");
  return prime(static_cast<std::uint32_t>(std::stoul(std::string(rest))));
}

std::string FieldSpec::name() const {
  return kind == Kind::rationals ? "Q" : "F" + std::to_string(p);
}

}  // namespace skewgentle
