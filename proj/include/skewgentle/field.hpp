#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

#include <Eigen/Core>

namespace skewgentle {

/// Exact rational number backed by GMP.
class Rational {
 public:
  Rational() = default;
  template <class I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
  Rational(I value) : q_(static_cast<long>(value)) {}
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "7", "-7", "3/4" or "-3/4".
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  std::string to_string() const { return q_.get_str(); }

  Rational inverse() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class q_{0};
};

/// Element of the prime field F_P. P must be prime and below 2^31.
template <std::uint32_t P>
class Zp {
  static_assert(P >= 2 && P < (1u << 31), "modulus out of range");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Zp() = default;
  template <class I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
  constexpr Zp(I value) : v_(reduce(static_cast<long long>(value))) {}

  /// Image of a rational under Z_(p) -> F_p; throws if p divides the denominator.
  static Zp from_rational(const Rational& r) {
    mpz_class num = r.numerator() % P;
    mpz_class den = r.denominator() % P;
    if (den == 0) throw std::domain_error("coefficient denominator vanishes in F_" + std::to_string(P));
    return Zp(num.get_si()) / Zp(den.get_si());
  }

  constexpr std::uint32_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool is_one() const { return v_ == 1; }

  constexpr Zp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in F_p");
    // Fermat: a^(P-2)
    std::uint64_t base = v_, result = 1;
    std::uint64_t e = P - 2;
    while (e) {
      if (e & 1) result = result * base % P;
      base = base * base % P;
      e >>= 1;
    }
    Zp z;
    z.v_ = static_cast<std::uint32_t>(result);
    return z;
  }

  constexpr Zp& operator+=(Zp o) { v_ = static_cast<std::uint32_t>((std::uint64_t(v_) + o.v_) % P); return *this; }
  constexpr Zp& operator-=(Zp o) { v_ = static_cast<std::uint32_t>((std::uint64_t(v_) + P - o.v_) % P); return *this; }
  constexpr Zp& operator*=(Zp o) { v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % P); return *this; }
  constexpr Zp& operator/=(Zp o) { return *this *= o.inverse(); }

  friend constexpr Zp operator+(Zp a, Zp b) { return a += b; }
  friend constexpr Zp operator-(Zp a, Zp b) { return a -= b; }
  friend constexpr Zp operator*(Zp a, Zp b) { return a *= b; }
  friend constexpr Zp operator/(Zp a, Zp b) { return a /= b; }
  friend constexpr Zp operator-(Zp a) { return Zp() - a; }
  friend constexpr bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Zp a, Zp b) { return a.v_ != b.v_; }
  friend std::ostream& operator<<(std::ostream& os, Zp z) { return os << z.v_; }

 private:
  static constexpr std::uint32_t reduce(long long x) {
    long long r = x % static_cast<long long>(P);
    if (r < 0) r += P;
    return static_cast<std::uint32_t>(r);
  }
  std::uint32_t v_ = 0;
};

using F2 = Zp<2>;
using F3 = Zp<3>;
using F5 = Zp<5>;
using F7 = Zp<7>;

// Uniform scalar interface used by the templated code.
template <class S> struct field_traits;

template <> struct field_traits<Rational> {
  static constexpr std::uint32_t characteristic = 0;
  static std::string name() { return "Q"; }
  static Rational from_rational(const Rational& r) { return r; }
  static std::string to_string(const Rational& r) { return r.to_string(); }
};

template <std::uint32_t P> struct field_traits<Zp<P>> {
  static constexpr std::uint32_t characteristic = P;
  static std::string name() { return "F" + std::to_string(P); }
  static Zp<P> from_rational(const Rational& r) { return Zp<P>::from_rational(r); }
  static std::string to_string(const Zp<P>& z) { return std::to_string(z.value()); }
};

template <class S> inline bool is_zero(const S& s) { return s.is_zero(); }
template <class S> inline S inverse(const S& s) { return s.inverse(); }

/// Which field the computation runs over.
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);
  /// Accepts "q", "Q", "f2", "F3", "gf5" ...
  static FieldSpec parse(std::string_view text);

  std::string name() const;
  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.kind == b.kind && a.p == b.p; }
};

template <class S> FieldSpec field_spec_of() {
  if constexpr (field_traits<S>::characteristic == 0) return FieldSpec::rationals();
  else return FieldSpec::prime(field_traits<S>::characteristic);
}

/// Runs `fn(S{})` with S the scalar type for `field`.
/// Prime fields are instantiated for p in {2, 3, 5, 7}.
template <class Fn>
decltype(auto) dispatch_field(const FieldSpec& field, Fn&& fn) {
  if (field.kind == FieldSpec::Kind::rationals) return fn(Rational{});
  switch (field.p) {
    case 2: return fn(F2{});
    case 3: return fn(F3{});
    case 5: return fn(F5{});
    case 7: return fn(F7{});
    default:
      throw std::invalid_argument("no scalar type compiled for " + field.name() +
                                  " (available: Q, F2, F3, F5, F7)");
  }
}

}  // namespace skewgentle

namespace Eigen {

template <> struct NumTraits<skewgentle::Rational> : GenericNumTraits<skewgentle::Rational> {
  using Real = skewgentle::Rational;
  using NonInteger = skewgentle::Rational;
  using Nested = skewgentle::Rational;
  using Literal = skewgentle::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(0); }
  static inline Real lowest() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline int digits() { return 0; }
  static inline int max_digits10() { return 0; }
};

template <std::uint32_t P> struct NumTraits<skewgentle::Zp<P>> : GenericNumTraits<skewgentle::Zp<P>> {
  using Real = skewgentle::Zp<P>;
  using NonInteger = skewgentle::Zp<P>;
  using Nested = skewgentle::Zp<P>;
  using Literal = skewgentle::Zp<P>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(P - 1); }
  static inline Real lowest() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline int digits() { return 0; }
  static inline int max_digits10() { return 0; }
};

}  // namespace Eigen
