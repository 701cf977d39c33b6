#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace varwit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Ground field: the rationals, or the integers mod a prime.
struct FieldSpec {
  enum class Kind { rationals, prime_field };

  Kind kind = Kind::rationals;
  std::int64_t modulus = 0;  // prime_field only

  static FieldSpec rationals() { return {Kind::rationals, 0}; }

  static FieldSpec gf(std::int64_t p) {
    if (p < 2 || !is_prime(p))
      throw std::invalid_argument("FieldSpec: modulus " + std::to_string(p) +
                                  " is not prime");
    return {Kind::prime_field, p};
  }

  /// Accepts "Q" or "GF(p)".
  static FieldSpec parse(std::string_view s) {
    if (s == "Q") return rationals();
    if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') {
      std::int64_t p = 0;
      try {
        p = std::stoll(std::string(s.substr(3, s.size() - 4)));
      } catch (const std::exception&) {
        throw std::invalid_argument("FieldSpec: cannot parse '" +
                                    std::string(s) + "'");
      }
      return gf(p);
    }
    throw std::invalid_argument("FieldSpec: cannot parse '" + std::string(s) +
                                "' (expected \"Q\" or \"GF(p)\")");
  }

  std::string str() const {
    return kind == Kind::rationals ? "Q" : "GF(" + std::to_string(modulus) + ")";
  }

  std::int64_t characteristic() const {
    return kind == Kind::rationals ? 0 : modulus;
  }

  bool operator==(const FieldSpec&) const = default;

  static bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }
};

/// Exact field element. Rational values are kept in lowest terms with a
/// positive denominator; prime-field values as the canonical residue in [0,p).
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()) {}

  static Scalar zero(const FieldSpec& f) { return of_int(f, 0); }
  static Scalar one(const FieldSpec& f) { return of_int(f, 1); }

  static Scalar of_int(const FieldSpec& f, std::int64_t v) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldSpec::Kind::rationals)
      s.q_ = v;
    else
      s.r_ = mod(v, f.modulus);
    return s;
  }

  static Scalar of_rational(const BigRat& v) {
    Scalar s;
    s.field_ = FieldSpec::rationals();
    s.q_ = v;
    return s;
  }

  /// Parses "7", "-3/4" (rationals) or a decimal residue (prime field).
  static Scalar parse(const FieldSpec& f, std::string_view text) {
    std::string t(text);
    if (f.kind == FieldSpec::Kind::rationals) {
      auto slash = t.find('/');
      try {
        if (slash == std::string::npos) return of_rational(BigRat(BigInt(t)));
        BigInt num(t.substr(0, slash)), den(t.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return of_rational(BigRat(num, den));
      } catch (const std::runtime_error&) {
        throw std::invalid_argument("Scalar: cannot parse '" + t + "'");
      }
    }
    try {
      return of_int(f, std::stoll(t));
    } catch (const std::exception&) {
      throw std::invalid_argument("Scalar: cannot parse residue '" + t + "'");
    }
  }

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return rational() ? q_.is_zero() : r_ == 0; }
  bool is_one() const { return rational() ? q_ == 1 : r_ == 1; }

  Scalar operator+(const Scalar& o) const {
    check(o);
    Scalar s(*this);
    if (rational())
      s.q_ += o.q_;
    else
      s.r_ = mod(r_ + o.r_, field_.modulus);
    return s;
  }

  Scalar operator-(const Scalar& o) const {
    check(o);
    Scalar s(*this);
    if (rational())
      s.q_ -= o.q_;
    else
      s.r_ = mod(r_ - o.r_, field_.modulus);
    return s;
  }

  Scalar operator*(const Scalar& o) const {
    check(o);
    Scalar s(*this);
    if (rational())
      s.q_ *= o.q_;
    else
      s.r_ = mod(r_ * o.r_, field_.modulus);
    return s;
  }

  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar operator-() const {
    Scalar s(*this);
    if (rational())
      s.q_ = -q_;
    else
      s.r_ = mod(-r_, field_.modulus);
    return s;
  }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    Scalar s(*this);
    if (rational())
      s.q_ = 1 / q_;
    else
      s.r_ = mod_inverse(r_, field_.modulus);
    return s;
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const {
    return field_ == o.field_ && (rational() ? q_ == o.q_ : r_ == o.r_);
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Residue value; prime field only.
  std::int64_t residue() const {
    if (rational()) throw std::logic_error("Scalar: residue() on a rational");
    return r_;
  }

  const BigRat& rational_value() const {
    if (!rational()) throw std::logic_error("Scalar: rational_value() on a residue");
    return q_;
  }

  std::string str() const {
    if (!rational()) return std::to_string(r_);
    std::ostringstream o;
    o << q_;
    return o.str();
  }

 private:
  bool rational() const { return field_.kind == FieldSpec::Kind::rationals; }

  void check(const Scalar& o) const {
    if (field_ != o.field_)
      throw std::invalid_argument("Scalar: field mismatch (" + field_.str() +
                                  " vs " + o.field_.str() + ")");
  }

  static std::int64_t mod(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
  }

  // Extended Euclid.
  static std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return mod(t, p);
  }

  FieldSpec field_;
  BigRat q_;
  std::int64_t r_ = 0;
};

}  // namespace varwit
