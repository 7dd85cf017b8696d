#pragma once

#include "qcl/poly.hpp"

#include <string>

namespace qcl {

/// Element of Q(q, c) stored as num/den with integer polynomial parts.
///
/// Canonical form: den has no monomial factor (its minimal q- and
/// c-exponents are 0), gcd(num, den) is a unit, and the leading coefficient
/// of den is positive. Any monomial factor lives in num, which may carry
/// negative exponents. Equality is therefore term-wise equality.
class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(long v) : num_(v), den_(1) {}  // NOLINT
  RationalFn(const Poly& num) : num_(num), den_(1) {}  // NOLINT
  RationalFn(const Poly& num, const Poly& den);

  static RationalFn q_pow(int e) { return RationalFn(Poly::monomial(e, 0)); }
  static RationalFn c_pow(int e) { return RationalFn(Poly::monomial(0, e)); }
  static RationalFn from_rational(const mpq_class& v);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool depends_on_c() const { return num_.depends_on_c() || den_.depends_on_c(); }

  RationalFn operator-() const;
  RationalFn inverse() const;
  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o) { return *this += -o; }
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o) { return *this *= o.inverse(); }
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

  /// Specializes q and c; throws std::domain_error naming the denominator
  /// when it vanishes at the point.
  mpq_class evaluate(const mpq_class& qv, const mpq_class& cv) const;

  std::size_t hash() const { return num_.hash() * 31u + den_.hash(); }
  std::string to_string() const;

 private:
  struct Raw {};
  RationalFn(Raw, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_;
  Poly den_;
};

}  // namespace qcl
