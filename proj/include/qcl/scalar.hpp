#pragma once

#include "qcl/rational_fn.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>

namespace qcl {

/// a + b*s in Q(q, c)[s] / (s^2 - q - q^{-1}).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT
  Scalar(const RationalFn& a) : a_(a) {}  // NOLINT
  Scalar(const RationalFn& a, const RationalFn& b) : a_(a), b_(b) {}
  explicit Scalar(const mpq_class& v) : a_(RationalFn::from_rational(v)) {}

  static Scalar q_pow(int e) { return Scalar(RationalFn::q_pow(e)); }
  static Scalar c_pow(int e) { return Scalar(RationalFn::c_pow(e)); }
  static Scalar s() { return Scalar(RationalFn(), RationalFn(1)); }
  /// s^2 as an element of Q(q, c).
  static const RationalFn& radicand();

  const RationalFn& a() const { return a_; }
  const RationalFn& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  bool has_s() const { return !b_.is_zero(); }

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  std::string to_string() const;

 private:
  RationalFn a_;
  RationalFn b_;
};

/// a + b*sqrt(r) with rational a, b, r. r == 0 marks "no radical attached",
/// in which case b is 0. Elements with different nonzero r never meet.
class QuadRational {
 public:
  QuadRational() = default;
  QuadRational(long v) : a_(v) {}  // NOLINT
  explicit QuadRational(const mpq_class& a) : a_(a) {}
  QuadRational(const mpq_class& a, const mpq_class& b, const mpq_class& r);

  /// sqrt(r), folded into the rational part when r is a perfect square.
  static QuadRational sqrt_of(const mpq_class& r);

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  const mpq_class& r() const { return r_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  bool has_s() const { return b_ != 0; }

  QuadRational operator-() const;
  QuadRational inverse() const;
  QuadRational& operator+=(const QuadRational& o);
  QuadRational& operator-=(const QuadRational& o) { return *this += -o; }
  QuadRational& operator*=(const QuadRational& o);
  QuadRational& operator/=(const QuadRational& o) { return *this *= o.inverse(); }
  friend QuadRational operator+(QuadRational x, const QuadRational& y) { return x += y; }
  friend QuadRational operator-(QuadRational x, const QuadRational& y) { return x -= y; }
  friend QuadRational operator*(QuadRational x, const QuadRational& y) { return x *= y; }
  friend QuadRational operator/(QuadRational x, const QuadRational& y) { return x /= y; }
  friend bool operator==(const QuadRational& x, const QuadRational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadRational& x, const QuadRational& y) { return !(x == y); }

  std::string to_string() const;

 private:
  void merge_radical(const QuadRational& o);

  mpq_class a_ = 0;
  mpq_class b_ = 0;
  mpq_class r_ = 0;
};

enum class CMode { Symbolic, Value, Zero };

/// Specialization point for the exact numeric backend.
struct EvalPoint {
  mpq_class q;
  mpq_class c;
};

/// Parameters of the coefficient field as seen by the algebra code.
template <class F>
struct FieldParams {
  F q;
  F q_inv;
  F c;
  F s;  // sqrt(q + q^{-1})
  CMode cmode = CMode::Symbolic;
  std::optional<EvalPoint> point;  // set for the numeric backend

  F qp(int e) const;
  F qhat_plus() const { return q + q_inv; }
  F qhat_minus() const { return q - q_inv; }
};

template <>
Scalar FieldParams<Scalar>::qp(int e) const;
template <>
QuadRational FieldParams<QuadRational>::qp(int e) const;

/// Symbolic parameters; cmode Value uses c_value for c.
FieldParams<Scalar> symbolic_params(CMode cmode = CMode::Symbolic, const mpq_class& c_value = 0);
/// Numeric parameters; cmode Zero ignores p.c.
FieldParams<QuadRational> numeric_params(const EvalPoint& p, CMode cmode = CMode::Value);

QuadRational evaluate(const Scalar& x, const EvalPoint& at);
/// Maps a symbolic scalar onto the field described by params; identity for
/// Scalar, specialization for QuadRational.
template <class F>
F convert(const Scalar& x, const FieldParams<F>& params);

template <>
Scalar convert(const Scalar& x, const FieldParams<Scalar>& params);
template <>
QuadRational convert(const Scalar& x, const FieldParams<QuadRational>& params);

template <class F>
F power(const F& x, int e);

/// [m] = (1 - q^{-4m}) / (1 - q^{-4}).
template <class F>
F qnum(const FieldParams<F>& p, int m);
template <class F>
F qfact(const FieldParams<F>& p, int m);
template <class F>
F qbinom(const FieldParams<F>& p, int m, int k);
/// Same as qbinom with q^2 replaced by q, built from (1 - q^{-2m}) / (1 - q^{-2}).
template <class F>
F qbinom_base_q(const FieldParams<F>& p, int m, int k);

Scalar qnum(int m);
Scalar qfact(int m);
Scalar qbinom(int m, int k);
Scalar qbinom_base_q(int m, int k);

inline std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const QuadRational& x) { return os << x.to_string(); }

}  // namespace qcl

namespace Eigen {

template <>
struct NumTraits<qcl::Scalar> : GenericNumTraits<qcl::Scalar> {
  using Real = qcl::Scalar;
  using NonInteger = qcl::Scalar;
  using Literal = qcl::Scalar;
  using Nested = qcl::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 200,
    MulCost = 200
  };
  static qcl::Scalar epsilon() { return 0; }
  static qcl::Scalar dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<qcl::QuadRational> : GenericNumTraits<qcl::QuadRational> {
  using Real = qcl::QuadRational;
  using NonInteger = qcl::QuadRational;
  using Literal = qcl::QuadRational;
  using Nested = qcl::QuadRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 5,
    AddCost = 20,
    MulCost = 20
  };
  static qcl::QuadRational epsilon() { return 0; }
  static qcl::QuadRational dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace qcl {

template <class F>
using Matrix = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using Vector = Eigen::Matrix<F, Eigen::Dynamic, 1>;

template <class F>
bool is_zero(const Matrix<F>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace qcl
