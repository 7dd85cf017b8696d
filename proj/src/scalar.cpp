#include "qcl/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace qcl {

namespace {

bool rational_sqrt(const mpq_class& r, mpq_class& root) {
  if (r < 0) return false;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
    return false;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
  root = mpq_class(n, d);
  root.canonicalize();
  return true;
}

RationalFn subst_c(const Poly& p, const mpq_class& cv) {
  RationalFn acc;
  for (const auto& t : p.terms()) {
    if (t.c < 0 && cv == 0) throw std::domain_error("negative power of c at c = 0");
    mpq_class f = 1;
    for (int i = 0; i < (t.c < 0 ? -t.c : t.c); ++i) f *= cv;
    if (t.c < 0) f = 1 / f;
    f *= mpq_class(t.coef);
    acc += RationalFn(Poly::monomial(t.q, 0, f.get_num()), Poly(f.get_den()));
  }
  return acc;
}

RationalFn subst_c(const RationalFn& x, const mpq_class& cv) {
  const RationalFn d = subst_c(x.den(), cv);
  if (d.is_zero()) throw std::domain_error("denominator " + x.den().to_string() + " vanishes at c=" + cv.get_str());
  return subst_c(x.num(), cv) / d;
}

}  // namespace

const RationalFn& Scalar::radicand() {
  static const RationalFn r(Poly::monomial(1, 0) + Poly::monomial(-1, 0));
  return r;
}

Scalar Scalar::inverse() const {
  if (b_.is_zero()) return Scalar(a_.inverse());
  const RationalFn norm = a_ * a_ - b_ * b_ * radicand();
  const RationalFn ni = norm.inverse();
  return Scalar(a_ * ni, -(b_ * ni));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  if (!o.b_.is_zero()) b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  if (!o.b_.is_zero()) b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    return *this;
  }
  RationalFn na = a_ * o.a_;
  if (!b_.is_zero() && !o.b_.is_zero()) na += b_ * o.b_ * radicand();
  RationalFn nb;
  if (!o.b_.is_zero()) nb += a_ * o.b_;
  if (!b_.is_zero()) nb += b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

std::string Scalar::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string bs = b_.is_one() ? "s" : "(" + b_.to_string() + ")*s";
  if (a_.is_zero()) return bs;
  return a_.to_string() + " + " + bs;
}

QuadRational::QuadRational(const mpq_class& a, const mpq_class& b, const mpq_class& r)
    : a_(a), b_(b), r_(r) {
  if (b_ != 0) {
    mpq_class root;
    if (rational_sqrt(r_, root)) {
      a_ += b_ * root;
      b_ = 0;
      r_ = 0;
    } else if (r_ == 0) {
      b_ = 0;
    }
  }
  if (b_ == 0) r_ = 0;
}

QuadRational QuadRational::sqrt_of(const mpq_class& r) { return QuadRational(0, 1, r); }

void QuadRational::merge_radical(const QuadRational& o) {
  if (o.b_ == 0) return;
  if (b_ == 0) {
    r_ = o.r_;
    return;
  }
  if (r_ != o.r_) throw std::logic_error("QuadRational: mismatched radicands");
}

QuadRational QuadRational::operator-() const {
  QuadRational x = *this;
  x.a_ = -x.a_;
  x.b_ = -x.b_;
  return x;
}

QuadRational QuadRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (b_ == 0) return QuadRational(mpq_class(1 / a_));
  const mpq_class norm = a_ * a_ - b_ * b_ * r_;
  return QuadRational(a_ / norm, -b_ / norm, r_);
}

QuadRational& QuadRational::operator+=(const QuadRational& o) {
  merge_radical(o);
  a_ += o.a_;
  b_ += o.b_;
  if (b_ == 0) r_ = 0;
  return *this;
}

QuadRational& QuadRational::operator*=(const QuadRational& o) {
  merge_radical(o);
  if (b_ == 0 && o.b_ == 0) {
    a_ *= o.a_;
    return *this;
  }
  const mpq_class na = a_ * o.a_ + b_ * o.b_ * r_;
  const mpq_class nb = a_ * o.b_ + b_ * o.a_;
  a_ = na;
  b_ = nb;
  if (b_ == 0) r_ = 0;
  return *this;
}

std::string QuadRational::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string bs = (b_ == 1 ? std::string() : b_.get_str() + "*") + "sqrt(" + r_.get_str() + ")";
  if (a_ == 0) return bs;
  return a_.get_str() + " + " + bs;
}

template <>
Scalar FieldParams<Scalar>::qp(int e) const {
  return Scalar::q_pow(e);
}

template <>
QuadRational FieldParams<QuadRational>::qp(int e) const {
  return power(q, e);
}

FieldParams<Scalar> symbolic_params(CMode cmode, const mpq_class& c_value) {
  FieldParams<Scalar> p;
  p.q = Scalar::q_pow(1);
  p.q_inv = Scalar::q_pow(-1);
  p.s = Scalar::s();
  p.cmode = cmode;
  switch (cmode) {
    case CMode::Symbolic: p.c = Scalar::c_pow(1); break;
    case CMode::Value: p.c = Scalar(c_value); break;
    case CMode::Zero: p.c = Scalar(0); break;
  }
  return p;
}

FieldParams<QuadRational> numeric_params(const EvalPoint& at, CMode cmode) {
  if (at.q == 0 || at.q == 1 || at.q == -1) throw std::invalid_argument("q must not be 0 or ±1");
  if (cmode == CMode::Symbolic) throw std::invalid_argument("numeric backend needs a value for c");
  FieldParams<QuadRational> p;
  p.q = QuadRational(at.q);
  p.q_inv = QuadRational(mpq_class(1 / at.q));
  p.c = cmode == CMode::Zero ? QuadRational(0) : QuadRational(at.c);
  p.s = QuadRational::sqrt_of(at.q + 1 / at.q);
  p.cmode = cmode;
  p.point = EvalPoint{at.q, cmode == CMode::Zero ? mpq_class(0) : at.c};
  return p;
}

QuadRational evaluate(const Scalar& x, const EvalPoint& at) {
  const mpq_class r = at.q + 1 / at.q;
  const mpq_class a = x.a().evaluate(at.q, at.c);
  if (x.b().is_zero()) return QuadRational(a);
  return QuadRational(a, x.b().evaluate(at.q, at.c), r);
}

template <>
Scalar convert(const Scalar& x, const FieldParams<Scalar>& p) {
  switch (p.cmode) {
    case CMode::Symbolic: return x;
    case CMode::Value: {
      if (!x.a().depends_on_c() && !x.b().depends_on_c()) return x;
      return Scalar(subst_c(x.a(), p.c.a().evaluate(1, 0)), subst_c(x.b(), p.c.a().evaluate(1, 0)));
    }
    case CMode::Zero:
      if (!x.a().depends_on_c() && !x.b().depends_on_c()) return x;
      return Scalar(subst_c(x.a(), 0), subst_c(x.b(), 0));
  }
  return x;
}

template <>
QuadRational convert(const Scalar& x, const FieldParams<QuadRational>& p) {
  return evaluate(x, *p.point);
}

template <class F>
F power(const F& x, int e) {
  if (e < 0) return power(x.inverse(), -e);
  F result(1), base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

template <class F>
F qnum(const FieldParams<F>& p, int m) {
  if (m < 0) throw std::invalid_argument("qnum: negative argument");
  F acc(0);
  for (int k = 0; k < m; ++k) acc += p.qp(-4 * k);
  return acc;
}

template <class F>
F qfact(const FieldParams<F>& p, int m) {
  F acc(1);
  for (int k = 1; k <= m; ++k) acc *= qnum(p, k);
  return acc;
}

template <class F>
F qbinom(const FieldParams<F>& p, int m, int k) {
  if (k < 0 || k > m) throw std::invalid_argument("qbinom: need 0 <= p <= m");
  return qfact(p, m) / (qfact(p, k) * qfact(p, m - k));
}

template <class F>
F qbinom_base_q(const FieldParams<F>& p, int m, int k) {
  if (k < 0 || k > m) throw std::invalid_argument("qbinom_base_q: need 0 <= p <= m");
  auto num = [&](int j) {
    F acc(0);
    for (int i = 0; i < j; ++i) acc += p.qp(-2 * i);
    return acc;
  };
  auto fact = [&](int j) {
    F acc(1);
    for (int i = 1; i <= j; ++i) acc *= num(i);
    return acc;
  };
  return fact(m) / (fact(k) * fact(m - k));
}

#define QCL_INSTANTIATE(F)                                   \
  template F power<F>(const F&, int);                        \
  template F qnum<F>(const FieldParams<F>&, int);            \
  template F qfact<F>(const FieldParams<F>&, int);           \
  template F qbinom<F>(const FieldParams<F>&, int, int);     \
  template F qbinom_base_q<F>(const FieldParams<F>&, int, int);

QCL_INSTANTIATE(Scalar)
QCL_INSTANTIATE(QuadRational)

namespace {
const FieldParams<Scalar>& sym() {
  static const FieldParams<Scalar> p = symbolic_params();
  return p;
}
}  // namespace

Scalar qnum(int m) { return qnum(sym(), m); }
Scalar qfact(int m) { return qfact(sym(), m); }
Scalar qbinom(int m, int k) { return qbinom(sym(), m, k); }
Scalar qbinom_base_q(int m, int k) { return qbinom_base_q(sym(), m, k); }

}  // namespace qcl
