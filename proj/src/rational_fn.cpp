#include "qcl/rational_fn.hpp"

#include <stdexcept>

namespace qcl {

namespace {

bool unit_gcd(const Poly& g) { return g.is_one(); }

}  // namespace

RationalFn::RationalFn(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RationalFn RationalFn::from_rational(const mpq_class& v) {
  return RationalFn(Poly(v.get_num()), Poly(v.get_den()));
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const int mq = den_.min_q(), mc = den_.min_c();
  if (mq != 0 || mc != 0) {
    den_ = den_.shifted(-mq, -mc);
    num_ = num_.shifted(-mq, -mc);
  }
  if (den_.is_one()) return;
  Poly g = gcd(num_, den_);
  if (!unit_gcd(g)) {
    if (g.is_constant()) {
      const mpz_class k = g.terms()[0].coef;
      num_ = num_.divided_exact(k);
      den_ = den_.divided_exact(k);
    } else {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  if (den_.leading().coef < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFn RationalFn::operator-() const { return RationalFn(Raw{}, -num_, den_); }

RationalFn RationalFn::inverse() const {
  if (num_.is_zero()) throw std::domain_error("division by zero");
  return RationalFn(den_, num_);
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  if (den_.is_one() || o.den_.is_one()) {
    // a + c/d with c/d reduced is already reduced over d.
    if (den_.is_one()) {
      num_ = num_ * o.den_ + o.num_;
      den_ = o.den_;
    } else {
      num_ += o.num_ * den_;
    }
    if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  const Poly g = gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  const Poly b1 = exact_div(den_, g);
  const Poly d1 = exact_div(o.den_, g);
  num_ = num_ * d1 + o.num_ * b1;
  den_ = b1 * o.den_;
  normalize();
  return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFn();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Poly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_one()) {
    const Poly g = gcd(a, d);
    if (!g.is_one()) {
      a = exact_div(a, g);
      d = exact_div(d, g);
    }
  }
  if (!b.is_one()) {
    const Poly g = gcd(c, b);
    if (!g.is_one()) {
      c = exact_div(c, g);
      b = exact_div(b, g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  if (den_.leading().coef < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  // Integer contents may still cancel between the cross factors.
  const mpz_class kn = num_.content(), kd = den_.content();
  mpz_class k;
  mpz_gcd(k.get_mpz_t(), kn.get_mpz_t(), kd.get_mpz_t());
  if (k != 1) {
    num_ = num_.divided_exact(k);
    den_ = den_.divided_exact(k);
  }
  return *this;
}

mpq_class RationalFn::evaluate(const mpq_class& qv, const mpq_class& cv) const {
  const mpq_class d = den_.evaluate(qv, cv);
  if (d == 0)
    throw std::domain_error("denominator " + den_.to_string() + " vanishes at q=" + qv.get_str() +
                            ", c=" + cv.get_str());
  return num_.evaluate(qv, cv) / d;
}

std::string RationalFn::to_string() const {
  if (den_.is_one()) return num_.to_string();
  const std::string n = num_.is_monomial() || num_.is_constant() ? num_.to_string() : "(" + num_.to_string() + ")";
  const std::string d = den_.is_monomial() ? den_.to_string() : "(" + den_.to_string() + ")";
  return n + "/" + d;
}

}  // namespace qcl
