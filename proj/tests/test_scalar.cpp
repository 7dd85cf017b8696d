#include "doctest.h"
#include "qcl/scalar.hpp"
#include "support.hpp"

using namespace qcl;

namespace {

const Scalar q = Scalar::q_pow(1);
const Scalar qi = Scalar::q_pow(-1);
const Scalar c = Scalar::c_pow(1);

}  // namespace

TEST_CASE("poly gcd and exact division") {
  const Poly x = Poly::monomial(1, 0) + Poly(1);            // q + 1
  const Poly y = Poly::monomial(1, 0) - Poly(1);            // q - 1
  const Poly z = Poly::monomial(0, 1) + Poly::monomial(2, 0);  // c + q^2
  CHECK(gcd(x * y, x * z) == x);
  CHECK(gcd(x * y * z * Poly(6), y * z * Poly(4)) == y * z * Poly(2));
  CHECK(gcd(x, y).is_one());
  CHECK(exact_div(x * y * z, z) == x * y);
  CHECK_THROWS_AS(exact_div(x, y), std::domain_error);
  // Monomials are units.
  CHECK(gcd(x.shifted(3, 1), x.shifted(-2, 0)) == x);
}

TEST_CASE("rational functions are canonical") {
  const RationalFn a(Poly::monomial(2, 0) - Poly(1), Poly::monomial(3, 0) - Poly::monomial(1, 0));
  CHECK(a == RationalFn(Poly::monomial(-1, 0)));
  const RationalFn b(Poly(-2), Poly::monomial(0, 1) * Poly(-4));
  CHECK(b.num() == Poly::monomial(0, -1));
  CHECK(b.den() == Poly(2));
  CHECK_THROWS_AS(RationalFn(Poly(1), Poly()), std::domain_error);
}

TEST_CASE("scalar arithmetic examples") {
  CHECK((q + qi) * (q - qi) == Scalar::q_pow(2) - Scalar::q_pow(-2));
  CHECK(Scalar::s() * Scalar::s() == q + qi);
  const Scalar lhs = (Scalar(1) - Scalar::q_pow(-8)) / (Scalar(1) - Scalar::q_pow(-4));
  CHECK(lhs == Scalar(1) + Scalar::q_pow(-4));
  CHECK(lhs.a().is_laurent());
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
  const Scalar w = Scalar(2) + Scalar::s() * q;
  CHECK(w * w.inverse() == Scalar(1));
}

TEST_CASE("q-numbers") {
  CHECK(qnum(0).is_zero());
  CHECK(qfact(0) == Scalar(1));
  CHECK(qnum(1) == Scalar(1));
  CHECK(qbinom(2, 1) == Scalar(1) + Scalar::q_pow(-4));
  CHECK(qbinom_base_q(2, 1) == Scalar(1) + Scalar::q_pow(-2));
  CHECK_THROWS(qbinom(1, 2));
  for (int m = 0; m <= 8; ++m)
    for (int k = 0; k <= m; ++k) {
      CHECK(qbinom(m, k).a().is_laurent());
      CHECK(qbinom_base_q(m, k).a().is_laurent());
    }
  // Pascal rule for the q^{-4} numbers: [m,k] = [m-1,k-1] + q^{-4k}[m-1,k].
  for (int m = 1; m <= 6; ++m)
    for (int k = 1; k < m; ++k)
      CHECK(qbinom(m, k) == qbinom(m - 1, k - 1) + Scalar::q_pow(-4 * k) * qbinom(m - 1, k));
}

TEST_CASE("evaluation") {
  const EvalPoint at{mpq_class(2), mpq_class(3)};
  CHECK(evaluate(q + qi, at) == QuadRational(mpq_class(5, 2)));
  CHECK(evaluate(Scalar::s() * Scalar::s(), at) == QuadRational(mpq_class(5, 2)));
  CHECK(evaluate(qnum(2), at) == QuadRational(mpq_class(17, 16)));
  CHECK_THROWS_AS(evaluate(Scalar(1) / (q - Scalar(2)), at), std::domain_error);
  // q = 4/1 gives q + 1/q = 17/4, not a square; q = 1/1 is excluded, so try the
  // folding path with a square radicand directly.
  CHECK(QuadRational::sqrt_of(mpq_class(9, 4)) == QuadRational(mpq_class(3, 2)));
}

TEST_CASE("field axioms on random triples") {
  test::Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const Scalar x = test::random_scalar(rng, true);
    const Scalar y = test::random_scalar(rng, true);
    const Scalar z = test::random_scalar(rng, true);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x + y == y + x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
    // Rebuilding from the stored parts is a fixed point.
    CHECK(Scalar(RationalFn(x.a().num(), x.a().den()), RationalFn(x.b().num(), x.b().den())) == x);
  }
}

TEST_CASE("evaluate is a ring homomorphism") {
  test::Rng rng(12);
  const EvalPoint at{mpq_class(5, 3), mpq_class(2)};
  for (int t = 0; t < 60; ++t) {
    const Scalar x = test::random_scalar(rng, true);
    const Scalar y = test::random_scalar(rng, true);
    CHECK(evaluate(x * y, at) == evaluate(x, at) * evaluate(y, at));
    CHECK(evaluate(x + y, at) == evaluate(x, at) + evaluate(y, at));
  }
}
