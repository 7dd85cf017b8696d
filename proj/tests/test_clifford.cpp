#include "doctest.h"
#include "oracle.hpp"
#include "qcl/clifford.hpp"
#include "support.hpp"

using namespace qcl;

namespace {

using El = CliffordElement<Scalar>;

const Scalar q = Scalar::q_pow(1);
const Scalar qi = Scalar::q_pow(-1);
const Scalar c = Scalar::c_pow(1);

ContextPtr<Scalar> sym(int N) { return AlgebraContext<Scalar>::create(N, symbolic_params()); }

Monomial mask(std::initializer_list<int> gens) {
  Monomial m = 0;
  for (int i : gens) m |= gen_mask(i);
  return m;
}

El mono(const ContextPtr<Scalar>& ctx, std::initializer_list<int> gens, const Scalar& v = Scalar(1)) {
  return El::monomial(ctx, mask(gens), v);
}

}  // namespace

TEST_CASE("rewrite examples") {
  auto c3 = sym(3);
  CHECK(rewrite({3, 1}, c3) == -mono(c3, {1, 3}) + El::scalar(c3, c * c * q * q * (q + qi)));
  CHECK(rewrite({2, 2}, c3) == mono(c3, {1, 3}, q - qi) + El::scalar(c3, c * c));
  auto c4 = sym(4);
  CHECK(rewrite({2, 1}, c4) == mono(c4, {1, 2}, -q * q));
  CHECK(rewrite({1, 1}, c4).is_zero());
  CHECK_THROWS_AS(rewrite({0, 1}, c4), std::out_of_range);
  CHECK_THROWS_AS(rewrite({5}, c4), std::out_of_range);
  CHECK(multiply(mono(c3, {1, 3}), El::gen(c3, 3)).is_zero());
  const El x = mono(c3, {1, 2}, q) + El::gen(c3, 3);
  CHECK(El::one(c3) * x == x);
}

TEST_CASE("engine agrees with leftmost-first rewriting") {
  test::Rng rng(11);
  for (int N = 3; N <= 6; ++N) {
    auto ctx = sym(N);
    for (int t = 0; t < 40; ++t) {
      std::vector<int> w(static_cast<std::size_t>(test::uniform(rng, 1, 5)));
      for (auto& i : w) i = test::uniform(rng, 1, N);
      const auto expect = test::word_rewrite(w, ctx->params(), N);
      CHECK(rewrite(w, ctx) == El(ctx, expect));
    }
  }
}

TEST_CASE("normal form is a fixed point and products are associative") {
  test::Rng rng(5);
  for (int N = 3; N <= 5; ++N) {
    auto ctx = sym(N);
    const Monomial top = Monomial(1) << N;
    for (Monomial a = 0; a < top; ++a) {
      const El x = El::monomial(ctx, a);
      const auto idx = indices(a);
      CHECK(rewrite(idx, ctx) == x);
    }
    for (int t = 0; t < 60; ++t) {
      const El x = El::monomial(ctx, Monomial(test::uniform(rng, 0, int(top) - 1)));
      const El y = El::monomial(ctx, Monomial(test::uniform(rng, 0, int(top) - 1)));
      const El z = El::monomial(ctx, Monomial(test::uniform(rng, 0, int(top) - 1)));
      CHECK((x * y) * z == x * (y * z));
    }
  }
}

TEST_CASE("degrees") {
  auto c4 = sym(4);
  CHECK(degree(mono(c4, {1, 2}), DegreeKind::Parity) == 0);
  CHECK(degree(El::gen(c4, 1), DegreeKind::Charge, 1) == 1);
  CHECK(degree(El::gen(c4, 4), DegreeKind::Charge, 1) == -1);
  CHECK(!degree(El::gen(c4, 1) + El::gen(c4, 2), DegreeKind::Charge, 1).has_value());
  CHECK_THROWS(degree(El::gen(c4, 1), DegreeKind::Middle));
  auto c5 = sym(5);
  CHECK(degree(El::gen(c5, 3), DegreeKind::Middle) == 1);
  // Relations are homogeneous, so products of homogeneous elements stay homogeneous.
  for (Monomial a = 0; a < 32; ++a)
    for (Monomial b = 0; b < 32; b += 3) {
      const El p = El::monomial(c5, a) * El::monomial(c5, b);
      if (p.is_zero()) continue;
      for (int k = 1; k <= 2; ++k)
        CHECK(degree(p, DegreeKind::Charge, k) ==
              monomial_degree(a, 5, DegreeKind::Charge, k) + monomial_degree(b, 5, DegreeKind::Charge, k));
      CHECK(degree(p, DegreeKind::Parity) == (popcount(a) + popcount(b)) % 2);
    }
}

TEST_CASE("tau and scaling automorphisms") {
  for (int N = 3; N <= 4; ++N) {
    auto ctx = sym(N);
    CHECK(tau(El::gen(ctx, 1)) == El::gen(ctx, N));
    CHECK(tau(mono(ctx, {1, 2})) == rewrite({N - 1, N}, ctx));
    const Monomial top = Monomial(1) << N;
    for (Monomial a = 0; a < top; ++a) {
      const El x = El::monomial(ctx, a);
      CHECK(tau(tau(x)) == x);
      for (Monomial b = 0; b < top; ++b) {
        const El y = El::monomial(ctx, b);
        CHECK(tau(x * y) == tau(y) * tau(x));
      }
    }
  }
  auto c4 = sym(4);
  const std::vector<Scalar> alpha{q, Scalar(2), Scalar(1) / Scalar(2), qi};
  for (Monomial a = 0; a < 16; ++a)
    for (Monomial b = 0; b < 16; ++b) {
      const El x = El::monomial(c4, a), y = El::monomial(c4, b);
      CHECK(scale_auto(x * y, alpha) == scale_auto(x, alpha) * scale_auto(y, alpha));
    }
  CHECK_THROWS_AS(scale_auto(El::gen(c4, 1), std::vector<Scalar>{q, q, q, q}), std::invalid_argument);
}

TEST_CASE("rescaling c is an isomorphism onto c = 1") {
  for (int N = 3; N <= 5; ++N) {
    auto cs = sym(N);
    auto c1 = AlgebraContext<Scalar>::create(N, symbolic_params(CMode::Value, 1));
    for (int a = 1; a <= N; ++a)
      for (int b = 1; b <= N; ++b) {
        El lhs(c1);
        const El rel = rewrite({a, b}, cs);
        for (const auto& [m, v] : rel.terms()) lhs.add_term(m, v * Scalar::c_pow(popcount(m)));
        CHECK(lhs == rewrite({a, b}, c1) * (c * c));
      }
  }
}

TEST_CASE("zero-charge subalgebra is commutative") {
  for (int N = 3; N <= 5; ++N) {
    auto ctx = sym(N);
    std::vector<El> basis;
    for (Monomial m = 0; m < (Monomial(1) << N); ++m) {
      bool neutral = true;
      for (int k = 1; k <= N / 2; ++k) neutral = neutral && monomial_degree(m, N, DegreeKind::Charge, k) == 0;
      if (neutral) basis.push_back(El::monomial(ctx, m));
    }
    for (const auto& x : basis)
      for (const auto& y : basis) CHECK(x * y == y * x);
  }
}

TEST_CASE("minimal left ideals") {
  auto c3 = sym(3);
  for (int nu : {1, -1}) {
    const El p = phi(nu, c3);
    CHECK(p == mono(c3, {3}, Scalar(nu) * c) + mono(c3, {2, 3}));
    CHECK(El::gen(c3, 2) * p == p * (Scalar(nu) * c));
    CHECK(El::gen(c3, 3) * p == El(c3));
    const auto co = coords_in_ideal(p, nu);
    REQUIRE(co.size() == 2);
    CHECK(co[0] == Scalar(1));
    CHECK(co[1].is_zero());
    // Left multiplication by the F_1 image, q^{-1} s / (c^2 (q + q^{-1})) g1g2.
    const El f1 = mono(c3, {1, 2}, qi * Scalar::s() / (c * c * (q + qi)));
    const auto cf = coords_in_ideal(f1 * p, nu);
    CHECK(cf[0].is_zero());
    CHECK(cf[1] == Scalar(nu) * qi / (c * Scalar::s()));
    CHECK_THROWS_AS(coords_in_ideal(El::one(c3), nu), std::domain_error);
  }
  CHECK_THROWS_AS(phi(-1, sym(4)), std::invalid_argument);
  CHECK_THROWS_AS(rho(1, sym(4)), std::invalid_argument);
  for (int N = 3; N <= 6; ++N) {
    auto ctx = sym(N);
    CHECK(ideal_basis(1, ctx).size() == (std::size_t(1) << (N / 2)));
    for (int nu : (ctx->odd() ? std::vector<int>{1, -1} : std::vector<int>{1})) {
      const El p = phi(nu, ctx);
      for (int k = 1; k <= N; ++k)
        if (k > ctx->prime(k)) CHECK((El::gen(ctx, k) * p).is_zero());
      if (ctx->odd()) CHECK(El::gen(ctx, ctx->n() + 1) * p == p * (Scalar(nu) * c));
    }
  }
}

TEST_CASE("rho squares") {
  for (int N : {3, 5}) {
    auto ctx = sym(N);
    const int n = N / 2;
    for (int eta : {1, -1}) {
      const El r = rho(eta, ctx);
      const Scalar f = Scalar(2 * eta) * Scalar::c_pow(2 * n + 1) * Scalar::q_pow(n * (n + 1)) * power(q + qi, n);
      CHECK(r * r == r * f);
    }
  }
}

TEST_CASE("central elements") {
  auto c3 = sym(3);
  const El z = z1(c3);
  CHECK(z == (El::gen(c3, 2) + mono(c3, {1, 2, 3}, qi / (c * c))) * c.inverse());
  for (int eta : {1, -1}) CHECK(z * phi(eta, c3) == phi(eta, c3) * Scalar(eta));
  for (int N = 3; N <= 6; ++N) {
    auto ctx = sym(N);
    const El ze = ctx->odd() ? z1(ctx) : z0(ctx);
    CHECK(ze * ze == El::one(ctx));
    for (int i = 1; i <= N; ++i) {
      const El g = El::gen(ctx, i);
      CHECK(ze * g == (ctx->odd() ? g * ze : -(g * ze)));
    }
  }
  auto c4 = sym(4);
  const El z0e = z0(c4);
  for (const auto& b : ideal_basis(1, c4)) {
    const int par = *degree(b, DegreeKind::Parity);
    CHECK(z0e * b == b * Scalar(par == 0 ? 1 : -1));
  }
  CHECK_THROWS(z0(c3));
  CHECK_THROWS(z1(c4));
  CHECK_THROWS(z_central(std::vector<Scalar>{Scalar(0), Scalar(1)}, 0, c4));
}

TEST_CASE("closed-form central elements commute as prescribed") {
  test::Rng rng(3);
  for (int N = 3; N <= 5; ++N) {
    auto ctx = sym(N);
    for (int eta_hat = 0; eta_hat <= (N % 2); ++eta_hat)
      for (int t = 0; t < 4; ++t) {
        std::vector<Scalar> mu;
        for (int i = 0; i < N / 2; ++i) mu.emplace_back(test::random_rational(rng));
        const El z = z_central(mu, eta_hat, ctx);
        const auto full = extend_mu(mu, N);
        for (int i = 1; i <= N; ++i) {
          const El g = El::gen(ctx, i);
          CHECK(z * g == (g * z) * full[i - 1]);
        }
      }
  }
}

TEST_CASE("centralizer spaces") {
  auto c4 = sym(4);
  const std::vector<Scalar> one{Scalar(1), Scalar(1)};
  auto sol = centralizer_solve(one, 0, c4);
  REQUIRE(sol.size() == 1);
  const El z = z_central(one, 0, c4);
  const Scalar ratio = z.coefficient(0) / sol[0].coefficient(0);
  CHECK(sol[0] * ratio == z);
  CHECK(centralizer_solve(one, 1, c4).empty());
  CHECK(centralizer_solve(std::vector<Scalar>{q, q * q}, 1, c4).empty());
  auto c3 = sym(3);
  for (int eta_hat : {0, 1}) {
    const std::vector<Scalar> mu{q * q};
    auto s3 = centralizer_solve(mu, eta_hat, c3);
    REQUIRE(s3.size() == 1);
    const El z3 = z_central(mu, eta_hat, c3);
    const Monomial lead = z3.terms().begin()->first;
    CHECK(s3[0] * (z3.coefficient(lead) / s3[0].coefficient(lead)) == z3);
  }
}

TEST_CASE("specialized backend matches evaluation of symbolic products") {
  test::Rng rng(17);
  const EvalPoint pt{mpq_class(5, 3), mpq_class(2)};
  for (int N = 3; N <= 5; ++N) {
    auto cs = sym(N);
    auto cn = AlgebraContext<QuadRational>::create(N, numeric_params(pt));
    for (int t = 0; t < 30; ++t) {
      const Monomial a = Monomial(test::uniform(rng, 0, (1 << N) - 1));
      const Monomial b = Monomial(test::uniform(rng, 0, (1 << N) - 1));
      const auto sym_prod = El::monomial(cs, a) * El::monomial(cs, b);
      const auto num_prod = CliffordElement<QuadRational>::monomial(cn, a) * CliffordElement<QuadRational>::monomial(cn, b);
      CHECK(convert(sym_prod, cn) == num_prod);
    }
  }
}
