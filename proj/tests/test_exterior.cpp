#include "doctest.h"
#include "qcl/exterior.hpp"
#include "support.hpp"

using namespace qcl;

namespace {

using El = CliffordElement<Scalar>;

const Scalar q = Scalar::q_pow(1);
const Scalar qi = Scalar::q_pow(-1);
const Scalar c = Scalar::c_pow(1);

FockRepresentation<Scalar> sym_fock(int N) {
  return FockRepresentation<Scalar>(BraidContext<Scalar>::create(AlgebraContext<Scalar>::create(N, symbolic_params())));
}

El random_element(test::Rng& rng, const ContextPtr<Scalar>& ctx, int terms) {
  El x(ctx);
  for (int t = 0; t < terms; ++t)
    x.add_term(Monomial(test::uniform(rng, 0, (1 << ctx->N()) - 1)), Scalar(test::random_rational(rng)));
  return x;
}

}  // namespace

TEST_CASE("wedge products") {
  const auto f3 = sym_fock(3);
  const auto ext = f3.braid()->exterior();
  const El g1 = El::gen(ext, 1), g3 = El::gen(ext, 3);
  CHECK(wedge(g1, g1).is_zero());
  CHECK(wedge(g3, g1) == -El::monomial(ext, gen_mask(1) | gen_mask(3)));
  CHECK_THROWS_AS(wedge(El::gen(f3.braid()->algebra(), 1), El::gen(f3.braid()->algebra(), 2)), std::invalid_argument);
  int deg2 = 0;
  for (Monomial m = 0; m < 16; ++m) deg2 += popcount(m) == 2;
  CHECK(deg2 == 6);
}

TEST_CASE("Fock action examples") {
  const auto f3 = sym_fock(3);
  const auto ext = f3.braid()->exterior();
  const auto one = El::one(ext);
  for (int i = 1; i <= 3; ++i) CHECK(f3.fock_act(i, one) == El::gen(ext, i));
  CHECK(f3.fock_act(1, El::gen(ext, 3)) == El::monomial(ext, gen_mask(1) | gen_mask(3)) + El::scalar(ext, c * c * q));
  for (int N = 3; N <= 4; ++N) {
    const auto f = sym_fock(N);
    const auto e = f.braid()->exterior();
    El acc(e);
    for (int i = 1; i <= N; ++i) {
      const int j = N + 1 - i;
      acc += f.fock_act(i, f.fock_act(j, El::one(e))) * f.braid()->metric().C(i, j);
    }
    CHECK(acc == El::scalar(e, c * c * qi * (Scalar::q_pow(2 * N) - Scalar(1)) / (q - qi)));
  }
}

TEST_CASE("generator matrices satisfy the defining relations") {
  for (int N = 3; N <= 4; ++N) {
    const auto f = sym_fock(N);
    const auto& b = *f.braid();
    const Eigen::Index dim = Eigen::Index(1) << N;
    for (int col = 0; col < N * N; ++col) {
      Matrix<Scalar> acc = Matrix<Scalar>::Constant(dim, dim, Scalar(0));
      for (const auto& [row, v] : b.p_plus()->cols[static_cast<std::size_t>(col)])
        acc += v * Matrix<Scalar>(f.gamma(row / N + 1) * f.gamma(row % N + 1));
      CHECK(is_zero(acc));
    }
    Matrix<Scalar> cc = Matrix<Scalar>::Constant(dim, dim, Scalar(0));
    for (int i = 1; i <= N; ++i)
      cc += b.metric().C(i, N + 1 - i) * Matrix<Scalar>(f.gamma(i) * f.gamma(N + 1 - i));
    const Scalar val = c * c * (Scalar::q_pow(2 * N) - Scalar(1)) / (Scalar::q_pow(2) - Scalar(1));
    CHECK(cc == Matrix<Scalar>(val * Matrix<Scalar>::Identity(dim, dim)));
  }
}

TEST_CASE("module property, triangularity and faithfulness") {
  test::Rng rng(31);
  for (int N = 3; N <= 4; ++N) {
    const auto f = sym_fock(N);
    const auto ctx = f.braid()->algebra();
    const auto ext = f.braid()->exterior();
    for (int t = 0; t < 10; ++t) {
      const El x = random_element(rng, ctx, 2), y = random_element(rng, ctx, 2);
      const El rho = El::monomial(ext, Monomial(test::uniform(rng, 0, (1 << N) - 1)));
      CHECK(f.act(x * y, rho) == f.act(x, f.act(y, rho)));
      CHECK(f.act(El::one(ctx), rho) == rho);
    }
    for (Monomial m = 0; m < (Monomial(1) << N); ++m) {
      const El img = f.act(El::monomial(ctx, m), El::one(ext));
      CHECK(img.coefficient(m) == Scalar(1));
      for (const auto& [r, v] : img.terms())
        if (r != m) CHECK(popcount(r) < popcount(m));
    }
    CHECK(fock_image_rank(f) == (std::size_t(1) << N));
  }
}
