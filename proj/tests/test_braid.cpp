#include "doctest.h"
#include "qcl/braid.hpp"
#include "support.hpp"

using namespace qcl;

namespace {

using TV = TensorVector<Scalar>;

const Scalar q = Scalar::q_pow(1);
const Scalar qi = Scalar::q_pow(-1);
const Scalar c = Scalar::c_pow(1);

BraidPtr<Scalar> sym_braid(int N) {
  return BraidContext<Scalar>::create(AlgebraContext<Scalar>::create(N, symbolic_params()));
}

BraidPtr<QuadRational> num_braid(int N) {
  const EvalPoint pt{mpq_class(5, 3), mpq_class(2)};
  return BraidContext<QuadRational>::create(AlgebraContext<QuadRational>::create(N, numeric_params(pt)));
}

// R-hat straight from the index formula, entry (ij),(kl) with the rank-one K^{ij}_{kl} = C^{ij} C_{kl}.
Matrix<Scalar> rhat_oracle(int N) {
  auto pr = [N](int i) { return N + 1 - i; };
  auto rho2 = [&](int i) { return i < pr(i) ? N - 2 * i : (i > pr(i) ? -(N - 2 * pr(i)) : 0); };
  auto C = [&](int i, int j) { return j == pr(i) ? Scalar::q_pow(-rho2(i)) : Scalar(0); };
  const int d = N * N;
  Matrix<Scalar> m = Matrix<Scalar>::Constant(d, d, Scalar(0));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) {
          Scalar v(0);
          if (i == l && j == k) v += Scalar::q_pow(2 * int(i == j) - 2 * int(i == pr(j)));
          if (i < l) {
            Scalar inner(0);
            if (i == k && j == l) inner += Scalar(1);
            inner -= C(i, j) * C(k, l);
            v += (Scalar::q_pow(2) - Scalar::q_pow(-2)) * inner;
          }
          m((i - 1) * N + j - 1, (k - 1) * N + l - 1) = v;
        }
  return m;
}

template <class F>
TensorVector<F> basis_vec(int N, int k, TensorIndex i) {
  TensorVector<F> e;
  e.N = N;
  e.k = k;
  e.entries.emplace(i, F(1));
  return e;
}

template <class F>
bool same_on_basis(const TensorOperator<F>& a, const TensorOperator<F>& b) {
  const TensorIndex dim = ipow(a.N(), a.legs());
  for (TensorIndex i = 0; i < dim; ++i) {
    const auto e = basis_vec<F>(a.N(), a.legs(), i);
    if (a.apply(e).entries != b.apply(e).entries) return false;
  }
  return true;
}

template <class F>
TensorVector<F> random_tensor(test::Rng& rng, int N, int k, int terms) {
  TensorVector<F> t;
  t.N = N;
  t.k = k;
  for (int s = 0; s < terms; ++s)
    t.add(static_cast<TensorIndex>(test::uniform(rng, 0, int(ipow(N, k)) - 1)), F(test::random_rational(rng)));
  return t;
}

}  // namespace

TEST_CASE("R-hat, metric and projectors") {
  auto b3 = sym_braid(3);
  CHECK(b3->rhat()->entry(0, 0) == q * q);
  CHECK(b3->metric().C(1, 3) == qi);
  CHECK(b3->metric().C(2, 2) == Scalar(1));
  CHECK(b3->metric().C(3, 1) == q);
  Scalar cc(0);
  for (int i = 1; i <= 3; ++i) cc += b3->metric().C(i, 4 - i) * b3->metric().C(i, 4 - i);
  CHECK(cc == q * q + Scalar(1) + qi * qi);
  for (int N = 3; N <= 5; ++N) {
    auto b = sym_braid(N);
    const Matrix<Scalar> r = dense(*b->rhat());
    CHECK(r == rhat_oracle(N));
    const Eigen::Index d = r.rows();
    const Matrix<Scalar> id = Matrix<Scalar>::Identity(d, d);
    CHECK(Matrix<Scalar>(r * dense(*b->rhat_inv())) == id);
    const Matrix<Scalar> pp = dense(*b->p_plus()), pm = dense(*b->p_minus()), p0 = dense(*b->p_zero());
    CHECK(Matrix<Scalar>(pp + pm + p0) == id);
    CHECK(Matrix<Scalar>(pp * pp) == pp);
    CHECK(Matrix<Scalar>(pm * pm) == pm);
    CHECK(Matrix<Scalar>(p0 * p0) == p0);
    CHECK(is_zero<Scalar>(pp * pm));
    CHECK(is_zero<Scalar>(pp * p0));
    CHECK(is_zero<Scalar>(pm * p0));
    CHECK(rank(p0) == 1);
    CHECK(rank(pm) == std::size_t(N * (N - 1) / 2));
  }
}

TEST_CASE("braid relation") {
  auto b3 = sym_braid(3);
  const auto lhs = b3->rhat_at(3, 1) * b3->rhat_at(3, 2) * b3->rhat_at(3, 1);
  const auto rhs = b3->rhat_at(3, 2) * b3->rhat_at(3, 1) * b3->rhat_at(3, 2);
  CHECK(same_on_basis(lhs, rhs));
  auto b5 = num_braid(5);
  CHECK(same_on_basis(b5->rhat_at(3, 1) * b5->rhat_at(3, 2) * b5->rhat_at(3, 1),
                      b5->rhat_at(3, 2) * b5->rhat_at(3, 1) * b5->rhat_at(3, 2)));
}

TEST_CASE("BWM elements") {
  auto b3 = sym_braid(3);
  CHECK(same_on_basis(b3->b_minus(0), TensorOperator<Scalar>::identity(3, 1)));
  const Scalar qq = (q + qi) * (q - qi);
  const auto expect = TensorOperator<Scalar>::identity(3, 2) - qi * qi * b3->rhat_at(2, 1) -
                      (qi * qi * qq / (Scalar(1) + Scalar::q_pow(2))) * b3->k_at(2, 1);
  CHECK(same_on_basis(b3->b_minus(1), expect));
  CHECK_THROWS_AS(b3->b_minus(3), std::out_of_range);
  CHECK_THROWS_AS(b3->d_prime_minus(3, 3), std::out_of_range);
  // (1/[2]) b-_{1,1} is P-, so it kills the image of P+.
  auto b3n = num_braid(3);
  for (int col = 0; col < 9; ++col) {
    TensorVector<QuadRational> v;
    v.N = 3;
    v.k = 2;
    for (const auto& [r, x] : b3n->p_plus()->cols[static_cast<std::size_t>(col)]) v.add(TensorIndex(r), x);
    CHECK(b3n->b_minus(1).apply(v).is_zero());
  }
  for (int N = 3; N <= 4; ++N) {
    auto b = sym_braid(N);
    for (TensorIndex i = 0; i < ipow(N, 2); ++i) {
      const TV e = basis_vec<Scalar>(N, 2, i);
      CHECK(b->antisym_recursion(2, e) == b->antisymmetrizer(2).apply(e));
    }
  }
}

TEST_CASE("antisymmetrizers") {
  for (int N = 3; N <= 4; ++N) {
    auto b = sym_braid(N);
    for (int k = 1; k <= N; ++k) {
      const auto A = b->antisymmetrizer(k);
      const auto cols = materialize(A);
      SpanBuilder<Scalar, TensorIndex> sb;
      for (const auto& col : cols) sb.add(col);
      long binom = 1;
      for (int j = 0; j < k; ++j) binom = binom * (N - j) / (j + 1);
      CHECK(sb.dim() == std::size_t(binom));
      for (Monomial m : b->wedge_monomials(k)) {
        TV u;
        u.N = N;
        u.k = k;
        u.entries = b->antisym_column(k, pack_index(indices(m), N));
        CHECK(A.apply(u) == u);
        for (int p = 1; p < k; ++p) {
          CHECK(b->rhat_at(k, p).apply(u) == (-qi * qi) * u);
          CHECK(b->k_at(k, p).apply(u).is_zero());
        }
      }
    }
    CHECK_THROWS_AS(b->antisymmetrizer(N + 1), std::out_of_range);
    CHECK_THROWS_AS(b->antisymmetrizer(0), std::out_of_range);
  }
}

TEST_CASE("pairing and contraction") {
  auto b4 = sym_braid(4);
  CHECK(b4->g(1, 2).is_zero());
  auto b3 = sym_braid(3);
  CHECK(b3->g(1, 3) == c * c * q);
  CHECK(b3->g_pair(TV::basis(3, {1, 3})) == c * c * q);
  CHECK_THROWS_AS(b3->g_pair(TV::basis(3, {1})), std::invalid_argument);
  for (int N = 3; N <= 5; ++N) {
    auto b = sym_braid(N);
    Scalar s(0);
    for (int i = 1; i <= N; ++i) s += b->metric().C(i, N + 1 - i) * b->g(i, N + 1 - i);
    CHECK(s == c * c * qi * (Scalar::q_pow(2 * N) - Scalar(1)) / (q - qi));
  }
  CHECK(b3->contract(TV::basis(3, {1, 2}), TV::basis(3, {3})).is_zero());
  const TV r = b3->contract(TV::basis(3, {1}), TV::basis(3, {3}));
  CHECK(r.k == 0);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries.at(0) == c * c * q);
}

TEST_CASE("wedge classes") {
  auto b3 = sym_braid(3);
  CHECK(b3->wedge_coords(TV::basis(3, {1, 1})).is_zero());
  const auto ext = b3->exterior();
  CHECK(b3->wedge_coords(TV::basis(3, {2, 1})) ==
        CliffordElement<Scalar>::monomial(ext, gen_mask(1) | gen_mask(2), -q * q));
  for (int N = 3; N <= 4; ++N) {
    auto b = sym_braid(N);
    for (Monomial m = 0; m < (Monomial(1) << N); ++m) {
      const auto x = CliffordElement<Scalar>::monomial(b->exterior(), m);
      CHECK(b->wedge_coords(b->wedge_lift(x)) == x);
    }
    // The class of any word agrees with its normal form in the exterior algebra.
    for (int k = 2; k <= 3; ++k)
      for (TensorIndex i = 0; i < ipow(N, k); ++i) {
        const auto w = unpack_index(i, N, k);
        CHECK(b->wedge_coords(TV::basis(N, w)) == rewrite(w, b->exterior()));
      }
  }
}

TEST_CASE("contraction is well defined on classes") {
  test::Rng rng(23);
  for (int N = 3; N <= 4; ++N) {
    auto b = sym_braid(N);
    for (int t = 0; t < 6; ++t) {
      const int l = test::uniform(rng, 2, N);
      const int k = test::uniform(rng, 1, l - 1);
      // An element of ker A_l on the right.
      const TV v = random_tensor<Scalar>(rng, N, l, 3);
      TV ker = v + Scalar(-1) * b->antisymmetrizer(l).apply(v);
      ker.k = l;
      const TV rk = random_tensor<Scalar>(rng, N, k, 2);
      const TV res = b->contract(rk, ker);
      CHECK(b->wedge_coords(res).is_zero());
      // An element of ker A_k on the left.
      const TV w = random_tensor<Scalar>(rng, N, k, 2);
      TV kerk = w + Scalar(-1) * b->antisymmetrizer(k).apply(w);
      kerk.k = k;
      const TV rl = random_tensor<Scalar>(rng, N, l, 3);
      CHECK(b->wedge_coords(b->contract(kerk, rl)).is_zero());
    }
  }
}

TEST_CASE("defining relations") {
  for (int N = 3; N <= 4; ++N) {
    const auto rep = verify_defining_relations(AlgebraContext<Scalar>::create(N, symbolic_params()));
    CHECK(rep.all_pass());
    CHECK(rep.items().size() == std::size_t(N * N + 1));
  }
  const auto z = verify_defining_relations(AlgebraContext<Scalar>::create(4, symbolic_params(CMode::Zero)));
  CHECK(z.all_pass());
  const EvalPoint pt{mpq_class(5, 3), mpq_class(2)};
  CHECK(verify_defining_relations(AlgebraContext<QuadRational>::create(6, numeric_params(pt))).all_pass());
}

TEST_CASE("materialization cap") {
  auto b3 = sym_braid(3);
  setenv("QCLIFFORD_MAX_DIM", "10", 1);
  CHECK_THROWS_AS(materialize(b3->antisymmetrizer(3)), ResourceCapError);
  unsetenv("QCLIFFORD_MAX_DIM");
  CHECK(materialize(b3->antisymmetrizer(2)).size() == 9);
}
