#include "qcl/suites.hpp"

#include "qcl/exterior.hpp"
#include "qcl/uq.hpp"

#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace qcl {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"clifford", "bwm",    "fock",   "pi",    "pirels",
                                              "adjoint",  "spin",   "center", "ideals"};
  return names;
}

Report run_parallel(const std::vector<std::function<Report()>>& tasks, int jobs) {
  std::vector<Report> out(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> threads;
  for (int t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (err) std::rethrow_exception(err);
  Report rep;
  for (const auto& r : out) rep.merge(r);
  return rep;
}

template <class F>
CliffordElement<F> simple_idempotent(int eta, const ContextPtr<F>& ctx) {
  const int n = ctx->n();
  const auto& p = ctx->params();
  F f = F(2 * eta) * power(p.c, 2 * n + 1) * ctx->qp(n * (n + 1)) * power(p.qhat_plus(), n);
  return rho(eta, ctx) * f.inverse();
}

namespace {

using Rng = std::mt19937_64;
using Tasks = std::vector<std::function<Report()>>;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <class F>
F random_coef(Rng& rng) {
  while (true) {
    mpq_class r(uniform(rng, -9, 9), uniform(rng, 1, 7));
    r.canonicalize();
    if (r != 0) return F(r);
  }
}

int scaled(int count, const SuiteOptions& opt) {
  return std::max(1, static_cast<int>(std::lround(count * opt.sample_scale)));
}

std::string br(int i) { return "[" + std::to_string(i) + "]"; }
std::string br(int i, int j) { return "[" + std::to_string(i) + "," + std::to_string(j) + "]"; }

template <class F>
constexpr bool symbolic_q() {
  return std::is_same_v<F, Scalar>;
}

/// Items of a chunked random check go under key[chunk].
template <class Fn>
void chunked(Tasks& tasks, const std::string& key, int total, int chunk, std::uint64_t seed, Fn body) {
  for (int start = 0, id = 0; start < total; start += chunk, ++id) {
    const int count = std::min(chunk, total - start);
    tasks.push_back([=] {
      Rng rng(seed * 1000003u + static_cast<std::uint64_t>(id));
      std::string detail;
      bool ok = true;
      for (int t = 0; t < count && ok; ++t) ok = body(rng, detail);
      Report r;
      r.add(key + br(id), ok, detail);
      return r;
    });
  }
}

// ---------------------------------------------------------------- clifford

template <class F>
void clifford_suite(Tasks& tasks, const ContextPtr<F>& ctx, const SuiteOptions& opt) {
  using El = CliffordElement<F>;
  const int N = ctx->N();
  const Monomial top = Monomial(1) << N;
  tasks.push_back([ctx] { return verify_defining_relations(ctx); });
  tasks.push_back([ctx, top, N] {
    Report r;
    bool fixed = true, closed = true;
    for (Monomial a = 0; a < top; ++a) {
      fixed = fixed && rewrite(indices(a), ctx) == El::monomial(ctx, a);
      if (N > 6) continue;
      for (Monomial b = 0; b < top; ++b) {
        const El prod = El::monomial(ctx, a) * El::monomial(ctx, b);
        for (const auto& [m, v] : prod.terms()) closed = closed && m < top && !v.is_zero();
      }
    }
    r.add("clifford/fixed-point", fixed);
    if (N <= 6) r.add("clifford/closure", closed);
    return r;
  });
  chunked(tasks, "clifford/assoc", scaled(500, opt), 50, opt.seed, [ctx, top](Rng& rng, std::string& d) {
    const Monomial a = Monomial(uniform(rng, 0, int(top) - 1)), b = Monomial(uniform(rng, 0, int(top) - 1)),
                   c = Monomial(uniform(rng, 0, int(top) - 1));
    const El x = El::monomial(ctx, a), y = El::monomial(ctx, b), z = El::monomial(ctx, c);
    const bool ok = (x * y) * z == x * (y * z);
    if (!ok) d = monomial_name(a) + "," + monomial_name(b) + "," + monomial_name(c);
    return ok;
  });
  chunked(tasks, "clifford/tau", scaled(100, opt), 50, opt.seed + 1, [ctx, top](Rng& rng, std::string& d) {
    El x(ctx), y(ctx);
    for (int t = 0; t < 2; ++t) {
      x.add_term(Monomial(uniform(rng, 0, int(top) - 1)), random_coef<F>(rng));
      y.add_term(Monomial(uniform(rng, 0, int(top) - 1)), random_coef<F>(rng));
    }
    const bool ok = tau(x * y) == tau(y) * tau(x) && tau(tau(x)) == x;
    if (!ok) d = x.to_string() + " ; " + y.to_string();
    return ok;
  });
  tasks.push_back([ctx, top, N] {
    std::vector<Monomial> zero_charge;
    for (Monomial m = 0; m < top; ++m) {
      bool z = true;
      for (int k = 1; k <= N / 2; ++k) z = z && monomial_degree(m, N, DegreeKind::Charge, k) == 0;
      if (z) zero_charge.push_back(m);
    }
    bool ok = true;
    for (Monomial a : zero_charge)
      for (Monomial b : zero_charge)
        ok = ok && El::monomial(ctx, a) * El::monomial(ctx, b) == El::monomial(ctx, b) * El::monomial(ctx, a);
    Report r;
    r.add("clifford/charge-zero-commutative", ok, std::to_string(zero_charge.size()) + " monomials");
    return r;
  });
}

// ---------------------------------------------------------------- bwm

template <class F>
void bwm_suite(Tasks& tasks, const ContextPtr<F>& ctx, const SuiteOptions& opt) {
  const auto b = BraidContext<F>::create(ctx);
  const int N = ctx->N();
  const F mq2 = -ctx->qp(-2);
  tasks.push_back([b, N] {
    Report r;
    const Matrix<F> R = dense(*b->rhat());
    const Eigen::Index d = R.rows();
    const Matrix<F> id = Matrix<F>::Identity(d, d);
    const Matrix<F> pp = dense(*b->p_plus()), pm = dense(*b->p_minus()), p0 = dense(*b->p_zero());
    r.add("bwm/rhat-inverse", Matrix<F>(R * dense(*b->rhat_inv())) == id);
    r.add("bwm/projectors/sum", Matrix<F>(pp + pm + p0) == id);
    r.add("bwm/projectors/idempotent", Matrix<F>(pp * pp) == pp && Matrix<F>(pm * pm) == pm && Matrix<F>(p0 * p0) == p0);
    r.add("bwm/projectors/orthogonal", is_zero<F>(pp * pm) && is_zero<F>(pp * p0) && is_zero<F>(pm * p0));
    r.add("bwm/projectors/rank", rank(pm) == std::size_t(N * (N - 1) / 2) && rank(p0) == 1);
    // R-hat acts by q^2, -q^{-2}, q^{2-2N} on the three eigenspaces
    r.add("bwm/rhat-spectral", Matrix<F>(R * pp) == Matrix<F>(b->algebra()->qp(2) * pp) &&
                                   Matrix<F>(R * pm) == Matrix<F>(-b->algebra()->qp(-2) * pm) &&
                                   Matrix<F>(R * p0) == Matrix<F>(b->algebra()->qp(2 - 2 * N) * p0));
    return r;
  });
  tasks.push_back([b, N] {
    const auto l = b->rhat_at(3, 1) * b->rhat_at(3, 2) * b->rhat_at(3, 1);
    const auto rr = b->rhat_at(3, 2) * b->rhat_at(3, 1) * b->rhat_at(3, 2);
    bool ok = true;
    for (TensorIndex i = 0; i < ipow(N, 3) && ok; ++i) {
      TensorVector<F> e;
      e.N = N;
      e.k = 3;
      e.entries.emplace(i, F(1));
      ok = l.apply(e) == rr.apply(e);
    }
    Report r;
    r.add("bwm/braid-relation", ok);
    return r;
  });
  tasks.push_back([b, N] {
    const auto cols = materialize(b->antisymmetrizer(2));
    bool ok = true;
    for (int col = 0; col < N * N; ++col) {
      SparseVec<F, TensorIndex> want;
      for (const auto& [row, v] : b->p_minus()->cols[static_cast<std::size_t>(col)]) want.emplace(row, v);
      ok = ok && cols[static_cast<std::size_t>(col)] == want;
    }
    Report r;
    r.add("bwm/A2=P-", ok);
    return r;
  });
  for (int k = 1; k <= N; ++k) {
    tasks.push_back([b, N, k, mq2] {
      Report r;
      const std::string pre = "bwm/A" + br(k);
      const auto A = b->antisymmetrizer(k);
      long binom = 1;
      for (int j = 0; j < k; ++j) binom = binom * (N - j) / (j + 1);
      auto vec = [&](const SparseVec<F, TensorIndex>& entries) {
        TensorVector<F> v;
        v.N = N;
        v.k = k;
        v.entries = entries;
        return v;
      };
      auto props = [&](const TensorVector<F>& u) {
        bool ok = A.apply(u) == u;
        for (int p = 1; p < k && ok; ++p) ok = b->rhat_at(k, p).apply(u) == mq2 * u && b->k_at(k, p).apply(u).is_zero();
        return ok;
      };
      // The columns on increasing indices span the image; the properties are
      // linear, so they only need checking there once every column is in the span.
      SpanBuilder<F, TensorIndex> sb;
      bool ok = true;
      for (Monomial m : b->wedge_monomials(k)) {
        const auto& col = b->antisym_column(k, pack_index(indices(m), N));
        sb.add(col);
        ok = ok && props(vec(col));
      }
      const std::size_t span = sb.dim();
      const TensorIndex dim = ipow(N, k);
      const bool full = dim <= static_cast<TensorIndex>(max_materialized_dim());
      bool inside = true;
      if (full) {
        for (const auto& col : materialize(A)) inside = inside && !sb.add(col);
      } else {
        Rng rng(static_cast<std::uint64_t>(k));
        for (int t = 0; t < 50 && inside; ++t) {
          const auto I = static_cast<TensorIndex>(std::uniform_int_distribution<std::uint64_t>(0, dim - 1)(rng));
          inside = !sb.add(A.apply(vec({{I, F(1)}})).entries);
        }
      }
      const std::string how = full ? "" : "sampled columns, ";
      r.add(pre + "/rank", span == std::size_t(binom) && inside, how + std::to_string(span));
      r.add(pre + "/idempotent-hecke-kill", ok && inside, full ? "" : "sampled columns");
      return r;
    });
  }
  chunked(tasks, "bwm/contraction-well-defined", scaled(100, opt), 10, opt.seed + 2,
          [b, N](Rng& rng, std::string& d) {
            auto random_tensor = [&](int k, int terms) {
              TensorVector<F> t;
              t.N = N;
              t.k = k;
              for (int s = 0; s < terms; ++s)
                t.add(static_cast<TensorIndex>(uniform(rng, 0, int(ipow(N, k)) - 1)), random_coef<F>(rng));
              return t;
            };
            const int l = uniform(rng, 2, N);
            const int k = uniform(rng, 1, l - 1);
            TensorVector<F> v = random_tensor(l, 3);
            TensorVector<F> ker = v + F(-1) * b->antisymmetrizer(l).apply(v);
            ker.k = l;
            const auto right = b->contract(random_tensor(k, 2), ker);
            TensorVector<F> w = random_tensor(k, 2);
            TensorVector<F> kerk = w + F(-1) * b->antisymmetrizer(k).apply(w);
            kerk.k = k;
            const auto left = b->contract(kerk, random_tensor(l, 3));
            const auto Alk = b->antisymmetrizer(l - k);
            const bool ok = Alk.apply(right).is_zero() && Alk.apply(left).is_zero();
            if (!ok) d = "k=" + std::to_string(k) + " l=" + std::to_string(l);
            return ok;
          });
}

// ---------------------------------------------------------------- fock

template <class F>
void fock_suite(Tasks& tasks, const ContextPtr<F>& ctx, const SuiteOptions& opt) {
  using El = CliffordElement<F>;
  const auto f = std::make_shared<const FockRepresentation<F>>(BraidContext<F>::create(ctx));
  const int N = ctx->N();
  const Eigen::Index dim = Eigen::Index(1) << N;
  tasks.push_back([f, N, dim] {
    Report r;
    const auto& b = *f->braid();
    for (int col = 0; col < N * N; ++col) {
      Matrix<F> acc = Matrix<F>::Constant(dim, dim, F(0));
      for (const auto& [row, v] : b.p_plus()->cols[static_cast<std::size_t>(col)])
        acc += v * Matrix<F>(f->gamma(row / N + 1) * f->gamma(row % N + 1));
      r.add("fock/P+" + br(col / N + 1, col % N + 1), is_zero(acc));
    }
    Matrix<F> cc = Matrix<F>::Constant(dim, dim, F(0));
    for (int i = 1; i <= N; ++i) cc += b.metric().C(i, N + 1 - i) * Matrix<F>(f->gamma(i) * f->gamma(N + 1 - i));
    const auto& p = b.algebra()->params();
    const F val = p.c * p.c * (p.qp(2 * N) - F(1)) / (p.qp(2) - F(1));
    r.add("fock/C", cc == Matrix<F>(val * Matrix<F>::Identity(dim, dim)));
    return r;
  });
  chunked(tasks, "fock/module", scaled(200, opt), 20, opt.seed + 3, [f, ctx, N](Rng& rng, std::string& d) {
    const auto ext = f->braid()->exterior();
    auto rnd = [&] {
      El x(ctx);
      for (int t = 0; t < 2; ++t) x.add_term(Monomial(uniform(rng, 0, (1 << N) - 1)), random_coef<F>(rng));
      return x;
    };
    const El x = rnd(), y = rnd();
    const El rho_ = El::monomial(ext, Monomial(uniform(rng, 0, (1 << N) - 1)), random_coef<F>(rng));
    const bool ok = f->act(x * y, rho_) == f->act(x, f->act(y, rho_)) && f->act(El::one(ctx), rho_) == rho_;
    if (!ok) d = x.to_string() + " ; " + y.to_string();
    return ok;
  });
  tasks.push_back([f, ctx, N] {
    Report r;
    const auto one = El::one(f->braid()->exterior());
    bool tri = true;
    for (Monomial m = 0; m < (Monomial(1) << N); ++m) {
      const El img = f->act(El::monomial(ctx, m), one);
      tri = tri && img.coefficient(m) == F(1);
      for (const auto& [mm, v] : img.terms()) tri = tri && (mm == m || popcount(mm) < popcount(m));
    }
    r.add("fock/triangular", tri);
    const std::size_t rk = fock_image_rank(*f);
    r.add("fock/faithful", rk == (std::size_t(1) << N), std::to_string(rk));
    return r;
  });
}

// ---------------------------------------------------------------- adjoint

template <class F>
void adjoint_suite(Tasks& tasks, const ContextPtr<F>& ctx) {
  tasks.push_back([ctx] {
    using El = CliffordElement<F>;
    Report r;
    const int N = ctx->N(), n = ctx->n();
    const auto& p = ctx->params();
    GenImages<Matrix<F>> m;
    bool invariant = true;
    for (int i = 1; i <= n; ++i) {
      try {
        m.E.push_back(ad_matrix<F>({GenKind::E, i}, ctx));
        m.F.push_back(ad_matrix<F>({GenKind::F, i}, ctx));
        m.K.push_back(ad_matrix<F>({GenKind::K, i}, ctx));
        m.Kinv.push_back(ad_matrix<F>({GenKind::Kinv, i}, ctx));
      } catch (const std::domain_error& e) {
        invariant = false;
        r.add("adjoint/invariant" + br(i), false, e.what());
      }
    }
    r.add("adjoint/invariant", invariant);
    if (!invariant) return r;
    r.merge(verify_matrix_relations(m, p, N, "adjoint/rel"));
    for (int i = 1; i <= n; ++i) {
      const auto I = static_cast<std::size_t>(i - 1);
      for (GenKind k : {GenKind::E, GenKind::F, GenKind::K, GenKind::Kinv}) {
        const Generator g{k, i};
        const Matrix<F>& a = k == GenKind::E ? m.E[I] : k == GenKind::F ? m.F[I] : k == GenKind::K ? m.K[I] : m.Kinv[I];
        const bool eq = a == t1<F>(g, p, N);
        // No diagonal change of basis is tried: equality is expected outright.
        r.add("adjoint/t1/" + generator_name(g), eq, eq ? "" : "mismatch: change-of-basis candidate");
        if (N % 2 == 1 && i == n && k == GenKind::F)
          r.add_info("adjoint/t1-printed/" + generator_name(g), a == t1_printed<F>(g, p, N),
                     "printed odd-N F_n display");
      }
    }
    const El gN = El::gen(ctx, N);
    for (int i = 1; i <= n; ++i) {
      r.add("adjoint/highest/E" + br(i), ad<F>({GenKind::E, i}, gN).is_zero());
      r.add("adjoint/highest/K" + br(i), ad<F>({GenKind::K, i}, gN) == gN * lambda(p, N, i, N));
      r.add_info("adjoint/highest/K-delta" + br(i), ad<F>({GenKind::K, i}, gN) == gN * p.qp(2 * (i == 1)),
                 "eigenvalue q^{2 delta_{i1}}");
    }
    return r;
  });
}

// ---------------------------------------------------------------- spin

template <class F>
void spin_suite(Tasks& tasks, const ContextPtr<F>& ctx) {
  for (int nu : {1, -1}) {
    tasks.push_back([ctx, nu] {
      Report r;
      const int N = ctx->N(), n = ctx->n();
      const std::string pre = std::string("spin/") + (nu == 1 ? "+" : "-");
      GenImages<Matrix<F>> g;
      std::vector<Matrix<F>> ek;
      for (int i = 1; i <= n; ++i) {
        g.E.push_back(spin_rep<F>(nu, {GenKind::E, i}, ctx));
        g.F.push_back(spin_rep<F>(nu, {GenKind::F, i}, ctx));
        g.K.push_back(spin_rep<F>(nu, {GenKind::K, i}, ctx));
        g.Kinv.push_back(spin_rep<F>(nu, {GenKind::Kinv, i}, ctx));
        ek.push_back(spin_rep<F>(nu, {GenKind::EKinv, i}, ctx));
      }
      const auto dim = static_cast<std::size_t>(g.K[0].rows());
      const std::size_t want = std::size_t(1) << (N % 2 ? n : n - 1);
      r.add(pre + "/dimension", dim == want, std::to_string(dim));
      r.merge(verify_matrix_relations(g, ctx->params(), N, pre + "/rel"));
      const auto subsets = spin_subsets(nu, N);
      // phi^nu, or gamma_n phi^1 for the odd half at even N
      const Monomial hw = (N % 2 == 0 && nu == -1) ? gen_mask(n) : 0;
      const int pos = static_cast<int>(std::find(subsets.begin(), subsets.end(), hw) - subsets.begin());
      const auto hws = highest_weight_positions(ek);
      r.add(pre + "/highest-weight-vector", hws == std::vector<int>{pos});
      bool diag = true;
      std::vector<std::vector<F>> w;
      try {
        w = weights(g.K);
      } catch (const std::domain_error&) {
        diag = false;
      }
      r.add(pre + "/K-diagonal", diag);
      if (diag) {
        bool ok = true;
        for (int i = 1; i <= n; ++i) {
          int e = 0;
          if (N % 2) e = i == n;
          else if (nu == 1) e = 2 * (i == n);
          else e = 2 * (i == n - 1);
          ok = ok && w[static_cast<std::size_t>(pos)][static_cast<std::size_t>(i - 1)] == ctx->qp(e);
        }
        r.add(pre + "/highest-weight", ok);
      }
      bool nil = true;
      for (const auto* v : {&g.E, &g.F})
        for (const auto& m : *v) {
          Matrix<F> pw = m;
          for (std::size_t t = 1; t < dim; ++t) pw = Matrix<F>(pw * m);
          nil = nil && is_zero(pw);
        }
      r.add(pre + "/nilpotent", nil);
      if (N % 2 == 1) {
        std::vector<Matrix<F>> all;
        for (const auto* v : {&g.E, &g.F, &g.K}) all.insert(all.end(), v->begin(), v->end());
        const std::size_t d = generated_algebra_dim(all);
        r.add(pre + "/irreducible", d == dim * dim, std::to_string(d));
      }
      return r;
    });
  }
}

// ---------------------------------------------------------------- center

template <class F>
void center_suite(Tasks& tasks, const ContextPtr<F>& ctx, const SuiteOptions& opt) {
  using El = CliffordElement<F>;
  const int N = ctx->N();
  if (ctx->params().c.is_zero()) return;
  for (int eta_hat = 0; eta_hat <= N % 2; ++eta_hat)
    chunked(tasks, "center/z-commutation" + br(eta_hat), scaled(20, opt), 5, opt.seed + 4 + eta_hat,
            [ctx, N, eta_hat](Rng& rng, std::string& d) {
              std::vector<F> mu;
              for (int i = 0; i < N / 2; ++i) mu.push_back(random_coef<F>(rng));
              const El z = z_central(mu, eta_hat, ctx);
              const auto full = extend_mu(mu, N);
              bool ok = !z.is_zero();
              for (int i = 1; i <= N && ok; ++i) {
                const El g = El::gen(ctx, i);
                ok = z * g == (g * z) * full[static_cast<std::size_t>(i - 1)];
              }
              if (!ok) d = "mu[0]=" + mu[0].to_string();
              return ok;
            });
  tasks.push_back([ctx, N] {
    Report r;
    const El ze = ctx->odd() ? z1(ctx) : z0(ctx);
    r.add("center/z-square", ze * ze == El::one(ctx));
    bool ok = true;
    for (int i = 1; i <= N; ++i) {
      const El g = El::gen(ctx, i);
      ok = ok && ze * g == (ctx->odd() ? g * ze : -(g * ze));
    }
    r.add(ctx->odd() ? "center/z1-central" : "center/z0-anticommutes", ok);
    if (ctx->odd()) {
      for (int eta : {1, -1}) {
        bool acts = true;
        for (const auto& b : ideal_basis(eta, ctx)) acts = acts && ze * b == b * F(eta);
        r.add("center/z1-on-ideal" + br(eta), acts);
      }
    } else {
      // z0 phi^1 = s phi^1 with s = +-1, and z0 anticommutes with each gamma_j
      const auto basis = ideal_basis(1, ctx);
      const El p1 = basis.front();
      const bool plus = ze * p1 == p1, minus = ze * p1 == -p1;
      bool acts = plus || minus;
      for (std::size_t J = 0; J < basis.size() && acts; ++J) {
        const bool flip = (popcount(static_cast<Monomial>(J)) % 2 == 1) != minus;
        acts = ze * basis[J] == (flip ? -basis[J] : basis[J]);
      }
      r.add("center/z0-on-halves", acts, plus ? "+1 on the even half" : "-1 on the even half");
    }
    // the closed form spans the solution space of the commutation equations
    const std::vector<F> one(static_cast<std::size_t>(N / 2), F(1));
    const auto sol = centralizer_solve(one, 0, ctx);
    bool same = sol.size() == 1;
    if (same) {
      const El z = z_central(one, 0, ctx);
      const Monomial lead = z.terms().begin()->first;
      same = sol[0] * (z.coefficient(lead) / sol[0].coefficient(lead)) == z;
    }
    r.add("center/centralizer-dimension", same, std::to_string(sol.size()));
    return r;
  });
}

// ---------------------------------------------------------------- ideals

template <class F>
std::size_t span_dim(const std::vector<CliffordElement<F>>& xs) {
  SpanBuilder<F, Monomial> sb;
  for (const auto& x : xs) sb.add(as_sparse(x));
  return sb.dim();
}

template <class F>
void ideals_suite(Tasks& tasks, const ContextPtr<F>& ctx) {
  using El = CliffordElement<F>;
  const int N = ctx->N(), n = ctx->n();
  if (ctx->params().c.is_zero()) return;
  const Monomial top = Monomial(1) << N;
  for (int nu : (ctx->odd() ? std::vector<int>{1, -1} : std::vector<int>{1})) {
    tasks.push_back([=] {
      Report r;
      const std::string pre = "ideals/phi" + br(nu);
      const El p = phi(nu, ctx);
      bool ann = true;
      for (int k = 1; k <= N; ++k)
        if (k > ctx->prime(k)) ann = ann && (El::gen(ctx, k) * p).is_zero();
      if (ctx->odd()) ann = ann && El::gen(ctx, n + 1) * p == p * (F(nu) * ctx->params().c);
      r.add(pre + "/annihilators", ann);
      std::vector<El> left;
      for (Monomial m = 0; m < top; ++m) left.push_back(El::monomial(ctx, m) * p);
      const std::size_t d = span_dim(left);
      r.add(pre + "/minimal-left-ideal-dimension", d == (std::size_t(1) << n), std::to_string(d));
      r.add(pre + "/basis-size", ideal_basis(nu, ctx).size() == (std::size_t(1) << n));
      return r;
    });
  }
  if (!ctx->odd()) return;
  tasks.push_back([=] {
    Report r;
    const auto& prm = ctx->params();
    for (int eta : {1, -1}) {
      const El rr = rho(eta, ctx);
      const F f = F(2 * eta) * power(prm.c, 2 * n + 1) * ctx->qp(n * (n + 1)) * power(prm.qhat_plus(), n);
      r.add("ideals/rho-square" + br(eta), rr * rr == rr * f);
    }
    const El ep = simple_idempotent(1, ctx), em = simple_idempotent(-1, ctx);
    r.add("ideals/e-idempotent", ep * ep == ep && em * em == em);
    r.add("ideals/e-orthogonal", (ep * em).is_zero() && (em * ep).is_zero());
    return r;
  });
  for (int eta : {1, -1}) {
    tasks.push_back([=] {
      const El e = simple_idempotent(eta, ctx);
      std::vector<El> two;
      for (Monomial a = 0; a < top; ++a) {
        const El ae = El::monomial(ctx, a) * e;
        for (Monomial b = 0; b < top; ++b) two.push_back(ae * El::monomial(ctx, b));
      }
      const std::size_t d = span_dim(two);
      Report r;
      r.add("ideals/two-sided-dimension" + br(eta), d == (std::size_t(1) << (N - 1)), std::to_string(d));
      return r;
    });
  }
}

template <class F>
void add_suite(Tasks& tasks, const std::string& name, const ContextPtr<F>& ctx, const SuiteOptions& opt) {
  const int N = ctx->N();
  const bool needs_c = name == "pi" || name == "pirels" || name == "adjoint" || name == "spin";
  if (needs_c && ctx->params().c.is_zero()) throw std::invalid_argument("suite " + name + " needs c != 0");
  if (symbolic_q<F>() && name == "bwm" && N > 4)
    throw ResourceCapError("suite " + name + " with symbolic q is capped at N = 4; use --q with a rational value");
  if (name == "clifford") clifford_suite(tasks, ctx, opt);
  else if (name == "bwm") bwm_suite(tasks, ctx, opt);
  else if (name == "fock") fock_suite(tasks, ctx, opt);
  else if (name == "pi") tasks.push_back([ctx] { return verify_uq_relations(ctx, "pi"); });
  else if (name == "pirels") tasks.push_back([ctx] { return verify_pirels(ctx); });
  else if (name == "adjoint") adjoint_suite(tasks, ctx);
  else if (name == "spin") spin_suite(tasks, ctx);
  else if (name == "center") center_suite(tasks, ctx, opt);
  else if (name == "ideals") ideals_suite(tasks, ctx);
  else throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

template <class F>
Report run_suite(const std::string& name, const ContextPtr<F>& ctx, const SuiteOptions& opt) {
  if (ctx->N() > 8) throw ResourceCapError("suites are capped at N = 8");
  Tasks tasks;
  if (name == "all") {
    for (const auto& s : suite_names()) {
      const bool needs_c = s == "pi" || s == "pirels" || s == "adjoint" || s == "spin";
      if (needs_c && ctx->params().c.is_zero()) continue;
      add_suite(tasks, s, ctx, opt);
    }
  } else {
    add_suite(tasks, name, ctx, opt);
  }
  return run_parallel(tasks, opt.jobs);
}

#define QCL_INSTANTIATE(F)                                                                  \
  template Report run_suite(const std::string&, const ContextPtr<F>&, const SuiteOptions&); \
  template CliffordElement<F> simple_idempotent(int, const ContextPtr<F>&);

QCL_INSTANTIATE(Scalar)
QCL_INSTANTIATE(QuadRational)

}  // namespace qcl
