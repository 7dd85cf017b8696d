#include "qcl/uq.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace qcl {

namespace {

const char* kind_name(GenKind k) {
  switch (k) {
    case GenKind::E: return "E";
    case GenKind::F: return "F";
    case GenKind::K: return "K";
    case GenKind::Kinv: return "Kinv";
    case GenKind::EKinv: return "EKinv";
  }
  return "?";
}

}  // namespace

std::string generator_name(const Generator& g) { return kind_name(g.kind) + std::to_string(g.i); }

Generator parse_generator(const std::string& s) {
  for (GenKind k : {GenKind::EKinv, GenKind::Kinv, GenKind::E, GenKind::F, GenKind::K}) {
    const std::string p = kind_name(k);
    if (s.size() > p.size() && s.compare(0, p.size(), p) == 0) {
      const std::string rest = s.substr(p.size());
      if (rest.find_first_not_of("0123456789") != std::string::npos) break;
      return {k, std::stoi(rest)};
    }
  }
  throw std::invalid_argument("unknown generator '" + s + "'");
}

std::vector<Generator> all_generators(int n) {
  std::vector<Generator> out;
  for (int i = 1; i <= n; ++i)
    for (GenKind k : {GenKind::E, GenKind::F, GenKind::K, GenKind::Kinv, GenKind::EKinv}) out.push_back({k, i});
  return out;
}

int lambda_exp(int N, int i, int j) {
  const int n = N / 2;
  if (i < 1 || i > n || j < 1 || j > N) throw std::out_of_range("lambda index out of range");
  const int ip = N + 1 - i;
  if (i < n) return -2 * (j == i) + 2 * (j == i + 1) - 2 * (j == ip - 1) + 2 * (j == ip);
  if (N % 2 == 1) return -2 * (j == n) + 2 * (j == n + 2);
  return -2 * (j == n - 1) - 2 * (j == n) + 2 * (j == n + 1) + 2 * (j == n + 2);
}

CartanData cartan_data(int N) {
  CartanData cd;
  cd.n = N / 2;
  const int n = cd.n;
  for (int i = 1; i <= n; ++i) cd.d.push_back(i < n ? 2 : 2 - N % 2);
  cd.a.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int e = j < n ? lambda_exp(N, i, j + 1) + lambda_exp(N, i, N + 1 - j)
                          : lambda_exp(N, i, n + 1) + lambda_exp(N, i, n + 2);
      const int di = cd.d[static_cast<std::size_t>(i - 1)];
      if (e % di != 0) throw std::logic_error("lambda table is not compatible with d_i");
      cd.a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = e / di;
    }
  return cd;
}

namespace {

/// sum over j_1 < ... < j_l <= m of prod_r f(r, l, j_r) gamma_{j_1..j_l} mid gamma_{j'_l..j'_1}.
template <class F, class Fn>
CliffordElement<F> nested_sum(const ContextPtr<F>& ctx, int m, const std::vector<int>& mid, Fn f) {
  CliffordElement<F> out(ctx);
  if (m < 0) return out;
  for (Monomial J = 0; J < (Monomial(1) << m); ++J) {
    const auto js = indices(J);
    const int l = static_cast<int>(js.size());
    F coef(1);
    for (int r = 1; r <= l; ++r) coef *= f(r, l, js[static_cast<std::size_t>(r - 1)]);
    if (coef.is_zero()) continue;
    std::vector<int> word = js;
    word.insert(word.end(), mid.begin(), mid.end());
    for (auto it = js.rbegin(); it != js.rend(); ++it) word.push_back(ctx->prime(*it));
    out += rewrite(word, ctx) * coef;
  }
  return out;
}

}  // namespace

template <class F>
CliffordElement<F> pi(const Generator& g, const ContextPtr<F>& ctx) {
  const int N = ctx->N(), n = ctx->n(), i = g.i, eps = ctx->eps();
  if (i < 1 || i > n) throw std::out_of_range("generator index " + std::to_string(i) + " out of range");
  const auto& p = ctx->params();
  if (p.c.is_zero()) throw std::invalid_argument("pi needs c != 0");
  const F base = p.c * p.c * p.qhat_plus();
  auto denom = [&](int j) { return base * ctx->qp(N + 1 - 2 * j); };
  auto kfac = [&](bool inv) {
    return [&, inv](int r, int l, int j) {
      const F lam = ctx->qp(inv ? -lambda_exp(N, i, j) : lambda_exp(N, i, j));
      return (lam - ctx->qp(4 * l - 4 * r)) / denom(j);
    };
  };
  auto efac = [&](int r, int, int j) { return (F(1) - ctx->qp(4 * r)) / denom(j); };
  switch (g.kind) {
    case GenKind::K:
    case GenKind::Kinv: {
      const bool inv = g.kind == GenKind::Kinv;
      if (i < n) return nested_sum(ctx, i + 1, {}, kfac(inv));
      return nested_sum(ctx, n, {}, kfac(inv)) * ctx->qp(inv ? eps - 2 : 2 - eps);
    }
    case GenKind::EKinv:
      if (i < n) return nested_sum(ctx, i - 1, {i + 1, ctx->prime(i)}, efac) * (ctx->qp(2 * i + 1 - N) / base);
      if (eps) return nested_sum(ctx, n - 1, {n + 1, n + 2}, efac) * (p.s / base);
      return nested_sum(ctx, n - 2, {n + 1, n + 2}, efac) * (ctx->qp(-1) / base);
    case GenKind::F:
      if (i < n) return nested_sum(ctx, i - 1, {i, ctx->prime(i) - 1}, efac) * (ctx->qp(2 * i + 1 - N) / base);
      if (eps) return nested_sum(ctx, n - 1, {n, n + 1}, efac) * (ctx->qp(-1) * p.s / base);
      return nested_sum(ctx, n - 2, {n - 1, n}, efac) * (ctx->qp(-1) / base);
    case GenKind::E: return pi({GenKind::EKinv, i}, ctx) * pi({GenKind::K, i}, ctx);
  }
  throw std::logic_error("unreachable");
}

namespace {

template <class F>
Matrix<F> mul(const Matrix<F>& a, const Matrix<F>& b) {
  return a * b;
}
template <class F>
CliffordElement<F> mul(const CliffordElement<F>& a, const CliffordElement<F>& b) {
  return a * b;
}
template <class F>
Matrix<F> scaled(const F& s, const Matrix<F>& a) {
  return s * a;
}
template <class F>
CliffordElement<F> scaled(const F& s, const CliffordElement<F>& a) {
  return a * s;
}
template <class F>
bool zero(const Matrix<F>& a) {
  return is_zero(a);
}
template <class F>
bool zero(const CliffordElement<F>& a) {
  return a.is_zero();
}

template <class F, class T>
T power_of(const T& x, int e, const T& one) {
  T r = one;
  for (int k = 0; k < e; ++k) r = mul<F>(r, x);
  return r;
}

std::string idx(int i, int j) { return "[" + std::to_string(i) + "," + std::to_string(j) + "]"; }
std::string idx(int i) { return "[" + std::to_string(i) + "]"; }

template <class F, class T>
Report check_relations(const GenImages<T>& g, const T& one, const FieldParams<F>& p, int N, const std::string& pre) {
  const CartanData cd = cartan_data(N);
  const int n = cd.n;
  Report rep;
  auto qi = [&](int i, int e) { return p.qp(cd.d[static_cast<std::size_t>(i - 1)] * e); };
  for (int i = 1; i <= n; ++i) {
    const auto I = static_cast<std::size_t>(i - 1);
    rep.add(pre + "/K-inv" + idx(i), mul<F>(g.K[I], g.Kinv[I]) == one && mul<F>(g.Kinv[I], g.K[I]) == one);
    for (int j = 1; j <= n; ++j) {
      const auto J = static_cast<std::size_t>(j - 1);
      const int a = cd.a[I][J];
      if (i < j) rep.add(pre + "/K-comm" + idx(i, j), mul<F>(g.K[I], g.K[J]) == mul<F>(g.K[J], g.K[I]));
      rep.add(pre + "/KEK" + idx(i, j), mul<F>(mul<F>(g.K[I], g.E[J]), g.Kinv[I]) == scaled(qi(i, a), g.E[J]));
      rep.add(pre + "/KFK" + idx(i, j), mul<F>(mul<F>(g.K[I], g.F[J]), g.Kinv[I]) == scaled(qi(i, -a), g.F[J]));
      T ef = mul<F>(g.E[I], g.F[J]) - mul<F>(g.F[J], g.E[I]);
      if (i == j) ef = ef - scaled(F(qi(i, 1) - qi(i, -1)).inverse(), T(g.K[I] - g.Kinv[I]));
      rep.add(pre + "/EF" + idx(i, j), zero(ef));
      if (i == j) continue;
      const int m = 1 - a;
      for (SerreReading reading : {SerreReading::Standard, SerreReading::Literal}) {
        for (int which = 0; which < 2; ++which) {
          const auto& X = which == 0 ? g.E : g.F;
          T acc = scaled(F(0), one);
          for (int r = 0; r <= m; ++r) {
            const int e = reading == SerreReading::Standard ? r * (m - r) : r * (n - r);
            const F binom = cd.d[I] == 2 ? qbinom(p, m, r) : qbinom_base_q(p, m, r);
            const F coef = F(r % 2 ? -1 : 1) * qi(i, e) * binom;
            const T term = mul<F>(mul<F>(power_of<F>(X[I], m - r, one), X[J]), power_of<F>(X[I], r, one));
            acc = acc + scaled(coef, term);
          }
          const std::string tag = std::string(reading == SerreReading::Standard ? "/serre-std-" : "/serre-lit-") +
                                  (which == 0 ? "E" : "F");
          if (reading == SerreReading::Standard) rep.add(pre + tag + idx(i, j), zero(acc));
          else rep.add_info(pre + tag + idx(i, j), zero(acc));
        }
      }
    }
  }
  return rep;
}

template <class F>
GenImages<CliffordElement<F>> pi_images(const ContextPtr<F>& ctx) {
  GenImages<CliffordElement<F>> g;
  for (int i = 1; i <= ctx->n(); ++i) {
    g.K.push_back(pi({GenKind::K, i}, ctx));
    g.Kinv.push_back(pi({GenKind::Kinv, i}, ctx));
    g.F.push_back(pi({GenKind::F, i}, ctx));
    g.E.push_back(pi({GenKind::EKinv, i}, ctx) * g.K.back());
  }
  return g;
}

}  // namespace

template <class F>
Report verify_uq_relations(const ContextPtr<F>& ctx, const std::string& prefix) {
  const auto g = pi_images(ctx);
  Report rep = check_relations<F>(g, CliffordElement<F>::one(ctx), ctx->params(), ctx->N(), prefix);
  for (int i = 1; i <= ctx->n(); ++i) {
    const auto& e = g.E[static_cast<std::size_t>(i - 1)];
    rep.add(prefix + "/E-square" + idx(i), (e * e).is_zero());
  }
  return rep;
}

template <class F>
Report verify_matrix_relations(const GenImages<Matrix<F>>& m, const FieldParams<F>& p, int N,
                               const std::string& prefix) {
  const Eigen::Index d = m.K.front().rows();
  return check_relations<F>(m, Matrix<F>(Matrix<F>::Identity(d, d)), p, N, prefix);
}

namespace {

struct Case {
  bool valid = false;
  int factor_exp = 0;  // q exponent of the gamma_j X term
  int extra = 0;       // index of the inhomogeneous gamma, 0 if none
  int extra_exp = 0;   // q exponent of its coefficient
  int extra_sign = 1;
  bool extra_s = false;  // coefficient carries q'
};

Case lemma_case(GenKind kind, int k, int j, int N) {
  const int n = N / 2, kp = N + 1 - k;
  const bool odd = N % 2 == 1;
  Case c;
  c.valid = true;
  if (k < n && kind == GenKind::EKinv) {
    if (j == k + 1 || j == kp) c.factor_exp = -2;
    else if (j == k) c = {true, 2, j + 1, 2, 1, false};
    else if (j == kp - 1) c = {true, 2, j + 1, 2, -1, false};
    return c;
  }
  if (k < n && kind == GenKind::F) {
    if (j == k || j == kp - 1) c.factor_exp = 2;
    else if (j == k + 1) c = {true, -2, j - 1, 0, 1, false};
    else if (j == kp) c = {true, -2, j - 1, 0, -1, false};
    return c;
  }
  if (kind == GenKind::EKinv) {
    if (odd) {
      if (j == n) c = {true, 2, j + 1, 2, 1, true};
      else if (j == n + 1) c = {true, 0, j + 1, 1, -1, true};
      else if (j == n + 2) c.factor_exp = -2;
    } else {
      if (j == n - 1) c = {true, 2, j + 2, 2, 1, false};
      else if (j == n) c = {true, 2, j + 2, 2, -1, false};
      else if (j == n + 1 || j == n + 2) c.factor_exp = -2;
    }
    return c;
  }
  if (odd) {
    if (j == n) c.factor_exp = 2;
    else if (j == n + 1) c = {true, 0, j - 1, 0, 1, true};
    else if (j == n + 2) c = {true, -2, j - 1, -1, -1, true};
  } else {
    if (j == n - 1 || j == n) c.factor_exp = 2;
    else if (j == n + 1) c = {true, -2, j - 2, 0, 1, false};
    else if (j == n + 2) c = {true, -2, j - 2, 0, -1, false};
  }
  return c;
}

}  // namespace

template <class F>
Report verify_pirels(const ContextPtr<F>& ctx) {
  const int N = ctx->N(), n = ctx->n();
  const auto& p = ctx->params();
  Report rep;
  using El = CliffordElement<F>;
  auto put = [&](const std::string& key, const El& lhs, const El& rhs) {
    const El d = lhs - rhs;
    rep.add(key, d.is_zero(), d.is_zero() ? "" : d.to_string());
  };
  for (int i = 1; i <= n; ++i) {
    const El K = pi({GenKind::K, i}, ctx), Ki = pi({GenKind::Kinv, i}, ctx);
    const El EK = pi({GenKind::EKinv, i}, ctx), Fi = pi({GenKind::F, i}, ctx);
    for (int j = 1; j <= N; ++j) {
      const El g = El::gen(ctx, j);
      const std::string tail = idx(i, j);
      put("pirels/K" + tail, K * g, (g * K) * lambda(p, N, i, j));
      put("pirels/Kinv" + tail, Ki * g, (g * Ki) * lambda(p, N, i, j).inverse());
      for (GenKind kind : {GenKind::EKinv, GenKind::F}) {
        const El& X = kind == GenKind::EKinv ? EK : Fi;
        const Case c = lemma_case(kind, i, j, N);
        El rhs = (g * X) * ctx->qp(c.factor_exp);
        if (c.extra) {
          F coef = F(c.extra_sign) * ctx->qp(c.extra_exp);
          if (c.extra_s) coef *= p.s;
          rhs += El::gen(ctx, c.extra) * coef;
        }
        const std::string name = kind == GenKind::EKinv ? "EKinv" : "F";
        put("pirels/" + name + (i == n ? "n" : "") + tail, X * g, rhs);
      }
    }
  }
  return rep;
}

template <class F>
CliffordElement<F> ad(const Generator& g, const CliffordElement<F>& v) {
  const auto& ctx = v.context();
  const int i = g.i;
  switch (g.kind) {
    case GenKind::K: return pi({GenKind::K, i}, ctx) * v * pi({GenKind::Kinv, i}, ctx);
    case GenKind::Kinv: return pi({GenKind::Kinv, i}, ctx) * v * pi({GenKind::K, i}, ctx);
    case GenKind::EKinv: {
      const auto x = pi({GenKind::EKinv, i}, ctx);
      return x * v - pi({GenKind::Kinv, i}, ctx) * v * pi({GenKind::K, i}, ctx) * x;
    }
    case GenKind::F: {
      const auto x = pi({GenKind::F, i}, ctx);
      return x * v - pi({GenKind::Kinv, i}, ctx) * v * pi({GenKind::K, i}, ctx) * x;
    }
    case GenKind::E: return ad({GenKind::EKinv, i}, ad({GenKind::K, i}, v));
  }
  throw std::logic_error("unreachable");
}

template <class F>
Matrix<F> ad_matrix(const Generator& g, const ContextPtr<F>& ctx) {
  const int N = ctx->N();
  Matrix<F> m = Matrix<F>::Constant(N, N, F(0));
  for (int j = 1; j <= N; ++j) {
    const auto img = ad(g, CliffordElement<F>::gen(ctx, j));
    for (const auto& [mm, v] : img.terms()) {
      if (popcount(mm) != 1) throw std::domain_error("adjoint image of gamma_" + std::to_string(j) + " leaves V");
      m(std::countr_zero(mm), j - 1) = v;
    }
  }
  return m;
}

namespace {

template <class F>
Matrix<F> t1_impl(const Generator& g, const FieldParams<F>& p, int N, bool printed) {
  const int n = N / 2, i = g.i;
  if (i < 1 || i > n) throw std::out_of_range("generator index out of range");
  const bool odd = N % 2 == 1;
  const int ip = N + 1 - i;
  Matrix<F> m = Matrix<F>::Constant(N, N, F(0));
  auto unit = [&m](int k, int l, const F& v) { m(k - 1, l - 1) += v; };
  auto diag = [&](const std::vector<std::pair<int, int>>& ds) {
    // product of D_j^{e}, D_j = diag with q^2 at position j
    for (int k = 1; k <= N; ++k) {
      int e = 0;
      for (auto [j, s] : ds)
        if (k == j) e += 2 * s;
      m(k - 1, k - 1) = p.qp(e);
    }
  };
  switch (g.kind) {
    case GenKind::K:
    case GenKind::Kinv: {
      const int s = g.kind == GenKind::K ? 1 : -1;
      if (i < n) diag({{i, -s}, {i + 1, s}, {ip - 1, -s}, {ip, s}});
      else if (odd) diag({{n, -s}, {n + 2, s}});
      else diag({{n - 1, -s}, {n, -s}, {n + 1, s}, {n + 2, s}});
      return m;
    }
    case GenKind::EKinv:
      if (i < n) {
        unit(i + 1, i, p.qp(2));
        unit(ip, ip - 1, -p.qp(2));
      } else if (odd) {
        unit(n + 1, n, p.s * p.qp(2));
        unit(n + 2, n + 1, -p.s * p.qp(1));
      } else {
        unit(n + 1, n - 1, p.qp(2));
        unit(n + 2, n, -p.qp(2));
      }
      return m;
    case GenKind::F:
      if (i < n) {
        unit(i, i + 1, F(1));
        unit(ip - 1, ip, F(-1));
      } else if (odd) {
        unit(n, n + 1, printed ? p.s * p.qp(2) : p.s);
        unit(n + 1, n + 2, -p.s * p.qp(-1));
      } else {
        unit(n - 1, n + 1, F(1));
        unit(n, n + 2, F(-1));
      }
      return m;
    case GenKind::E: {
      const Matrix<F> a = t1_impl<F>({GenKind::EKinv, i}, p, N, printed);
      const Matrix<F> k = t1_impl<F>({GenKind::K, i}, p, N, printed);
      return a * k;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

template <class F>
Matrix<F> t1(const Generator& g, const FieldParams<F>& p, int N) {
  return t1_impl(g, p, N, false);
}

template <class F>
Matrix<F> t1_printed(const Generator& g, const FieldParams<F>& p, int N) {
  return t1_impl(g, p, N, true);
}

std::vector<Monomial> spin_subsets(int nu, int N) {
  const int n = N / 2;
  if (nu != 1 && nu != -1) throw std::invalid_argument("nu must be +1 or -1");
  std::vector<Monomial> out;
  for (Monomial J = 0; J < (Monomial(1) << n); ++J)
    if (N % 2 == 1 || popcount(J) % 2 == (nu == 1 ? 0 : 1)) out.push_back(J);
  return out;
}

template <class F>
std::vector<CliffordElement<F>> spin_basis(int nu, const ContextPtr<F>& ctx) {
  const auto subsets = spin_subsets(nu, ctx->N());
  const auto p = phi(ctx->odd() ? nu : 1, ctx);
  std::vector<CliffordElement<F>> out;
  for (Monomial J : subsets) out.push_back(CliffordElement<F>::monomial(ctx, J) * p);
  return out;
}

template <class F>
Matrix<F> spin_rep(int nu, const Generator& g, const ContextPtr<F>& ctx) {
  const auto subsets = spin_subsets(nu, ctx->N());
  const auto basis = spin_basis(nu, ctx);
  const int ideal_nu = ctx->odd() ? nu : 1;
  const auto x = pi(g, ctx);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Matrix<F> m = Matrix<F>::Constant(dim, dim, F(0));
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto co = coords_in_ideal(x * basis[static_cast<std::size_t>(col)], ideal_nu);
    for (std::size_t J = 0; J < co.size(); ++J) {
      if (co[J].is_zero()) continue;
      auto it = std::find(subsets.begin(), subsets.end(), static_cast<Monomial>(J));
      if (it == subsets.end()) throw std::domain_error("spin module is not invariant under " + generator_name(g));
      m(it - subsets.begin(), col) = co[J];
    }
  }
  return m;
}

template <class F>
std::vector<std::vector<F>> weights(const std::vector<Matrix<F>>& kmats) {
  if (kmats.empty()) return {};
  const Eigen::Index d = kmats.front().rows();
  std::vector<std::vector<F>> out(static_cast<std::size_t>(d));
  for (const auto& k : kmats)
    for (Eigen::Index c = 0; c < d; ++c) {
      for (Eigen::Index r = 0; r < d; ++r)
        if (r != c && !k(r, c).is_zero()) throw std::domain_error("K matrix is not diagonal on this basis");
      out[static_cast<std::size_t>(c)].push_back(k(c, c));
    }
  return out;
}

template <class F>
std::vector<int> highest_weight_positions(const std::vector<Matrix<F>>& emats) {
  std::vector<int> out;
  if (emats.empty()) return out;
  for (Eigen::Index c = 0; c < emats.front().cols(); ++c) {
    bool killed = true;
    for (const auto& e : emats)
      for (Eigen::Index r = 0; r < e.rows() && killed; ++r) killed = e(r, c).is_zero();
    if (killed) out.push_back(static_cast<int>(c));
  }
  return out;
}

template <class F>
std::size_t generated_algebra_dim(const std::vector<Matrix<F>>& gens) {
  if (gens.empty()) return 1;
  const Eigen::Index d = gens.front().rows();
  auto flat = [d](const Matrix<F>& m) {
    SparseVec<F, int> v;
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c)
        if (!m(r, c).is_zero()) v.emplace(static_cast<int>(r * d + c), m(r, c));
    return v;
  };
  SpanBuilder<F, int> sb;
  std::deque<Matrix<F>> work;
  const Matrix<F> id = Matrix<F>::Identity(d, d);
  sb.add(flat(id));
  work.push_back(id);
  while (!work.empty()) {
    const Matrix<F> x = std::move(work.front());
    work.pop_front();
    for (const auto& g : gens) {
      Matrix<F> y = g * x;
      if (sb.add(flat(y))) work.push_back(std::move(y));
    }
  }
  return sb.dim();
}

#define QCL_INSTANTIATE(F)                                                                               \
  template CliffordElement<F> pi(const Generator&, const ContextPtr<F>&);                                 \
  template Report verify_uq_relations(const ContextPtr<F>&, const std::string&);                         \
  template Report verify_matrix_relations(const GenImages<Matrix<F>>&, const FieldParams<F>&, int,       \
                                          const std::string&);                                           \
  template Report verify_pirels(const ContextPtr<F>&);                                                   \
  template CliffordElement<F> ad(const Generator&, const CliffordElement<F>&);                           \
  template Matrix<F> ad_matrix(const Generator&, const ContextPtr<F>&);                                  \
  template Matrix<F> t1(const Generator&, const FieldParams<F>&, int);                                   \
  template Matrix<F> t1_printed(const Generator&, const FieldParams<F>&, int);                           \
  template std::vector<CliffordElement<F>> spin_basis(int, const ContextPtr<F>&);                        \
  template Matrix<F> spin_rep(int, const Generator&, const ContextPtr<F>&);                              \
  template std::vector<std::vector<F>> weights(const std::vector<Matrix<F>>&);                           \
  template std::vector<int> highest_weight_positions(const std::vector<Matrix<F>>&);                     \
  template std::size_t generated_algebra_dim(const std::vector<Matrix<F>>&);

QCL_INSTANTIATE(Scalar)
QCL_INSTANTIATE(QuadRational)

}  // namespace qcl
