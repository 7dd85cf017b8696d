#include "qcl/clifford.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace qcl {

int popcount(Monomial m) { return std::popcount(m); }

std::vector<int> indices(Monomial m) {
  std::vector<int> out;
  for (int i = 1; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

std::string monomial_name(Monomial m) {
  if (m == 0) return "1";
  std::string s;
  for (int i : indices(m)) s += "g" + std::to_string(i);
  return s;
}

namespace {

int top_index(Monomial m) { return 32 - std::countl_zero(m); }

std::uint64_t key(Monomial a, std::uint32_t b) { return (std::uint64_t(a) << 32) | b; }

template <class F>
void accumulate(std::map<Monomial, F>& acc, Monomial m, const F& v) {
  if (v.is_zero()) return;
  auto it = acc.find(m);
  if (it == acc.end()) {
    acc.emplace(m, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) acc.erase(it);
  }
}

template <class F>
Terms<F> to_terms(const std::map<Monomial, F>& m) {
  return Terms<F>(m.begin(), m.end());
}

thread_local int rewrite_depth = 0;

struct DepthGuard {
  DepthGuard() {
    if (++rewrite_depth > 4096) {
      --rewrite_depth;
      throw std::runtime_error("rewrite recursion too deep");
    }
  }
  ~DepthGuard() { --rewrite_depth; }
};

}  // namespace

template <class F>
AlgebraContext<F>::AlgebraContext(int N, FieldParams<F> params)
    : N_(N), n_(N / 2), eps_(N % 2), params_(std::move(params)) {}

template <class F>
std::shared_ptr<const AlgebraContext<F>> AlgebraContext<F>::create(int N, FieldParams<F> params) {
  if (N < 3 || N > 31) throw std::invalid_argument("N must lie in 3..31");
  return std::shared_ptr<const AlgebraContext<F>>(new AlgebraContext<F>(N, std::move(params)));
}

template <class F>
std::shared_ptr<const Terms<F>> AlgebraContext<F>::right_gen(Monomial m, int k) const {
  const std::uint64_t kk = key(m, static_cast<std::uint32_t>(k));
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = gen_table_.find(kk);
    if (it != gen_table_.end()) return it->second;
  }
  auto value = compute_right_gen(m, k);
  std::lock_guard<std::mutex> lock(mu_);
  return gen_table_.emplace(kk, std::move(value)).first->second;
}

template <class F>
std::shared_ptr<const Terms<F>> AlgebraContext<F>::compute_right_gen(Monomial m, int k) const {
  DepthGuard guard;
  using Map = std::map<Monomial, F>;
  auto times_gen = [&](const Map& x, int g) {
    Map acc;
    for (const auto& [p, v] : x) {
      const auto t = right_gen(p, g);
      for (const auto& [r, w] : *t) accumulate(acc, r, v * w);
    }
    return acc;
  };
  auto as_map = [](const std::shared_ptr<const Terms<F>>& t) { return Map(t->begin(), t->end()); };
  auto add_scaled = [](Map& acc, const Map& x, const F& f) {
    if (f.is_zero()) return;
    for (const auto& [p, v] : x) accumulate(acc, p, f * v);
  };

  Map out;
  if (m == 0) {
    out.emplace(gen_mask(k), F(1));
    return std::make_shared<const Terms<F>>(to_terms(out));
  }
  const int top = top_index(m);
  const Monomial rest = m & ~gen_mask(top);
  const F c2 = params_.c * params_.c;
  if (top < k) {
    out.emplace(m | gen_mask(k), F(1));
  } else if (top == k) {
    if (k == prime(k)) {
      // gamma_{n+1}^2 = (q - q^{-1}) sum_{j<=n} q^{2j-2n} gamma_j gamma_{j'} + c^2
      const F qm = params_.qhat_minus();
      for (int j = 1; j <= n_; ++j)
        add_scaled(out, times_gen(as_map(right_gen(rest, j)), prime(j)), qm * qp(2 * j - 2 * n_));
      if (!c2.is_zero()) accumulate(out, rest, c2);
    }
  } else if (top != prime(k)) {
    add_scaled(out, times_gen(as_map(right_gen(rest, k)), top), -qp(2));
  } else {
    // gamma_{k'} gamma_k = -gamma_k gamma_{k'} + (q^2 - q^{-2}) sum_{j<k} q^{2j-2k+2} gamma_j gamma_{j'}
    //                      + c^2 q^{N-2k+1} (q + q^{-1})
    add_scaled(out, times_gen(as_map(right_gen(rest, k)), prime(k)), F(-1));
    const F qq = qp(2) - qp(-2);
    for (int j = 1; j < k; ++j)
      add_scaled(out, times_gen(as_map(right_gen(rest, j)), prime(j)), qq * qp(2 * j - 2 * k + 2));
    if (!c2.is_zero()) accumulate(out, rest, c2 * qp(N_ - 2 * k + 1) * params_.qhat_plus());
  }
  return std::make_shared<const Terms<F>>(to_terms(out));
}

template <class F>
std::shared_ptr<const Terms<F>> AlgebraContext<F>::product(Monomial a, Monomial b) const {
  if (b == 0) return std::make_shared<const Terms<F>>(Terms<F>{{a, F(1)}});
  const std::uint64_t kk = key(a, b);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = prod_table_.find(kk);
    if (it != prod_table_.end()) return it->second;
  }
  const int top = top_index(b);
  const Monomial rest = b & ~gen_mask(top);
  std::map<Monomial, F> acc;
  const auto head = product(a, rest);
  for (const auto& [p, v] : *head) {
    const auto t = right_gen(p, top);
    for (const auto& [r, w] : *t) accumulate(acc, r, v * w);
  }
  auto value = std::make_shared<const Terms<F>>(to_terms(acc));
  std::lock_guard<std::mutex> lock(mu_);
  return prod_table_.emplace(kk, std::move(value)).first->second;
}

template <class F>
CliffordElement<F>::CliffordElement(ContextPtr<F> ctx, Map terms) : ctx_(std::move(ctx)) {
  for (auto& [m, v] : terms)
    if (!v.is_zero()) terms_.emplace(m, std::move(v));
}

template <class F>
CliffordElement<F> CliffordElement<F>::scalar(ContextPtr<F> ctx, const F& v) {
  return monomial(std::move(ctx), 0, v);
}

template <class F>
CliffordElement<F> CliffordElement<F>::gen(ContextPtr<F> ctx, int i) {
  if (i < 1 || i > ctx->N()) throw std::out_of_range("generator index " + std::to_string(i) + " out of range");
  return monomial(std::move(ctx), gen_mask(i));
}

template <class F>
CliffordElement<F> CliffordElement<F>::monomial(ContextPtr<F> ctx, Monomial m, const F& v) {
  CliffordElement e(std::move(ctx));
  e.add_term(m, v);
  return e;
}

template <class F>
F CliffordElement<F>::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? F(0) : it->second;
}

template <class F>
void CliffordElement<F>::add_term(Monomial m, const F& v) {
  accumulate(terms_, m, v);
}

template <class F>
void CliffordElement<F>::check_same(const CliffordElement& o) const {
  if (ctx_ && o.ctx_ && ctx_ != o.ctx_) throw std::invalid_argument("Clifford elements from different contexts");
}

template <class F>
CliffordElement<F> CliffordElement<F>::operator-() const {
  CliffordElement r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

template <class F>
CliffordElement<F>& CliffordElement<F>::operator+=(const CliffordElement& o) {
  check_same(o);
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [m, v] : o.terms_) accumulate(terms_, m, v);
  return *this;
}

template <class F>
CliffordElement<F>& CliffordElement<F>::operator-=(const CliffordElement& o) {
  check_same(o);
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [m, v] : o.terms_) accumulate(terms_, m, F(-v));
  return *this;
}

template <class F>
CliffordElement<F>& CliffordElement<F>::operator*=(const F& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= s;
  return *this;
}

template <class F>
std::string CliffordElement<F>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, v] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (m == 0) {
      os << "(" << v.to_string() << ")";
    } else if (v.is_one()) {
      os << monomial_name(m);
    } else {
      os << "(" << v.to_string() << ")*" << monomial_name(m);
    }
  }
  return os.str();
}

template <class F>
CliffordElement<F> multiply(const CliffordElement<F>& x, const CliffordElement<F>& y) {
  if (x.context() && y.context() && x.context() != y.context())
    throw std::invalid_argument("Clifford elements from different contexts");
  const auto& ctx = x.context() ? x.context() : y.context();
  std::map<Monomial, F> acc;
  for (const auto& [a, u] : x.terms())
    for (const auto& [b, v] : y.terms()) {
      const F uv = u * v;
      const auto t = ctx->product(a, b);
      for (const auto& [m, w] : *t) accumulate(acc, m, w.is_one() ? uv : uv * w);
    }
  return CliffordElement<F>(ctx, std::move(acc));
}

template <class F>
CliffordElement<F> rewrite(const std::vector<int>& word, const ContextPtr<F>& ctx) {
  for (int i : word)
    if (i < 1 || i > ctx->N()) throw std::out_of_range("generator index " + std::to_string(i) + " out of range");
  std::map<Monomial, F> cur{{0, F(1)}};
  for (int k : word) {
    std::map<Monomial, F> next;
    for (const auto& [p, v] : cur) {
      const auto t = ctx->right_gen(p, k);
      for (const auto& [r, w] : *t) accumulate(next, r, v * w);
    }
    cur = std::move(next);
  }
  return CliffordElement<F>(ctx, std::move(cur));
}

int monomial_degree(Monomial m, int N, DegreeKind kind, int k) {
  const int n = N / 2;
  switch (kind) {
    case DegreeKind::Parity: return popcount(m) % 2;
    case DegreeKind::Charge:
      if (k < 1 || k > n) throw std::out_of_range("charge index must lie in 1..n");
      return int(has_gen(m, k)) - int(has_gen(m, N + 1 - k));
    case DegreeKind::Middle:
      if (N % 2 == 0) throw std::invalid_argument("middle grading needs odd N");
      return int(has_gen(m, n + 1));
  }
  return 0;
}

template <class F>
std::optional<int> degree(const CliffordElement<F>& x, DegreeKind kind, int k) {
  const int N = x.context()->N();
  std::optional<int> d;
  for (const auto& [m, v] : x.terms()) {
    const int dm = monomial_degree(m, N, kind, k);
    if (d && *d != dm) return std::nullopt;
    d = dm;
  }
  if (!d) {
    monomial_degree(0, N, kind, k);
    return 0;
  }
  return d;
}

template <class F>
CliffordElement<F> tau(const CliffordElement<F>& x) {
  const auto& ctx = x.context();
  CliffordElement<F> out(ctx);
  for (const auto& [m, v] : x.terms()) {
    std::vector<int> word;
    const auto idx = indices(m);
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) word.push_back(ctx->prime(*it));
    out += rewrite(word, ctx) * v;
  }
  return out;
}

template <class F>
CliffordElement<F> scale_auto(const CliffordElement<F>& x, const std::vector<F>& alpha) {
  const auto& ctx = x.context();
  const int N = ctx->N();
  if (static_cast<int>(alpha.size()) != N) throw std::invalid_argument("scale_auto needs N factors");
  for (int i = 1; i <= N; ++i)
    if (!(alpha[i - 1] * alpha[ctx->prime(i) - 1]).is_one())
      throw std::invalid_argument("scale_auto needs alpha_i alpha_i' = 1");
  CliffordElement<F> out(ctx);
  for (const auto& [m, v] : x.terms()) {
    F f = v;
    for (int i : indices(m)) f *= alpha[i - 1];
    out.add_term(m, f);
  }
  return out;
}

namespace {

template <class F>
CliffordElement<F> ordered_run(const ContextPtr<F>& ctx, int from, int to) {
  Monomial m = 0;
  for (int i = from; i <= to; ++i) m |= gen_mask(i);
  return CliffordElement<F>::monomial(ctx, m);
}

template <class F>
void check_nu(int nu, const ContextPtr<F>& ctx, const char* what) {
  if (ctx->odd() ? (nu != 1 && nu != -1) : nu != 1)
    throw std::invalid_argument(std::string(what) + ": nu must be +1 (even N) or ±1 (odd N)");
}

template <class F>
CliffordElement<F> middle(int nu, const ContextPtr<F>& ctx) {
  return CliffordElement<F>::scalar(ctx, F(nu) * ctx->params().c) + CliffordElement<F>::gen(ctx, ctx->n() + 1);
}

}  // namespace

template <class F>
CliffordElement<F> phi(int nu, const ContextPtr<F>& ctx) {
  check_nu(nu, ctx, "phi");
  const int n = ctx->n();
  if (!ctx->odd()) return ordered_run(ctx, n + 1, ctx->N());
  return middle(nu, ctx) * ordered_run(ctx, n + 2, ctx->N());
}

template <class F>
CliffordElement<F> psi(int nu, const ContextPtr<F>& ctx) {
  check_nu(nu, ctx, "psi");
  const int n = ctx->n();
  if (!ctx->odd()) return ordered_run(ctx, 1, n);
  return ordered_run(ctx, 1, n) * middle(nu, ctx);
}

template <class F>
CliffordElement<F> rho(int eta, const ContextPtr<F>& ctx) {
  if (!ctx->odd()) throw std::invalid_argument("rho needs odd N");
  check_nu(eta, ctx, "rho");
  const int n = ctx->n();
  return ordered_run(ctx, 1, n) * middle(eta, ctx) * ordered_run(ctx, n + 2, ctx->N());
}

template <class F>
std::vector<CliffordElement<F>> ideal_basis(int nu, const ContextPtr<F>& ctx) {
  const CliffordElement<F> p = phi(nu, ctx);
  std::vector<CliffordElement<F>> out;
  for (Monomial b = 0; b < (Monomial(1) << ctx->n()); ++b)
    out.push_back(CliffordElement<F>::monomial(ctx, b) * p);
  return out;
}

template <class F>
std::vector<F> coords_in_ideal(const CliffordElement<F>& x, int nu) {
  const auto& ctx = x.context();
  SpanBuilder<F, Monomial> sb;
  for (const auto& b : ideal_basis(nu, ctx))
    if (!sb.add(as_sparse(b))) throw std::logic_error("ideal basis is dependent");
  SparseVec<F, Monomial> residual;
  auto c = sb.coordinates(as_sparse(x), &residual);
  if (!c) {
    CliffordElement<F> r(ctx, std::map<Monomial, F>(residual.begin(), residual.end()));
    throw std::domain_error("element not in the left ideal; residual " + r.to_string());
  }
  return *c;
}

template <class F>
CliffordElement<F> z_central(const std::vector<F>& mu, int eta_hat, const ContextPtr<F>& ctx) {
  const int n = ctx->n(), N = ctx->N();
  if (static_cast<int>(mu.size()) != n) throw std::invalid_argument("z_central needs n values of mu");
  if (eta_hat != 0 && eta_hat != 1) throw std::invalid_argument("eta_hat must be 0 or 1");
  if (eta_hat == 1 && !ctx->odd()) throw std::invalid_argument("eta_hat = 1 needs odd N");
  for (const auto& m : mu)
    if (m.is_zero()) throw std::invalid_argument("mu entries must be nonzero");
  const auto& p = ctx->params();
  const F base = p.c * p.c * p.qhat_plus();
  const F sign = eta_hat ? -ctx->qp(2) : F(1);
  CliffordElement<F> out(ctx);
  for (Monomial J = 0; J < (Monomial(1) << n); ++J) {
    const auto idx = indices(J);
    const int k = static_cast<int>(idx.size());
    F coef(1);
    Monomial m = J;
    for (int r = 1; r <= k; ++r) {
      const int i = idx[r - 1];
      coef *= (mu[i - 1] - sign * ctx->qp(4 * k - 4 * r)) / (base * ctx->qp(N + 1 - 2 * i));
      m |= gen_mask(ctx->prime(i));
    }
    if (eta_hat) m |= gen_mask(n + 1);
    out.add_term(m, coef);
  }
  return out;
}

namespace {

template <class F>
CliffordElement<F> z_closed(const ContextPtr<F>& ctx, bool odd_form) {
  const int n = ctx->n();
  const auto& p = ctx->params();
  const F base = ctx->qp(1) * p.qhat_plus() * p.c * p.c;
  CliffordElement<F> out(ctx);
  for (Monomial J = 0; J < (Monomial(1) << n); ++J) {
    const auto idx = indices(J);
    const int k = static_cast<int>(idx.size());
    F coef(odd_form || k % 2 == 0 ? 1 : -1);
    for (int l = 1; l <= k; ++l) {
      const int e = odd_form ? 2 * l - 1 : 2 * l - 2;
      coef *= (ctx->qp(e) + ctx->qp(-e)) / base;
    }
    int L = 0;
    Monomial m = J;
    for (int i : idx) {
      L += i;
      m |= gen_mask(ctx->prime(i));
    }
    coef *= ctx->qp(2 * L - k * (2 * n - k + 1));
    if (odd_form) {
      m |= gen_mask(n + 1);
      coef /= p.c;
    }
    out.add_term(m, coef);
  }
  return out;
}

}  // namespace

template <class F>
CliffordElement<F> z0(const ContextPtr<F>& ctx) {
  if (ctx->odd()) throw std::invalid_argument("z0 needs even N");
  return z_closed(ctx, false);
}

template <class F>
CliffordElement<F> z1(const ContextPtr<F>& ctx) {
  if (!ctx->odd()) throw std::invalid_argument("z1 needs odd N");
  return z_closed(ctx, true);
}

template <class F>
std::vector<F> extend_mu(const std::vector<F>& mu, int N) {
  const int n = N / 2;
  std::vector<F> out(static_cast<std::size_t>(N), F(1));
  for (int i = 1; i <= n; ++i) {
    out[i - 1] = mu[i - 1];
    out[N - i] = mu[i - 1].inverse();
  }
  return out;
}

template <class F>
std::vector<CliffordElement<F>> centralizer_solve(const std::vector<F>& mu, int eta_hat, const ContextPtr<F>& ctx) {
  const int N = ctx->N();
  const auto full = extend_mu(mu, N);
  std::vector<Monomial> unknowns;
  for (Monomial m = 0; m < (Monomial(1) << N); ++m)
    if (popcount(m) % 2 == eta_hat) unknowns.push_back(m);
  const Eigen::Index rows = Eigen::Index(N) << N;
  Matrix<F> a = Matrix<F>::Constant(rows, static_cast<Eigen::Index>(unknowns.size()), F(0));
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto zm = CliffordElement<F>::monomial(ctx, unknowns[u]);
    for (int i = 1; i <= N; ++i) {
      const auto g = CliffordElement<F>::gen(ctx, i);
      const auto d = zm * g - full[i - 1] * (g * zm);
      for (const auto& [m, v] : d.terms()) a((Eigen::Index(i - 1) << N) + m, static_cast<Eigen::Index>(u)) = v;
    }
  }
  std::vector<CliffordElement<F>> out;
  for (const auto& x : nullspace(a)) {
    CliffordElement<F> z(ctx);
    for (std::size_t u = 0; u < unknowns.size(); ++u) z.add_term(unknowns[u], x(static_cast<Eigen::Index>(u)));
    out.push_back(std::move(z));
  }
  return out;
}

template <class F>
CliffordElement<F> convert(const CliffordElement<Scalar>& x, const ContextPtr<F>& ctx) {
  CliffordElement<F> out(ctx);
  for (const auto& [m, v] : x.terms()) out.add_term(m, convert(v, ctx->params()));
  return out;
}

#define QCL_INSTANTIATE(F)                                                                              \
  template class AlgebraContext<F>;                                                                     \
  template class CliffordElement<F>;                                                                    \
  template CliffordElement<F> multiply(const CliffordElement<F>&, const CliffordElement<F>&);          \
  template CliffordElement<F> rewrite(const std::vector<int>&, const ContextPtr<F>&);                  \
  template std::optional<int> degree(const CliffordElement<F>&, DegreeKind, int);                      \
  template CliffordElement<F> tau(const CliffordElement<F>&);                                          \
  template CliffordElement<F> scale_auto(const CliffordElement<F>&, const std::vector<F>&);            \
  template CliffordElement<F> phi(int, const ContextPtr<F>&);                                          \
  template CliffordElement<F> psi(int, const ContextPtr<F>&);                                          \
  template CliffordElement<F> rho(int, const ContextPtr<F>&);                                          \
  template std::vector<CliffordElement<F>> ideal_basis(int, const ContextPtr<F>&);                     \
  template std::vector<F> coords_in_ideal(const CliffordElement<F>&, int);                             \
  template CliffordElement<F> z_central(const std::vector<F>&, int, const ContextPtr<F>&);             \
  template CliffordElement<F> z0(const ContextPtr<F>&);                                                \
  template CliffordElement<F> z1(const ContextPtr<F>&);                                                \
  template std::vector<F> extend_mu(const std::vector<F>&, int);                                       \
  template std::vector<CliffordElement<F>> centralizer_solve(const std::vector<F>&, int, const ContextPtr<F>&); \
  template CliffordElement<F> convert(const CliffordElement<Scalar>&, const ContextPtr<F>&);

QCL_INSTANTIATE(Scalar)
QCL_INSTANTIATE(QuadRational)

}  // namespace qcl
