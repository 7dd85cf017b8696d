#include "qcl/braid.hpp"

#include <cstdlib>
#include <string>

namespace qcl {

std::size_t max_materialized_dim() {
  if (const char* env = std::getenv("QCLIFFORD_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10000;
}

TensorIndex ipow(int N, int k) {
  TensorIndex r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<TensorIndex>(N);
  return r;
}

TensorIndex pack_index(const std::vector<int>& one_based, int N) {
  TensorIndex r = 0;
  for (int i : one_based) {
    if (i < 1 || i > N) throw std::out_of_range("tensor index " + std::to_string(i) + " out of range");
    r = r * static_cast<TensorIndex>(N) + static_cast<TensorIndex>(i - 1);
  }
  return r;
}

std::vector<int> unpack_index(TensorIndex idx, int N, int k) {
  std::vector<int> out(static_cast<std::size_t>(k));
  for (int p = k - 1; p >= 0; --p) {
    out[static_cast<std::size_t>(p)] = static_cast<int>(idx % static_cast<TensorIndex>(N)) + 1;
    idx /= static_cast<TensorIndex>(N);
  }
  return out;
}

template <class F>
TensorVector<F> TensorVector<F>::basis(int N, const std::vector<int>& one_based, const F& v) {
  TensorVector t;
  t.N = N;
  t.k = static_cast<int>(one_based.size());
  if (!v.is_zero()) t.entries.emplace(pack_index(one_based, N), v);
  return t;
}

template <class F>
void TensorVector<F>::add(TensorIndex i, const F& v) {
  if (v.is_zero()) return;
  auto it = entries.find(i);
  if (it == entries.end()) {
    entries.emplace(i, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) entries.erase(it);
  }
}

template <class F>
TensorVector<F>& TensorVector<F>::operator+=(const TensorVector& o) {
  if (entries.empty() && N == 0) {
    N = o.N;
    k = o.k;
  }
  if (!o.entries.empty() && !entries.empty() && o.k != k) throw std::invalid_argument("tensor leg count mismatch");
  if (entries.empty()) k = o.k;
  for (const auto& [i, v] : o.entries) add(i, v);
  return *this;
}

template <class F>
TensorVector<F>& TensorVector<F>::operator*=(const F& s) {
  if (s.is_zero()) {
    entries.clear();
    return *this;
  }
  for (auto& [i, v] : entries) v *= s;
  return *this;
}

template <class F>
F TwoSite<F>::entry(int row, int col) const {
  const auto& c = cols[static_cast<std::size_t>(col)];
  auto it = c.find(row);
  return it == c.end() ? F(0) : it->second;
}

template <class F>
struct TensorOperator<F>::Node {
  enum class Kind { Identity, Local, Sum, Product, Custom } kind = Kind::Identity;
  std::shared_ptr<const TwoSite<F>> m;
  int pos = 0;
  std::vector<std::pair<F, TensorOperator>> terms;
  std::vector<TensorOperator> factors;
  Fn fn;
};

template <class F>
TensorOperator<F> TensorOperator<F>::identity(int N, int k) {
  TensorOperator op;
  op.N_ = N;
  op.k_ = k;
  op.node_ = std::make_shared<const Node>();
  return op;
}

template <class F>
TensorOperator<F> TensorOperator<F>::local(int N, int k, int pos, std::shared_ptr<const TwoSite<F>> m) {
  if (pos < 1 || pos > k - 1) throw std::out_of_range("leg placement outside 1..k-1");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Local;
  node->m = std::move(m);
  node->pos = pos;
  TensorOperator op;
  op.N_ = N;
  op.k_ = k;
  op.node_ = std::move(node);
  return op;
}

template <class F>
TensorOperator<F> TensorOperator<F>::custom(int N, int k, Fn fn) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Custom;
  node->fn = std::move(fn);
  TensorOperator op;
  op.N_ = N;
  op.k_ = k;
  op.node_ = std::move(node);
  return op;
}

template <class F>
TensorOperator<F> TensorOperator<F>::sum(const std::vector<std::pair<F, TensorOperator>>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty operator sum");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Sum;
  for (const auto& t : terms) {
    if (t.second.k_ != terms.front().second.k_) throw std::invalid_argument("operator leg count mismatch");
    if (!t.first.is_zero()) node->terms.push_back(t);
  }
  TensorOperator op;
  op.N_ = terms.front().second.N_;
  op.k_ = terms.front().second.k_;
  op.node_ = std::move(node);
  return op;
}

template <class F>
TensorOperator<F> TensorOperator<F>::product(const std::vector<TensorOperator>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty operator product");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Product;
  for (const auto& f : factors) {
    if (f.k_ != factors.front().k_) throw std::invalid_argument("operator leg count mismatch");
    if (f.node_->kind != Node::Kind::Identity) node->factors.push_back(f);
  }
  TensorOperator op;
  op.N_ = factors.front().N_;
  op.k_ = factors.front().k_;
  if (node->factors.empty()) return identity(op.N_, op.k_);
  if (node->factors.size() == 1) return node->factors.front();
  op.node_ = std::move(node);
  return op;
}

namespace {

template <class F>
TensorVector<F> apply_local(const TensorVector<F>& v, const TwoSite<F>& m, int pos) {
  const int N = v.N;
  const TensorIndex lo = ipow(N, v.k - pos - 1);
  const TensorIndex nn = static_cast<TensorIndex>(N);
  TensorVector<F> out;
  out.N = N;
  out.k = v.k;
  for (const auto& [idx, val] : v.entries) {
    const TensorIndex d2 = (idx / lo) % nn;
    const TensorIndex d1 = (idx / lo / nn) % nn;
    const TensorIndex base = idx - (d1 * nn + d2) * lo;
    for (const auto& [row, w] : m.cols[static_cast<std::size_t>(d1 * nn + d2)])
      out.add(base + static_cast<TensorIndex>(row) * lo, val * w);
  }
  return out;
}

}  // namespace

template <class F>
TensorVector<F> TensorOperator<F>::apply(const TensorVector<F>& v) const {
  if (!node_) throw std::logic_error("empty tensor operator");
  if (!v.entries.empty() && v.k != k_)
    throw std::invalid_argument("operator on " + std::to_string(k_) + " legs applied to " + std::to_string(v.k));
  using K = typename Node::Kind;
  switch (node_->kind) {
    case K::Identity: return v;
    case K::Local: return apply_local(v, *node_->m, node_->pos);
    case K::Custom: return node_->fn(v);
    case K::Sum: {
      TensorVector<F> out;
      out.N = N_;
      out.k = k_;
      for (const auto& [c, op] : node_->terms) out += c * op.apply(v);
      return out;
    }
    case K::Product: {
      TensorVector<F> x = v;
      for (auto it = node_->factors.rbegin(); it != node_->factors.rend(); ++it) x = it->apply(x);
      return x;
    }
  }
  return v;
}

template <class F>
std::vector<SparseVec<F, TensorIndex>> materialize(const TensorOperator<F>& op) {
  const TensorIndex dim = ipow(op.N(), op.legs());
  if (dim > max_materialized_dim())
    throw ResourceCapError("operator dimension " + std::to_string(dim) + " exceeds QCLIFFORD_MAX_DIM=" +
                           std::to_string(max_materialized_dim()));
  std::vector<SparseVec<F, TensorIndex>> cols;
  cols.reserve(static_cast<std::size_t>(dim));
  for (TensorIndex i = 0; i < dim; ++i) {
    TensorVector<F> e;
    e.N = op.N();
    e.k = op.legs();
    e.entries.emplace(i, F(1));
    cols.push_back(op.apply(e).entries);
  }
  return cols;
}

template <class F>
F MetricData<F>::C(int i, int j) const {
  if (j != N + 1 - i) return F(0);
  return params->qp(-two_rho[static_cast<std::size_t>(i - 1)]);
}

template <class F>
Matrix<F> dense(const TwoSite<F>& m) {
  const Eigen::Index d = Eigen::Index(m.N) * m.N;
  Matrix<F> out = Matrix<F>::Constant(d, d, F(0));
  for (Eigen::Index c = 0; c < d; ++c)
    for (const auto& [r, v] : m.cols[static_cast<std::size_t>(c)]) out(r, c) = v;
  return out;
}

template <class F>
TwoSite<F> from_dense(const Matrix<F>& m, int N) {
  TwoSite<F> out;
  out.N = N;
  out.cols.resize(static_cast<std::size_t>(N * N));
  for (Eigen::Index c = 0; c < m.cols(); ++c) out.cols[static_cast<std::size_t>(c)] = column_of(m, c);
  return out;
}

namespace {

template <class F>
TwoSite<F> combine(int N, const std::vector<std::pair<F, const TwoSite<F>*>>& parts) {
  TwoSite<F> out;
  out.N = N;
  out.cols.resize(static_cast<std::size_t>(N * N));
  for (int c = 0; c < N * N; ++c)
    for (const auto& [f, m] : parts) {
      if (m) {
        axpy(out.cols[static_cast<std::size_t>(c)], f, m->cols[static_cast<std::size_t>(c)]);
      } else {
        SparseVec<F, int> e{{c, F(1)}};
        axpy(out.cols[static_cast<std::size_t>(c)], f, e);
      }
    }
  return out;
}

}  // namespace

template <class F>
BraidContext<F>::BraidContext(const ContextPtr<F>& ctx) : ctx_(ctx) {
  const int N = ctx->N();
  if (ctx->cmode() == CMode::Zero) {
    ext_ = ctx;
  } else {
    FieldParams<F> p = ctx->params();
    p.c = F(0);
    p.cmode = CMode::Zero;
    ext_ = AlgebraContext<F>::create(N, p);
  }
  metric_.N = N;
  metric_.params = &ctx_->params();
  for (int i = 1; i <= N; ++i) {
    const int ip = N + 1 - i;
    // 2 rho_i = N - 2i for i < i', -(N - 2i') for i > i'.
    metric_.two_rho.push_back(i < ip ? N - 2 * i : (i > ip ? -(N - 2 * ip) : 0));
  }
  auto idx = [N](int a, int b) { return (a - 1) * N + (b - 1); };
  const F q2d = ctx->qp(2) - ctx->qp(-2);
  TwoSite<F> r, kk;
  r.N = kk.N = N;
  r.cols.resize(static_cast<std::size_t>(N * N));
  kk.cols.resize(static_cast<std::size_t>(N * N));
  for (int k = 1; k <= N; ++k)
    for (int l = 1; l <= N; ++l) {
      auto& col = r.cols[static_cast<std::size_t>(idx(k, l))];
      auto put = [&col](int row, const F& v) {
        SparseVec<F, int> e{{row, v}};
        axpy(col, F(1), e);
      };
      put(idx(l, k), ctx->qp(2 * int(l == k) - 2 * int(l == N + 1 - k)));
      if (k < l) put(idx(k, l), q2d);
      if (l == N + 1 - k) {
        for (int i = 1; i < l; ++i) put(idx(i, N + 1 - i), -q2d * metric_.C(i, N + 1 - i) * metric_.C(k, l));
        for (int i = 1; i <= N; ++i)
          kk.cols[static_cast<std::size_t>(idx(k, l))].emplace(idx(i, N + 1 - i),
                                                                metric_.C(i, N + 1 - i) * metric_.C(k, l));
      }
    }
  const auto& p = ctx->params();
  const F qq = p.qhat_plus() * p.qhat_minus();
  const F norm = (ctx->qp(2) + ctx->qp(-2)).inverse();
  TwoSite<F> pp = combine<F>(N, {{ctx->qp(-2) * norm, nullptr},
                                 {norm, &r},
                                 {-qq / (ctx->qp(2 * N) - F(1)) * norm, &kk}});
  TwoSite<F> pm = combine<F>(N, {{ctx->qp(2) * norm, nullptr},
                                 {-norm, &r},
                                 {-qq / (ctx->qp(2 * N - 4) + F(1)) * norm, &kk}});
  TwoSite<F> p0 = combine<F>(N, {{F(1), nullptr}, {F(-1), &pp}, {F(-1), &pm}});
  // Spectral decomposition R = q^2 P+ - q^{-2} P- + q^{2-2N} P0.
  TwoSite<F> ri = combine<F>(N, {{ctx->qp(-2), &pp}, {-ctx->qp(2), &pm}, {ctx->qp(2 * N - 2), &p0}});
  rhat_ = std::make_shared<const TwoSite<F>>(std::move(r));
  kmat_ = std::make_shared<const TwoSite<F>>(std::move(kk));
  pp_ = std::make_shared<const TwoSite<F>>(std::move(pp));
  pm_ = std::make_shared<const TwoSite<F>>(std::move(pm));
  p0_ = std::make_shared<const TwoSite<F>>(std::move(p0));
  rhat_inv_ = std::make_shared<const TwoSite<F>>(std::move(ri));
}

template <class F>
std::shared_ptr<const BraidContext<F>> BraidContext<F>::create(const ContextPtr<F>& ctx) {
  return std::shared_ptr<const BraidContext<F>>(new BraidContext<F>(ctx));
}

template <class F>
TensorOperator<F> BraidContext<F>::d_prime_minus(int k_plus_1, int i) const {
  const int k = k_plus_1 - 1;
  if (k < 1 || k > N() - 1 || i < 1 || i > k) throw std::out_of_range("d'- index out of range");
  const int legs = k + 1;
  std::vector<TensorOperator<F>> chain;
  for (int p = 1; p <= k - i + 1; ++p) chain.push_back(k_at(legs, p));
  std::vector<std::pair<F, TensorOperator<F>>> alt;
  for (int j = 0; j <= i - 1; ++j) {
    std::vector<TensorOperator<F>> prod{TensorOperator<F>::identity(N(), legs)};
    for (int l = 1; l <= j; ++l) prod.push_back(rhat_at(legs, k - i + 1 + l));
    alt.emplace_back(power(F(-ctx_->qp(-2)), j), TensorOperator<F>::product(prod));
  }
  chain.push_back(TensorOperator<F>::sum(alt));
  return TensorOperator<F>::product(chain);
}

template <class F>
TensorOperator<F> BraidContext<F>::b_minus(int k) const {
  if (k < 0 || k > N() - 1) throw std::out_of_range("b- index out of range");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = bminus_.find(k);
    if (it != bminus_.end()) return it->second;
  }
  const int legs = k + 1;
  std::vector<std::pair<F, TensorOperator<F>>> terms;
  for (int i = 0; i <= k; ++i) {
    std::vector<TensorOperator<F>> stair{TensorOperator<F>::identity(N(), legs)};
    for (int p = 1; p <= i; ++p) stair.push_back(rhat_at(legs, p));
    terms.emplace_back(power(F(-ctx_->qp(-2)), i), TensorOperator<F>::product(stair));
  }
  const auto& p = ctx_->params();
  const F pref = -(p.qhat_plus() * p.qhat_minus()) / (F(1) + ctx_->qp(2 * N() - 4 * k));
  for (int i = 1; i <= k; ++i) terms.emplace_back(pref * ctx_->qp(4 * i - 4 * k - 2), d_prime_minus(k + 1, i));
  auto op = TensorOperator<F>::sum(terms);
  std::lock_guard<std::mutex> lock(mu_);
  return bminus_.emplace(k, op).first->second;
}

template <class F>
TensorVector<F> BraidContext<F>::antisym_recursion(int k, const TensorVector<F>& v) const {
  if (k < 2 || k > N()) throw std::out_of_range("antisymmetrizer recursion needs 2 <= k <= N");
  const TensorVector<F> w = b_minus(k - 1).apply(v);
  const TensorIndex lo = ipow(N(), k - 1);
  const F inv = qnum(ctx_->params(), k).inverse();
  TensorVector<F> out;
  out.N = N();
  out.k = k;
  for (const auto& [idx, val] : w.entries) {
    const TensorIndex head = idx / lo, tail = idx % lo;
    const F f = val * inv;
    if (k - 1 == 1) {
      out.add(idx, f);
      continue;
    }
    for (const auto& [t, x] : antisym_column(k - 1, tail)) out.add(head * lo + t, f * x);
  }
  return out;
}

template <class F>
const SparseVec<F, TensorIndex>& BraidContext<F>::antisym_column(int k, TensorIndex I) const {
  if (k < 1 || k > N()) throw std::out_of_range("antisymmetrizer degree must lie in 1..N");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = columns_.find({k, I});
    if (it != columns_.end()) return *it->second;
  }
  SparseVec<F, TensorIndex> col;
  if (k == 1) {
    col.emplace(I, F(1));
  } else if (k == 2) {
    for (const auto& [row, v] : pm_->cols[static_cast<std::size_t>(I)]) col.emplace(static_cast<TensorIndex>(row), v);
  } else {
    TensorVector<F> e;
    e.N = N();
    e.k = k;
    e.entries.emplace(I, F(1));
    col = antisym_recursion(k, e).entries;
  }
  auto value = std::make_shared<const SparseVec<F, TensorIndex>>(std::move(col));
  std::lock_guard<std::mutex> lock(mu_);
  return *columns_.emplace(std::make_pair(k, I), std::move(value)).first->second;
}

template <class F>
TensorOperator<F> BraidContext<F>::antisymmetrizer(int k) const {
  if (k < 1 || k > N()) throw std::out_of_range("antisymmetrizer degree must lie in 1..N");
  if (k == 1) return TensorOperator<F>::identity(N(), 1);
  if (k == 2) return TensorOperator<F>::local(N(), 2, 1, pm_);
  auto self = this->shared_from_this();
  return TensorOperator<F>::custom(N(), k, [self, k](const TensorVector<F>& v) {
    TensorVector<F> out;
    out.N = self->N();
    out.k = k;
    for (const auto& [i, x] : v.entries)
      for (const auto& [r, y] : self->antisym_column(k, i)) out.add(r, x * y);
    return out;
  });
}

template <class F>
F BraidContext<F>::g(int i, int j) const {
  const int N = this->N();
  if (j != N + 1 - i) return F(0);
  const auto& p = ctx_->params();
  return p.c * p.c * ctx_->qp(2 * N - 3) * p.qhat_plus() * metric_.C(i, j) / (ctx_->qp(2 * N - 4) + F(1));
}

template <class F>
F BraidContext<F>::g_pair(const TensorVector<F>& x) const {
  if (!x.entries.empty() && x.k != 2) throw std::invalid_argument("g_pair needs a vector on two legs");
  F out(0);
  for (const auto& [idx, v] : x.entries) {
    const auto ij = unpack_index(idx, N(), 2);
    const F gv = g(ij[0], ij[1]);
    if (!gv.is_zero()) out += v * gv;
  }
  return out;
}

namespace {

template <class F>
TensorVector<F> contract_one(const BraidContext<F>& b, int a, const TensorVector<F>& t) {
  const int N = b.N();
  TensorVector<F> out;
  out.N = N;
  out.k = t.k - 1;
  if (t.entries.empty() || t.k < 1) return out;
  const TensorVector<F> w = b.b_minus(t.k - 1).apply(t);
  const TensorIndex lo = ipow(N, t.k - 1);
  for (const auto& [idx, v] : w.entries) {
    const int j = static_cast<int>(idx / lo) + 1;
    const F gv = b.g(a, j);
    if (!gv.is_zero()) out.add(idx % lo, v * gv);
  }
  return out;
}

}  // namespace

template <class F>
TensorVector<F> BraidContext<F>::contract(const TensorVector<F>& rho_k, const TensorVector<F>& rho_l) const {
  TensorVector<F> out;
  out.N = N();
  out.k = std::max(rho_l.k - rho_k.k, 0);
  if (rho_k.k > rho_l.k) return out;
  for (const auto& [idx, x] : rho_k.entries) {
    const auto a = unpack_index(idx, N(), rho_k.k);
    TensorVector<F> t = rho_l;
    for (auto it = a.rbegin(); it != a.rend() && !t.entries.empty(); ++it) t = contract_one(*this, *it, t);
    t.k = out.k;
    out += x * t;
  }
  return out;
}

template <class F>
std::vector<Monomial> BraidContext<F>::wedge_monomials(int k) const {
  std::vector<Monomial> out;
  for (Monomial m = 0; m < (Monomial(1) << N()); ++m)
    if (popcount(m) == k) out.push_back(m);
  return out;
}

template <class F>
const SpanBuilder<F, TensorIndex>& BraidContext<F>::wedge_span(int k) const {
  if (k < 0 || k > N()) throw std::out_of_range("wedge degree must lie in 0..N");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = spans_.find(k);
    if (it != spans_.end()) return *it->second;
  }
  auto sb = std::make_shared<SpanBuilder<F, TensorIndex>>();
  for (Monomial m : wedge_monomials(k)) {
    SparseVec<F, TensorIndex> u;
    if (k == 0) {
      u.emplace(0, F(1));
    } else {
      u = antisym_column(k, pack_index(indices(m), N()));
    }
    if (!sb->add(u)) throw std::logic_error("antisymmetrized ordered tensors are dependent in degree " + std::to_string(k));
  }
  std::lock_guard<std::mutex> lock(mu_);
  return *spans_.emplace(k, std::move(sb)).first->second;
}

template <class F>
CliffordElement<F> BraidContext<F>::wedge_coords(const TensorVector<F>& t) const {
  CliffordElement<F> out(ext_);
  if (t.entries.empty()) return out;
  if (t.k > N()) throw std::out_of_range("wedge degree exceeds N");
  SparseVec<F, TensorIndex> img;
  if (t.k == 0) {
    img = t.entries;
  } else {
    for (const auto& [i, x] : t.entries) axpy(img, x, antisym_column(t.k, i));
  }
  SparseVec<F, TensorIndex> residual;
  auto co = wedge_span(t.k).coordinates(img, &residual);
  if (!co) throw std::domain_error("antisymmetrized tensor outside the span of ordered wedges");
  const auto ms = wedge_monomials(t.k);
  for (std::size_t j = 0; j < ms.size(); ++j) out.add_term(ms[j], (*co)[j]);
  return out;
}

template <class F>
TensorVector<F> BraidContext<F>::wedge_lift(const CliffordElement<F>& x) const {
  TensorVector<F> out;
  out.N = N();
  bool first = true;
  for (const auto& [m, v] : x.terms()) {
    const int k = popcount(m);
    if (!first && k != out.k) throw std::invalid_argument("wedge_lift needs a homogeneous element");
    first = false;
    out.k = k;
    out.add(pack_index(indices(m), N()), v);
  }
  return out;
}

template <class F>
Report verify_defining_relations(const ContextPtr<F>& ctx) {
  const auto b = BraidContext<F>::create(ctx);
  const int N = ctx->N();
  Report rep;
  for (int col = 0; col < N * N; ++col) {
    CliffordElement<F> acc(ctx);
    for (const auto& [row, v] : b->p_plus()->cols[static_cast<std::size_t>(col)])
      acc += rewrite({row / N + 1, row % N + 1}, ctx) * v;
    const std::string key =
        "defrel/P+[" + std::to_string(col / N + 1) + "," + std::to_string(col % N + 1) + "]";
    rep.add(key, acc.is_zero(), acc.is_zero() ? "" : acc.to_string());
  }
  CliffordElement<F> cc(ctx);
  for (int i = 1; i <= N; ++i) cc += rewrite({i, N + 1 - i}, ctx) * b->metric().C(i, N + 1 - i);
  const auto& p = ctx->params();
  const F expect = p.c * p.c * (ctx->qp(2 * N) - F(1)) / (ctx->qp(2) - F(1));
  const auto target = CliffordElement<F>::scalar(ctx, expect);
  rep.add("defrel/C", cc == target, cc == target ? "" : cc.to_string());
  return rep;
}

#define QCL_INSTANTIATE(F)                                                                        \
  template struct TensorVector<F>;                                                                \
  template struct TwoSite<F>;                                                                     \
  template class TensorOperator<F>;                                                               \
  template struct MetricData<F>;                                                                  \
  template class BraidContext<F>;                                                                 \
  template std::vector<SparseVec<F, TensorIndex>> materialize(const TensorOperator<F>&);          \
  template Matrix<F> dense(const TwoSite<F>&);                                                    \
  template TwoSite<F> from_dense(const Matrix<F>&, int);                                          \
  template Report verify_defining_relations(const ContextPtr<F>&);

QCL_INSTANTIATE(Scalar)
QCL_INSTANTIATE(QuadRational)

}  // namespace qcl
