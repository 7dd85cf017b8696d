#pragma once

#include "qcl/clifford.hpp"

#include <functional>
#include <stdexcept>

namespace qcl {

/// Packed tensor index: base-N digits (0-based), leg 1 most significant.
using TensorIndex = std::uint64_t;

struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Cap on materialized operator dimension, from QCLIFFORD_MAX_DIM (default 10^4).
std::size_t max_materialized_dim();

TensorIndex pack_index(const std::vector<int>& one_based, int N);
std::vector<int> unpack_index(TensorIndex idx, int N, int k);
TensorIndex ipow(int N, int k);

template <class F>
struct TensorVector {
  int N = 0;
  int k = 0;
  SparseVec<F, TensorIndex> entries;

  static TensorVector basis(int N, const std::vector<int>& one_based, const F& v = F(1));
  bool is_zero() const { return entries.empty(); }
  void add(TensorIndex i, const F& v);
  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator*=(const F& s);
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator*(const F& s, TensorVector a) { return a *= s; }
  friend bool operator==(const TensorVector& a, const TensorVector& b) { return a.k == b.k && a.entries == b.entries; }
};

/// Sparse matrix on V (x) V given by its columns; column/row index a*N + b for e_{a+1} (x) e_{b+1}.
template <class F>
struct TwoSite {
  int N = 0;
  std::vector<SparseVec<F, int>> cols;

  F entry(int row, int col) const;
};

/// Lazily composed linear map on V^{(x)k}. Products act rightmost first.
template <class F>
class TensorOperator {
 public:
  using Fn = std::function<TensorVector<F>(const TensorVector<F>&)>;

  TensorOperator() = default;
  static TensorOperator identity(int N, int k);
  /// The two-site matrix m acting on legs (pos, pos+1) of k legs.
  static TensorOperator local(int N, int k, int pos, std::shared_ptr<const TwoSite<F>> m);
  static TensorOperator custom(int N, int k, Fn fn);
  static TensorOperator sum(const std::vector<std::pair<F, TensorOperator>>& terms);
  static TensorOperator product(const std::vector<TensorOperator>& factors);

  int N() const { return N_; }
  int legs() const { return k_; }
  TensorVector<F> apply(const TensorVector<F>& v) const;

  friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) { return product({a, b}); }
  friend TensorOperator operator+(const TensorOperator& a, const TensorOperator& b) {
    return sum({{F(1), a}, {F(1), b}});
  }
  friend TensorOperator operator-(const TensorOperator& a, const TensorOperator& b) {
    return sum({{F(1), a}, {F(-1), b}});
  }
  friend TensorOperator operator*(const F& s, const TensorOperator& a) { return sum({{s, a}}); }

 private:
  struct Node;
  int N_ = 0;
  int k_ = 0;
  std::shared_ptr<const Node> node_;
};

/// All N^k columns of op; throws ResourceCapError beyond max_materialized_dim().
template <class F>
std::vector<SparseVec<F, TensorIndex>> materialize(const TensorOperator<F>& op);

template <class F>
struct MetricData {
  std::vector<int> two_rho;  // 2 rho_i, i = 1..N
  /// C^{ij} = C_{ij}; nonzero only for j = i'.
  F C(int i, int j) const;
  int N = 0;
  const FieldParams<F>* params = nullptr;
};

/// Tensor-space data for one algebra context: R-hat, K, projectors,
/// cached antisymmetrizer columns, and the c = 0 context that hosts wedges.
template <class F>
class BraidContext : public std::enable_shared_from_this<BraidContext<F>> {
 public:
  static std::shared_ptr<const BraidContext> create(const ContextPtr<F>& ctx);

  const ContextPtr<F>& algebra() const { return ctx_; }
  const ContextPtr<F>& exterior() const { return ext_; }
  int N() const { return ctx_->N(); }
  const MetricData<F>& metric() const { return metric_; }

  std::shared_ptr<const TwoSite<F>> rhat() const { return rhat_; }
  std::shared_ptr<const TwoSite<F>> rhat_inv() const { return rhat_inv_; }
  std::shared_ptr<const TwoSite<F>> kmat() const { return kmat_; }
  std::shared_ptr<const TwoSite<F>> p_plus() const { return pp_; }
  std::shared_ptr<const TwoSite<F>> p_minus() const { return pm_; }
  std::shared_ptr<const TwoSite<F>> p_zero() const { return p0_; }

  TensorOperator<F> rhat_at(int k, int pos) const { return TensorOperator<F>::local(N(), k, pos, rhat_); }
  TensorOperator<F> k_at(int k, int pos) const { return TensorOperator<F>::local(N(), k, pos, kmat_); }

  /// d'^-_{k+1,i} on k+1 legs.
  TensorOperator<F> d_prime_minus(int k_plus_1, int i) const;
  /// b^-_{1,k} on k+1 legs.
  TensorOperator<F> b_minus(int k) const;
  /// A_k; rejects k < 1 and k > N.
  TensorOperator<F> antisymmetrizer(int k) const;
  /// A_k(e_I) from the column cache.
  const SparseVec<F, TensorIndex>& antisym_column(int k, TensorIndex I) const;
  /// (id (x) A_{k-1}) b^-_{1,k-1} / [k] applied to v, k >= 2.
  TensorVector<F> antisym_recursion(int k, const TensorVector<F>& v) const;

  /// g(e_i (x) e_j).
  F g(int i, int j) const;
  F g_pair(const TensorVector<F>& x) const;
  TensorVector<F> contract(const TensorVector<F>& rho_k, const TensorVector<F>& rho_l) const;

  /// Class of t in V^{wedge k} as an element of the c = 0 algebra.
  CliffordElement<F> wedge_coords(const TensorVector<F>& t) const;
  TensorVector<F> wedge_lift(const CliffordElement<F>& x) const;
  /// A_k(e_J) for increasing J of length k, as a span with coordinates.
  const SpanBuilder<F, TensorIndex>& wedge_span(int k) const;
  /// Increasing multi-indices of length k in the order used by wedge_span.
  std::vector<Monomial> wedge_monomials(int k) const;

 private:
  explicit BraidContext(const ContextPtr<F>& ctx);

  ContextPtr<F> ctx_;
  ContextPtr<F> ext_;
  MetricData<F> metric_;
  std::shared_ptr<const TwoSite<F>> rhat_, rhat_inv_, kmat_, pp_, pm_, p0_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, TensorIndex>, std::shared_ptr<const SparseVec<F, TensorIndex>>> columns_;
  mutable std::map<int, std::shared_ptr<const SpanBuilder<F, TensorIndex>>> spans_;
  mutable std::map<int, TensorOperator<F>> bminus_;
};

template <class F>
using BraidPtr = std::shared_ptr<const BraidContext<F>>;

/// Matrix of a two-site operator as an N^2 x N^2 Eigen matrix.
template <class F>
Matrix<F> dense(const TwoSite<F>& m);
template <class F>
TwoSite<F> from_dense(const Matrix<F>& m, int N);

}  // namespace qcl
