#pragma once

#include "qcl/linalg.hpp"
#include "qcl/report.hpp"
#include "qcl/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace qcl {

/// Ordered monomial gamma_1^{i_1} ... gamma_N^{i_N}; bit i set <=> gamma_{i+1}.
using Monomial = std::uint32_t;

inline Monomial gen_mask(int i) { return Monomial(1) << (i - 1); }
inline bool has_gen(Monomial m, int i) { return (m >> (i - 1)) & 1u; }
int popcount(Monomial m);
/// Generator indices of m in increasing order.
std::vector<int> indices(Monomial m);

template <class F>
using Terms = std::vector<std::pair<Monomial, F>>;

/// Fixed N, coefficient field and value of c. Holds the lazily filled,
/// thread-safe tables of products of ordered monomials.
template <class F>
class AlgebraContext : public std::enable_shared_from_this<AlgebraContext<F>> {
 public:
  static std::shared_ptr<const AlgebraContext> create(int N, FieldParams<F> params);

  int N() const { return N_; }
  int n() const { return n_; }
  int eps() const { return eps_; }
  bool odd() const { return eps_ == 1; }
  int prime(int i) const { return N_ + 1 - i; }
  const FieldParams<F>& params() const { return params_; }
  CMode cmode() const { return params_.cmode; }
  F qp(int e) const { return params_.qp(e); }

  /// gamma^m * gamma_k in normal form.
  std::shared_ptr<const Terms<F>> right_gen(Monomial m, int k) const;
  /// gamma^a * gamma^b in normal form.
  std::shared_ptr<const Terms<F>> product(Monomial a, Monomial b) const;

 private:
  AlgebraContext(int N, FieldParams<F> params);
  std::shared_ptr<const Terms<F>> compute_right_gen(Monomial m, int k) const;

  int N_, n_, eps_;
  FieldParams<F> params_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, std::shared_ptr<const Terms<F>>> gen_table_;
  mutable std::unordered_map<std::uint64_t, std::shared_ptr<const Terms<F>>> prod_table_;
};

template <class F>
using ContextPtr = std::shared_ptr<const AlgebraContext<F>>;

/// Element of Cl_q^N(c^2) in normal form: ordered monomial -> nonzero coefficient.
template <class F>
class CliffordElement {
 public:
  using Map = std::map<Monomial, F>;

  CliffordElement() = default;
  explicit CliffordElement(ContextPtr<F> ctx) : ctx_(std::move(ctx)) {}
  CliffordElement(ContextPtr<F> ctx, Map terms);

  static CliffordElement scalar(ContextPtr<F> ctx, const F& v);
  static CliffordElement one(ContextPtr<F> ctx) { return scalar(std::move(ctx), F(1)); }
  static CliffordElement gen(ContextPtr<F> ctx, int i);
  static CliffordElement monomial(ContextPtr<F> ctx, Monomial m, const F& v = F(1));

  const ContextPtr<F>& context() const { return ctx_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  F coefficient(Monomial m) const;
  void add_term(Monomial m, const F& v);

  CliffordElement operator-() const;
  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  CliffordElement& operator*=(const F& s);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(CliffordElement a, const F& s) { return a *= s; }
  friend CliffordElement operator*(const F& s, CliffordElement a) { return a *= s; }
  friend bool operator==(const CliffordElement& a, const CliffordElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const CliffordElement& a, const CliffordElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_same(const CliffordElement& o) const;

  ContextPtr<F> ctx_;
  Map terms_;
};

template <class F>
CliffordElement<F> multiply(const CliffordElement<F>& x, const CliffordElement<F>& y);
template <class F>
CliffordElement<F> operator*(const CliffordElement<F>& x, const CliffordElement<F>& y) {
  return multiply(x, y);
}

/// Normal form of gamma_{w_1} ... gamma_{w_k}; throws std::out_of_range on a bad index.
template <class F>
CliffordElement<F> rewrite(const std::vector<int>& word, const ContextPtr<F>& ctx);

enum class DegreeKind { Parity, Charge, Middle };
/// Common degree of the monomials of x, or nullopt if x is inhomogeneous.
/// Charge uses index k in 1..n; Middle needs odd N.
template <class F>
std::optional<int> degree(const CliffordElement<F>& x, DegreeKind kind, int k = 0);
int monomial_degree(Monomial m, int N, DegreeKind kind, int k);

template <class F>
CliffordElement<F> tau(const CliffordElement<F>& x);
/// gamma_i -> alpha_i gamma_i; requires alpha_i alpha_{i'} = 1.
template <class F>
CliffordElement<F> scale_auto(const CliffordElement<F>& x, const std::vector<F>& alpha);

template <class F>
CliffordElement<F> phi(int nu, const ContextPtr<F>& ctx);
template <class F>
CliffordElement<F> psi(int nu, const ContextPtr<F>& ctx);
template <class F>
CliffordElement<F> rho(int eta, const ContextPtr<F>& ctx);

/// gamma^J phi^nu for J in {1..n}, J in binary-counter order (gamma_1 is the low bit).
template <class F>
std::vector<CliffordElement<F>> ideal_basis(int nu, const ContextPtr<F>& ctx);
template <class F>
std::vector<F> coords_in_ideal(const CliffordElement<F>& x, int nu);

/// mu has n entries; eta_hat 1 needs odd N.
template <class F>
CliffordElement<F> z_central(const std::vector<F>& mu, int eta_hat, const ContextPtr<F>& ctx);
template <class F>
CliffordElement<F> z0(const ContextPtr<F>& ctx);
template <class F>
CliffordElement<F> z1(const ContextPtr<F>& ctx);
/// mu extended to all N indices: mu_{i'} = 1/mu_i, mu_{n+1} = 1.
template <class F>
std::vector<F> extend_mu(const std::vector<F>& mu, int N);
template <class F>
std::vector<CliffordElement<F>> centralizer_solve(const std::vector<F>& mu, int eta_hat, const ContextPtr<F>& ctx);

template <class F>
Report verify_defining_relations(const ContextPtr<F>& ctx);

/// Monomial rendered as g1g3, empty monomial as 1.
std::string monomial_name(Monomial m);

/// Re-expresses a symbolic element in another backend.
template <class F>
CliffordElement<F> convert(const CliffordElement<Scalar>& x, const ContextPtr<F>& ctx);

template <class F>
SparseVec<F, Monomial> as_sparse(const CliffordElement<F>& x) {
  return SparseVec<F, Monomial>(x.terms().begin(), x.terms().end());
}

}  // namespace qcl
