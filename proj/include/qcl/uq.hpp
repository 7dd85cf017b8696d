#pragma once

#include "qcl/clifford.hpp"

#include <string>

namespace qcl {

enum class GenKind { E, F, K, Kinv, EKinv };

struct Generator {
  GenKind kind;
  int i;  // 1..n
};

/// E1, F2, K1, Kinv1, EKinv3.
std::string generator_name(const Generator& g);
/// Inverse of generator_name; throws std::invalid_argument.
Generator parse_generator(const std::string& s);
/// All generators of U_q(so_N) for rank n, ordered by index then kind.
std::vector<Generator> all_generators(int n);

/// Cartan data read off from the lambda table: q_i^{a_ij} = lambda products.
struct CartanData {
  int n = 0;
  std::vector<std::vector<int>> a;
  std::vector<int> d;
};

CartanData cartan_data(int N);
/// Exponent of q in lambda_{i,j}.
int lambda_exp(int N, int i, int j);

template <class F>
F lambda(const FieldParams<F>& p, int N, int i, int j) {
  return p.qp(lambda_exp(N, i, j));
}

/// pi(g) in normal form. E is pi(EKinv) pi(K).
template <class F>
CliffordElement<F> pi(const Generator& g, const ContextPtr<F>& ctx);

enum class SerreReading { Standard, Literal };

/// Generator images in some algebra: Clifford elements or matrices.
template <class T>
struct GenImages {
  std::vector<T> E, F, K, Kinv;
};

/// Relations of U_q(so_N) evaluated on Clifford images. Keys are prefixed by
/// `prefix`. Serre relations appear once per reading, tagged serre-std / serre-lit;
/// serre-lit entries are informational.
template <class F>
Report verify_uq_relations(const ContextPtr<F>& ctx, const std::string& prefix = "uq");
/// Same relations on N x N or module matrices.
template <class F>
Report verify_matrix_relations(const GenImages<Matrix<F>>& m, const FieldParams<F>& p, int N,
                               const std::string& prefix);
/// Every case of the five commutation families of pi(f) with the generators.
template <class F>
Report verify_pirels(const ContextPtr<F>& ctx);

/// Left adjoint action of a generator.
template <class F>
CliffordElement<F> ad(const Generator& g, const CliffordElement<F>& v);
/// Matrix of ad(g) on V = span(gamma_i); throws std::domain_error if V is not invariant.
template <class F>
Matrix<F> ad_matrix(const Generator& g, const ContextPtr<F>& ctx);

/// Vector representation matrices. t1 carries the corrected odd-N F_n entry;
/// t1_printed reproduces the display verbatim.
template <class F>
Matrix<F> t1(const Generator& g, const FieldParams<F>& p, int N);
template <class F>
Matrix<F> t1_printed(const Generator& g, const FieldParams<F>& p, int N);

/// Basis of a spin module: odd N uses the ideal basis of I^nu; even N uses the
/// gamma^J phi^1 with |J| even (nu = +1) or odd (nu = -1).
template <class F>
std::vector<CliffordElement<F>> spin_basis(int nu, const ContextPtr<F>& ctx);
/// Subsets J (as masks on gamma_1..gamma_n) of the spin basis, in order.
std::vector<Monomial> spin_subsets(int nu, int N);
template <class F>
Matrix<F> spin_rep(int nu, const Generator& g, const ContextPtr<F>& ctx);

/// Diagonal of the K_i matrices on a basis of simultaneous eigenvectors;
/// throws std::domain_error if a K matrix is not diagonal.
template <class F>
std::vector<std::vector<F>> weights(const std::vector<Matrix<F>>& kmats);
/// Basis positions annihilated by all the given matrices.
template <class F>
std::vector<int> highest_weight_positions(const std::vector<Matrix<F>>& emats);
/// Dimension of the algebra generated by the matrices (with identity).
template <class F>
std::size_t generated_algebra_dim(const std::vector<Matrix<F>>& gens);

}  // namespace qcl
