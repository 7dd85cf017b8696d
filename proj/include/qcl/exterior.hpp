#pragma once

#include "qcl/braid.hpp"

namespace qcl {

/// Element of the q-exterior algebra: a Clifford element of a c = 0 context.
template <class F>
using ExteriorElement = CliffordElement<F>;

template <class F>
ExteriorElement<F> wedge(const ExteriorElement<F>& x, const ExteriorElement<F>& y);

/// The Fock-type action of Cl on the exterior algebra. The generator actions
/// are materialized once as 2^N x 2^N matrices on the ordered-monomial basis.
template <class F>
class FockRepresentation {
 public:
  explicit FockRepresentation(BraidPtr<F> braid);

  const BraidPtr<F>& braid() const { return braid_; }
  int N() const { return braid_->N(); }

  /// gamma_i acting on rho, computed from the wedge product and the contraction.
  ExteriorElement<F> fock_act(int i, const ExteriorElement<F>& rho) const;
  /// x acting on rho; x lives in the algebra context of braid().
  ExteriorElement<F> act(const CliffordElement<F>& x, const ExteriorElement<F>& rho) const;
  /// Matrix of gamma_i; column m is gamma_i acting on the monomial with mask m.
  const Matrix<F>& gamma(int i) const { return gamma_.at(static_cast<std::size_t>(i - 1)); }
  /// Matrix of x.
  Matrix<F> matrix(const CliffordElement<F>& x) const;

  Vector<F> to_vector(const ExteriorElement<F>& rho) const;
  ExteriorElement<F> from_vector(const Vector<F>& v) const;

 private:
  BraidPtr<F> braid_;
  std::vector<Matrix<F>> gamma_;
};

/// Rank of {x acting on 1 : x ranges over the ordered monomials}.
template <class F>
std::size_t fock_image_rank(const FockRepresentation<F>& rep);

}  // namespace qcl
