#include "qcl/exterior.hpp"

namespace qcl {

template <class F>
ExteriorElement<F> wedge(const ExteriorElement<F>& x, const ExteriorElement<F>& y) {
  const auto& ctx = x.context() ? x.context() : y.context();
  if (ctx && ctx->cmode() != CMode::Zero) throw std::invalid_argument("wedge needs elements of the exterior algebra");
  return multiply(x, y);
}

template <class F>
FockRepresentation<F>::FockRepresentation(BraidPtr<F> braid) : braid_(std::move(braid)) {
  const int N = braid_->N();
  const Eigen::Index dim = Eigen::Index(1) << N;
  const auto& ext = braid_->exterior();
  for (int i = 1; i <= N; ++i) {
    Matrix<F> m = Matrix<F>::Constant(dim, dim, F(0));
    for (Eigen::Index col = 0; col < dim; ++col) {
      const auto img = fock_act(i, ExteriorElement<F>::monomial(ext, static_cast<Monomial>(col)));
      for (const auto& [r, v] : img.terms()) m(static_cast<Eigen::Index>(r), col) = v;
    }
    gamma_.push_back(std::move(m));
  }
}

template <class F>
ExteriorElement<F> FockRepresentation<F>::fock_act(int i, const ExteriorElement<F>& rho) const {
  const int N = braid_->N();
  const auto& ext = braid_->exterior();
  if (rho.context() && rho.context() != ext) throw std::invalid_argument("fock_act needs an element of the exterior algebra");
  const auto g = ExteriorElement<F>::gen(ext, i);
  std::map<int, ExteriorElement<F>> parts;
  for (const auto& [m, v] : rho.terms()) {
    auto it = parts.try_emplace(popcount(m), ext).first;
    it->second.add_term(m, v);
  }
  const auto& ctx = braid_->algebra();
  ExteriorElement<F> out(ext);
  for (const auto& [m, part] : parts) {
    out += wedge(g, part);
    const auto ctr = braid_->contract(TensorVector<F>::basis(N, {i}), braid_->wedge_lift(part));
    if (ctr.is_zero()) continue;
    const F coef = (F(1) + ctx->qp(2 * N - 4)) / (F(1) + ctx->qp(2 * N - 4 * m));
    out += braid_->wedge_coords(ctr) * coef;
  }
  return out;
}

template <class F>
Vector<F> FockRepresentation<F>::to_vector(const ExteriorElement<F>& rho) const {
  Vector<F> v = Vector<F>::Constant(Eigen::Index(1) << N(), F(0));
  for (const auto& [m, x] : rho.terms()) v(static_cast<Eigen::Index>(m)) = x;
  return v;
}

template <class F>
ExteriorElement<F> FockRepresentation<F>::from_vector(const Vector<F>& v) const {
  ExteriorElement<F> out(braid_->exterior());
  for (Eigen::Index i = 0; i < v.size(); ++i) out.add_term(static_cast<Monomial>(i), v(i));
  return out;
}

template <class F>
ExteriorElement<F> FockRepresentation<F>::act(const CliffordElement<F>& x, const ExteriorElement<F>& rho) const {
  if (x.context() && x.context() != braid_->algebra()) throw std::invalid_argument("act needs an element of the algebra");
  const Vector<F> r = to_vector(rho);
  Vector<F> acc = Vector<F>::Constant(r.size(), F(0));
  for (const auto& [m, c] : x.terms()) {
    Vector<F> v = r;
    const auto idx = indices(m);
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) v = gamma(*it) * v;
    acc += c * v;
  }
  return from_vector(acc);
}

template <class F>
Matrix<F> FockRepresentation<F>::matrix(const CliffordElement<F>& x) const {
  const Eigen::Index dim = Eigen::Index(1) << N();
  Matrix<F> acc = Matrix<F>::Constant(dim, dim, F(0));
  for (const auto& [m, c] : x.terms()) {
    Matrix<F> p = Matrix<F>::Identity(dim, dim);
    for (int i : indices(m)) p = Matrix<F>(p * gamma(i));
    acc += c * p;
  }
  return acc;
}

template <class F>
std::size_t fock_image_rank(const FockRepresentation<F>& rep) {
  const auto& ctx = rep.braid()->algebra();
  const auto one = ExteriorElement<F>::one(rep.braid()->exterior());
  SpanBuilder<F, Monomial> sb;
  for (Monomial m = 0; m < (Monomial(1) << rep.N()); ++m)
    sb.add(as_sparse(rep.act(CliffordElement<F>::monomial(ctx, m), one)));
  return sb.dim();
}

#define QCL_INSTANTIATE(F)                                                                   \
  template ExteriorElement<F> wedge(const ExteriorElement<F>&, const ExteriorElement<F>&);   \
  template class FockRepresentation<F>;                                                      \
  template std::size_t fock_image_rank(const FockRepresentation<F>&);

QCL_INSTANTIATE(Scalar)
QCL_INSTANTIATE(QuadRational)

}  // namespace qcl
