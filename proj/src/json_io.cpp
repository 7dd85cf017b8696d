#include "qcl/json_io.hpp"

#include <stdexcept>

namespace qcl {

namespace {

Json poly_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) out.push_back({t.q, t.c, t.coef.get_str()});
  return out;
}

Poly poly_from(const Json& j) {
  std::vector<Term> ts;
  for (const auto& t : j) ts.push_back({t.at(0).get<int>(), t.at(1).get<int>(), mpz_class(t.at(2).get<std::string>())});
  return Poly::from_terms(std::move(ts));
}

Json rf_json(const RationalFn& r) { return {{"num", poly_json(r.num())}, {"den", poly_json(r.den())}}; }

RationalFn rf_from(const Json& j) { return RationalFn(poly_from(j.at("num")), poly_from(j.at("den"))); }

mpq_class rational_from(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
  v.canonicalize();
  return v;
}

}  // namespace

Json to_json(const Scalar& x) { return {{"a", rf_json(x.a())}, {"b", rf_json(x.b())}}; }

Scalar scalar_from_json(const Json& j) { return Scalar(rf_from(j.at("a")), rf_from(j.at("b"))); }

Json to_json(const QuadRational& x) {
  Json out = {{"a", x.a().get_str()}};
  if (x.b() != 0) {
    out["b"] = x.b().get_str();
    out["r"] = x.r().get_str();
  }
  return out;
}

QuadRational quad_from_json(const Json& j) {
  const mpq_class a = rational_from(j.at("a").get<std::string>());
  if (!j.contains("b")) return QuadRational(a);
  return QuadRational(a, rational_from(j.at("b").get<std::string>()), rational_from(j.at("r").get<std::string>()));
}

template <>
Scalar field_from_json(const Json& j, const FieldParams<Scalar>&) {
  return scalar_from_json(j);
}

template <>
QuadRational field_from_json(const Json& j, const FieldParams<QuadRational>&) {
  return quad_from_json(j);
}

template <>
std::string c_tag(const FieldParams<Scalar>& p) {
  switch (p.cmode) {
    case CMode::Symbolic: return "symbolic";
    case CMode::Zero: return "zero";
    case CMode::Value: return p.c.a().evaluate(1, 1).get_str();
  }
  return "";
}

template <>
std::string c_tag(const FieldParams<QuadRational>& p) {
  return p.cmode == CMode::Zero ? "zero" : p.c.a().get_str();
}

template <>
std::string q_tag(const FieldParams<Scalar>&) {
  return "symbolic";
}

template <>
std::string q_tag(const FieldParams<QuadRational>& p) {
  return p.q.a().get_str();
}

std::string mask_string(Monomial m, int N) {
  std::string s(static_cast<std::size_t>(N), '0');
  for (int i = 1; i <= N; ++i)
    if (has_gen(m, i)) s[static_cast<std::size_t>(i - 1)] = '1';
  return s;
}

Monomial parse_mask(const std::string& s, int N) {
  if (static_cast<int>(s.size()) != N || s.find_first_not_of("01") != std::string::npos)
    throw std::invalid_argument("bad mask '" + s + "'");
  Monomial m = 0;
  for (int i = 1; i <= N; ++i)
    if (s[static_cast<std::size_t>(i - 1)] == '1') m |= gen_mask(i);
  return m;
}

template <class F>
Json element_to_json(const CliffordElement<F>& x) {
  const auto& ctx = x.context();
  if (!ctx) throw std::invalid_argument("element has no context");
  Json terms = Json::array();
  for (const auto& [m, v] : x.terms()) terms.push_back({{"mask", mask_string(m, ctx->N())}, {"coeff", to_json(v)}});
  return {{"N", ctx->N()}, {"c", c_tag(ctx->params())}, {"q", q_tag(ctx->params())}, {"terms", terms}};
}

template <class F>
CliffordElement<F> element_from_json(const Json& j, const ContextPtr<F>& ctx) {
  if (j.at("N").get<int>() != ctx->N()) throw std::invalid_argument("element JSON has a different N");
  if (j.at("c").get<std::string>() != c_tag(ctx->params())) throw std::invalid_argument("element JSON has a different c");
  if (j.contains("q") && j.at("q").get<std::string>() != q_tag(ctx->params()))
    throw std::invalid_argument("element JSON has a different q");
  CliffordElement<F> out(ctx);
  for (const auto& t : j.at("terms"))
    out.add_term(parse_mask(t.at("mask").get<std::string>(), ctx->N()), field_from_json(t.at("coeff"), ctx->params()));
  return out;
}

template <class F>
Json operator_to_json(int N, int k, const std::vector<SparseVec<F, TensorIndex>>& cols) {
  Json entries = Json::array();
  for (std::size_t col = 0; col < cols.size(); ++col)
    for (const auto& [row, v] : cols[col]) entries.push_back({row, col, to_json(v)});
  return {{"N", N}, {"k", k}, {"entries", entries}};
}

template <class F>
Json rep_matrix_to_json(int N, const std::string& module, const std::string& generator, const std::string& basis,
                        const Matrix<F>& m) {
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) entries.push_back({r, c, to_json(m(r, c))});
  return {{"N", N},         {"module", module}, {"generator", generator}, {"basis", basis},
          {"dim", m.rows()}, {"entries", entries}};
}

template <class F>
Matrix<F> rep_matrix_from_json(const Json& j, const FieldParams<F>& p) {
  const auto d = j.at("dim").get<Eigen::Index>();
  Matrix<F> m = Matrix<F>::Constant(d, d, F(0));
  for (const auto& e : j.at("entries")) m(e.at(0).get<Eigen::Index>(), e.at(1).get<Eigen::Index>()) = field_from_json(e.at(2), p);
  return m;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

#define QCL_INSTANTIATE(F)                                                                                      \
  template Json element_to_json(const CliffordElement<F>&);                                                     \
  template CliffordElement<F> element_from_json(const Json&, const ContextPtr<F>&);                             \
  template Json operator_to_json(int, int, const std::vector<SparseVec<F, TensorIndex>>&);                      \
  template Json rep_matrix_to_json(int, const std::string&, const std::string&, const std::string&,            \
                                   const Matrix<F>&);                                                           \
  template Matrix<F> rep_matrix_from_json(const Json&, const FieldParams<F>&);

QCL_INSTANTIATE(Scalar)
QCL_INSTANTIATE(QuadRational)

}  // namespace qcl
