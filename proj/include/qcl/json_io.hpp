#pragma once

#include "qcl/braid.hpp"

#include <json.hpp>

#include <string>

namespace qcl {

using Json = nlohmann::json;

/// {"a":{"num":[[expq,expc,"coef"],...],"den":[...]},"b":{...}}.
Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);
/// Specialized values: {"a":"p/q","b":"p/q","r":"p/q"}; b and r are omitted when b = 0.
Json to_json(const QuadRational& x);
QuadRational quad_from_json(const Json& j);

template <class F>
F field_from_json(const Json& j, const FieldParams<F>& p);

/// "symbolic", "zero" or the rational value of c.
template <class F>
std::string c_tag(const FieldParams<F>& p);
/// "symbolic" or the rational value of q.
template <class F>
std::string q_tag(const FieldParams<F>& p);

/// Mask printed gamma_1 first: "0101" is gamma_2 gamma_4 at N = 4.
std::string mask_string(Monomial m, int N);
Monomial parse_mask(const std::string& s, int N);

/// {"N":4,"c":"symbolic","q":"symbolic","terms":[{"mask":"0101","coeff":...}]}.
template <class F>
Json element_to_json(const CliffordElement<F>& x);
/// Throws std::invalid_argument if N or the c/q tags disagree with ctx.
template <class F>
CliffordElement<F> element_from_json(const Json& j, const ContextPtr<F>& ctx);

/// {"k":k,"N":N,"entries":[[row,col,...]]}, rows and cols as packed tensor indices.
template <class F>
Json operator_to_json(int N, int k, const std::vector<SparseVec<F, TensorIndex>>& cols);
/// {"N":N,"module":module,"generator":name,"basis":basis,"entries":[[r,c,...]]}; zeros omitted.
template <class F>
Json rep_matrix_to_json(int N, const std::string& module, const std::string& generator, const std::string& basis,
                        const Matrix<F>& m);
template <class F>
Matrix<F> rep_matrix_from_json(const Json& j, const FieldParams<F>& p);

/// Deterministic text: keys sorted, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace qcl
