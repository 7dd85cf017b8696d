// qclifford: normal forms, verification suites and exact exports.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.

#include "qcl/exterior.hpp"
#include "qcl/json_io.hpp"
#include "qcl/suites.hpp"
#include "qcl/uq.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qcl;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int N = 3;
  std::string c = "symbolic";
  std::string q = "symbolic";
  int nu = 1;
  int k = 2;
  std::string suite;
  std::string out;
  std::string format = "json";
  int jobs = 1;
  std::vector<std::string> word;
  std::string kind;
};

mpq_class parse_rational(const std::string& s, const char* what) {
  mpq_class v;
  if (s.empty() || v.set_str(s, 10) != 0) throw UsageError(std::string("bad value for ") + what + ": '" + s + "'");
  if (v.get_den() == 0) throw UsageError(std::string("zero denominator in ") + what);
  v.canonicalize();
  return v;
}

CMode c_mode(const std::string& c) {
  if (c == "symbolic") return CMode::Symbolic;
  if (parse_rational(c, "--c") == 0) return CMode::Zero;
  return CMode::Value;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot open " + cfg.out);
  f << text;
}

template <class F>
std::string pretty(const CliffordElement<F>& x) {
  return x.to_string() + "\n";
}

template <class F>
std::string pretty_matrix(const Json& rep) {
  std::ostringstream os;
  os << rep.at("generator").get<std::string>() << " (" << rep.at("module").get<std::string>() << ", dim "
     << rep.at("dim") << ")\n";
  for (const auto& e : rep.at("entries"))
    os << "  [" << e.at(0) << "," << e.at(1) << "] " << field_from_json<F>(e.at(2), {}).to_string() << "\n";
  return os.str();
}

template <class F>
int cmd_nf(const Config& cfg, const ContextPtr<F>& ctx) {
  std::vector<int> word;
  for (const auto& w : cfg.word) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(w, &used);
      if (used != w.size()) throw std::invalid_argument(w);
    } catch (const std::exception&) {
      throw UsageError("bad generator index '" + w + "'");
    }
    if (v < 1 || v > cfg.N) throw UsageError("generator index " + w + " out of range 1.." + std::to_string(cfg.N));
    word.push_back(v);
  }
  const auto x = rewrite(word, ctx);
  emit(cfg, cfg.format == "pretty" ? pretty(x) : dump(element_to_json(x)));
  return 0;
}

template <class F>
int cmd_verify(const Config& cfg, const ContextPtr<F>& ctx) {
  const std::string suite = cfg.suite.empty() ? "all" : cfg.suite;
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw UsageError("unknown suite '" + suite + "'");
  SuiteOptions opt;
  opt.jobs = cfg.jobs;
  Report rep;
  try {
    rep = run_suite(suite, ctx, opt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto items = rep.sorted();
  if (cfg.format == "pretty") {
    std::ostringstream os;
    for (const auto& it : items)
      os << (it.info ? (it.pass ? "info-pass " : "info-fail ") : (it.pass ? "PASS " : "FAIL ")) << it.key
         << (it.detail.empty() ? "" : "  (" + it.detail + ")") << "\n";
    os << (rep.all_pass() ? "all " : "") << items.size() << " checks, " << rep.failures() << " failed\n";
    emit(cfg, os.str());
  } else {
    Json arr = Json::array();
    for (const auto& it : items) {
      Json j = {{"key", it.key}, {"pass", it.pass}};
      if (!it.detail.empty()) j["detail"] = it.detail;
      if (it.info) j["info"] = true;
      arr.push_back(j);
    }
    emit(cfg, dump({{"suite", suite},
                    {"N", cfg.N},
                    {"c", c_tag(ctx->params())},
                    {"q", q_tag(ctx->params())},
                    {"pass", rep.all_pass()},
                    {"failures", rep.failures()},
                    {"items", arr}}));
  }
  return rep.all_pass() ? 0 : 1;
}

template <class F>
Json matrices(const std::vector<Json>& reps) {
  Json arr = Json::array();
  for (const auto& r : reps) arr.push_back(r);
  return arr;
}

template <class F>
int cmd_export(const Config& cfg, const ContextPtr<F>& ctx) {
  const int N = cfg.N, n = N / 2;
  const auto& p = ctx->params();
  Json out;
  std::vector<Json> reps;
  auto needs_c = [&] {
    if (p.c.is_zero()) throw UsageError("export " + cfg.kind + " needs c != 0");
  };
  if (cfg.kind == "spinrep") {
    needs_c();
    if (cfg.nu != 1 && cfg.nu != -1) throw UsageError("--nu must be +1 or -1");
    const std::string module = std::string("spin:") + (cfg.nu == 1 ? "+1" : "-1");
    for (const auto& g : all_generators(n))
      reps.push_back(rep_matrix_to_json(N, module, generator_name(g), "gamma-monomials*phi", spin_rep<F>(cfg.nu, g, ctx)));
    Json subsets = Json::array();
    for (Monomial J : spin_subsets(cfg.nu, N)) subsets.push_back(mask_string(J, n));
    out = {{"N", N}, {"module", module}, {"basis_subsets", subsets}, {"matrices", matrices<F>(reps)}};
  } else if (cfg.kind == "t1" || cfg.kind == "t1-printed") {
    for (const auto& g : all_generators(n))
      reps.push_back(rep_matrix_to_json(N, "vector", generator_name(g), "gamma_1..gamma_N",
                                        cfg.kind == "t1" ? t1<F>(g, p, N) : t1_printed<F>(g, p, N)));
    out = {{"N", N}, {"module", "vector"}, {"matrices", matrices<F>(reps)}};
  } else if (cfg.kind == "rhat") {
    const auto b = BraidContext<F>::create(ctx);
    std::vector<SparseVec<F, TensorIndex>> cols;
    for (const auto& col : b->rhat()->cols) {
      SparseVec<F, TensorIndex> c;
      for (const auto& [r, v] : col) c.emplace(static_cast<TensorIndex>(r), v);
      cols.push_back(std::move(c));
    }
    out = operator_to_json(N, 2, cols);
  } else if (cfg.kind == "antisym") {
    if (cfg.k < 1 || cfg.k > N) throw UsageError("--k must be in 1..N");
    const auto b = BraidContext<F>::create(ctx);
    out = operator_to_json(N, cfg.k, materialize(b->antisymmetrizer(cfg.k)));
  } else if (cfg.kind == "z-elements") {
    needs_c();
    const std::vector<F> ones(static_cast<std::size_t>(n), F(1));
    out = {{"N", N}, {ctx->odd() ? "z1" : "z0", element_to_json(ctx->odd() ? z1(ctx) : z0(ctx))}};
    for (int eta_hat = 0; eta_hat <= N % 2; ++eta_hat)
      out["z_mu_one[" + std::to_string(eta_hat) + "]"] = element_to_json(z_central(ones, eta_hat, ctx));
  } else if (cfg.kind == "pi-images") {
    needs_c();
    out = {{"N", N}};
    for (const auto& g : all_generators(n)) out["images"][generator_name(g)] = element_to_json(pi(g, ctx));
  } else {
    throw UsageError("unknown export kind '" + cfg.kind + "'");
  }
  if (cfg.format == "pretty" && out.contains("matrices")) {
    std::string text;
    for (const auto& r : out["matrices"]) text += pretty_matrix<F>(r);
    emit(cfg, text);
  } else {
    emit(cfg, dump(out));
  }
  return 0;
}

template <class F>
int dispatch(const std::string& cmd, const Config& cfg, const ContextPtr<F>& ctx) {
  if (cmd == "nf") return cmd_nf(cfg, ctx);
  if (cmd == "verify") return cmd_verify(cfg, ctx);
  return cmd_export(cfg, ctx);
}

int run(const std::string& cmd, const Config& cfg) {
  if (cfg.N < 3 || cfg.N > 16) throw UsageError("--N must be in 3..16");
  if (cfg.format != "json" && cfg.format != "pretty") throw UsageError("--format must be json or pretty");
  if (cfg.jobs < 1) throw UsageError("--jobs must be positive");
  const CMode cm = c_mode(cfg.c);
  if (cfg.q == "symbolic") {
    const mpq_class cv = cm == CMode::Value ? parse_rational(cfg.c, "--c") : mpq_class(0);
    return dispatch(cmd, cfg, AlgebraContext<Scalar>::create(cfg.N, symbolic_params(cm, cv)));
  }
  const mpq_class qv = parse_rational(cfg.q, "--q");
  if (qv == 0 || qv == 1 || qv == -1) throw UsageError("--q must not be 0 or +-1");
  if (cm == CMode::Symbolic) throw UsageError("a rational --q needs a rational --c (or 0)");
  const mpq_class cv = cm == CMode::Value ? parse_rational(cfg.c, "--c") : mpq_class(0);
  return dispatch(cmd, cfg, AlgebraContext<QuadRational>::create(cfg.N, numeric_params({qv, cv}, cm)));
}

void common(CLI::App* sub, Config& cfg) {
  sub->add_option("--N", cfg.N, "dimension N (3..16)");
  sub->add_option("--c", cfg.c, "symbolic, 0 or a rational p/q");
  sub->add_option("--q", cfg.q, "symbolic or a rational p/q");
  sub->add_option("--out", cfg.out, "output file (default stdout)");
  sub->add_option("--format", cfg.format, "json or pretty");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the q-Clifford algebras and U_q(so_N)"};
  app.require_subcommand(1);
  Config cfg;
  auto* nf = app.add_subcommand("nf", "normal form of a generator word");
  common(nf, cfg);
  nf->add_option("word", cfg.word, "generator indices")->required();
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify, cfg);
  verify->add_option("suite_pos", cfg.suite, "suite: clifford bwm fock pi pirels adjoint spin center ideals all");
  verify->add_option("--suite", cfg.suite, "same as the positional suite");
  verify->add_option("--jobs", cfg.jobs, "worker threads");
  auto* exp = app.add_subcommand("export", "export matrices, operators or elements");
  common(exp, cfg);
  exp->add_option("kind", cfg.kind, "spinrep t1 t1-printed rhat antisym z-elements pi-images")->required();
  exp->add_option("--nu", cfg.nu, "spin module sign");
  exp->add_option("--k", cfg.k, "antisymmetrizer degree");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const std::string cmd = nf->parsed() ? "nf" : verify->parsed() ? "verify" : "export";
  try {
    return run(cmd, cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n"
              << "hint: raise QCLIFFORD_MAX_DIM or specialize with --q p/q --c p/q\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
