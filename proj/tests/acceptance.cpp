// Runs the twelve acceptance criteria and prints one line per criterion.

#include "qcl/suites.hpp"
#include "qcl/uq.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <thread>

using namespace qcl;

namespace {

const EvalPoint kPoint{mpq_class(5, 3), mpq_class(2)};
const EvalPoint kPoint2{mpq_class(-7, 2), mpq_class(1, 3)};

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

ContextPtr<Scalar> sym(int N) { return AlgebraContext<Scalar>::create(N, symbolic_params()); }
ContextPtr<QuadRational> num(int N, const EvalPoint& p = kPoint) {
  return AlgebraContext<QuadRational>::create(N, numeric_params(p));
}

template <class F>
Report suite(const std::string& name, const ContextPtr<F>& ctx) {
  SuiteOptions opt;
  opt.jobs = jobs();
  return run_suite(name, ctx, opt);
}

/// Items whose key starts with one of the prefixes, renamed with a tag.
Report select(const Report& r, const std::string& tag, const std::vector<std::string>& prefixes, bool keep = true) {
  Report out;
  for (const auto& it : r.items()) {
    bool hit = false;
    for (const auto& p : prefixes) hit = hit || it.key.rfind(p, 0) == 0;
    if (hit != keep) continue;
    if (it.info) out.add_info(tag + it.key, it.pass, it.detail);
    else out.add(tag + it.key, it.pass, it.detail);
  }
  return out;
}

std::string tag(int N, const char* backend) { return "N=" + std::to_string(N) + "/" + backend + "/"; }

struct Criterion {
  int id;
  const char* title;
  std::function<Report()> run;
};

// ---- criteria

Report c1() {
  Report r;
  for (int N = 3; N <= 6; ++N) {
    if (N <= 4) r.merge(select(verify_defining_relations(sym(N)), tag(N, "sym"), {""}));
    else r.merge(select(verify_defining_relations(num(N)), tag(N, "5/3,2"), {""}));
  }
  return r;
}

Report c2() {
  Report r;
  for (int N = 3; N <= 6; ++N)
    r.merge(select(suite("clifford", sym(N)), tag(N, "sym"), {"clifford/closure", "clifford/assoc", "clifford/fixed"}));
  return r;
}

const Report& bwm_all() {
  static const Report r = [] {
    Report x;
    for (int N = 3; N <= 4; ++N) x.merge(select(suite("bwm", sym(N)), tag(N, "sym"), {""}));
    x.merge(select(suite("bwm", num(5)), tag(5, "5/3,2"), {""}));
    return x;
  }();
  return r;
}

Report c3() {
  Report r;
  for (const auto& it : bwm_all().items())
    if (it.key.find("contraction") == std::string::npos) r.add(it.key, it.pass, it.detail);
  return r;
}

Report c4() {
  Report r;
  for (const auto& it : bwm_all().items())
    if (it.key.find("contraction") != std::string::npos && it.key.find("/sym/") != std::string::npos)
      r.add(it.key, it.pass, it.detail);
  return r;
}

Report c5() {
  Report r;
  for (int N = 3; N <= 4; ++N) r.merge(select(suite("fock", sym(N)), tag(N, "sym"), {""}));
  return r;
}

Report c6() {
  Report r;
  for (int N = 3; N <= 6; ++N) r.merge(select(suite("center", sym(N)), tag(N, "sym"), {""}));
  return r;
}

Report c7() {
  Report r;
  for (int N : {3, 5}) {
    r.merge(select(suite("ideals", sym(N)), tag(N, "sym"), {"ideals/rho-square"}));
    r.merge(select(suite("ideals", num(N)), tag(N, "5/3,2"), {"ideals/e-", "ideals/two-sided"}));
  }
  return r;
}

Report per_n(const std::string& name) {
  Report r;
  for (int N = 3; N <= 6; ++N) r.merge(select(suite(name, sym(N)), tag(N, "sym"), {""}));
  return r;
}

Report c8() { return per_n("pi"); }
Report c9() { return per_n("pirels"); }
Report c10() { return per_n("adjoint"); }

Report c11() {
  Report r;
  for (int N = 3; N <= 6; ++N) r.merge(select(suite("spin", sym(N)), tag(N, "sym"), {""}));
  for (int N : {3, 5}) r.merge(select(suite("spin", num(N)), tag(N, "5/3,2"), {"spin/+/irreducible", "spin/-/irreducible"}));
  return r;
}

Report c12() {
  Report r;
  for (const EvalPoint& p : {kPoint, kPoint2}) {
    const std::string pt = p.q.get_str() + "," + p.c.get_str();
    for (int N = 3; N <= 6; ++N) {
      const auto ctx = num(N, p);
      // the symbolic runs above cover bwm at N <= 4 and fock, center, ... at N <= 6
      for (const auto& s : suite_names()) {
        if (s == "bwm" && N > 5) continue;
        if (s == "fock" && N > 5) continue;
        r.merge(select(suite(s, ctx), tag(N, pt.c_str()), {""}));
      }
      r.merge(select(verify_defining_relations(ctx), tag(N, pt.c_str()), {""}));
    }
  }
  std::mt19937_64 rng(12);
  for (int N = 3; N <= 6; ++N) {
    const auto cs = sym(N);
    const auto cn = num(N);
    bool ok = true;
    for (int t = 0; t < 100 && ok; ++t) {
      CliffordElement<Scalar> x(cs), y(cs);
      for (int k = 0; k < 2; ++k) {
        x.add_term(Monomial(rng() % (1u << N)), Scalar(mpq_class(int(rng() % 9) + 1, int(rng() % 5) + 1)));
        y.add_term(Monomial(rng() % (1u << N)), Scalar(mpq_class(int(rng() % 9) - 4, int(rng() % 5) + 1)));
      }
      ok = convert(x * y, cn) == convert(x, cn) * convert(y, cn);
    }
    r.add(tag(N, "sym->5/3,2") + "evaluate-products", ok);
  }
  // pi images also commute with specialization
  for (int N = 3; N <= 6; ++N) {
    bool ok = true;
    for (const auto& g : all_generators(N / 2)) ok = ok && convert(pi(g, sym(N)), num(N)) == pi(g, num(N));
    r.add(tag(N, "sym->5/3,2") + "evaluate-pi", ok);
  }
  return r;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "defining relations", c1},
      {2, "ordered-basis closure and associativity", c2},
      {3, "BWM elements and antisymmetrizers", c3},
      {4, "contraction well-definedness", c4},
      {5, "Fock representation", c5},
      {6, "central elements", c6},
      {7, "semisimplicity witnesses", c7},
      {8, "embedding pi of U_q(so_N)", c8},
      {9, "commutation identities", c9},
      {10, "adjoint action and vector representation", c10},
      {11, "spin representations", c11},
      {12, "cross-backend consistency", c12},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    std::string error;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::size_t info = 0;
    for (const auto& it : r.items()) info += it.info;
    const bool pass = error.empty() && r.all_pass() && !r.items().empty();
    failed += !pass;
    std::printf("criterion %2d: %s  %s  (%zu checks, %zu failed, %zu informational, %.1fs)\n", c.id,
                pass ? "PASS" : "FAIL", c.title, r.items().size() - info, r.failures(), info, secs);
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    for (const auto& it : r.sorted())
      if (!it.pass && !it.info) std::printf("    failed: %s %s\n", it.key.c_str(), it.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
