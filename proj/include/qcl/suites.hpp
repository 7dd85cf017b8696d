#pragma once

#include "qcl/clifford.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qcl {

struct SuiteOptions {
  int jobs = 1;
  std::uint64_t seed = 1;
  /// Scales the random sample counts; 1.0 gives the documented defaults.
  double sample_scale = 1.0;
};

/// clifford, bwm, fock, pi, pirels, adjoint, spin, center, ideals.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// an unknown name and ResourceCapError when the configuration exceeds the caps
/// of a suite (symbolic q: bwm needs N <= 4; every suite needs N <= 8).
template <class F>
Report run_suite(const std::string& name, const ContextPtr<F>& ctx, const SuiteOptions& opt = {});

/// Runs independent work items on up to `jobs` threads and merges the reports.
Report run_parallel(const std::vector<std::function<Report()>>& tasks, int jobs);

/// Idempotent rho_eta / (2 eta c^{2n+1} q^{n(n+1)} (q + q^{-1})^n) generating I_eta, odd N.
template <class F>
CliffordElement<F> simple_idempotent(int eta, const ContextPtr<F>& ctx);

}  // namespace qcl
