#include "giq/balance.hpp"

#include "giq/errors.hpp"

namespace giq {

void BalanceVerdict::merge(const BalanceVerdict& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  passed = violations.empty();
}

BalanceVerdict check_linear_balance(const SliceSpec& slice) {
  if (slice.dim_h < 0)
    throw InputError("slice '" + slice.label + "' has negative dim_h");
  BalanceVerdict verdict;
  if (slice.slice_weights.entries.empty()) return verdict;

  Rational rhs(slice.slice_weights.real_dimension() - 2 * slice.dim_h, 2);
  rhs.canonicalize();
  for (const auto& ip : index_set(slice.slice_weights, slice.roots)) {
    int lhs = ip.signed_codim();
    if (Rational(lhs) > rhs) continue;
    verdict.violations.push_back({slice.label, ip.beta, lhs, rhs});
  }
  verdict.passed = verdict.violations.empty();
  return verdict;
}

BalanceVerdict check_weakly_balanced(std::span<const SliceSpec> slices) {
  BalanceVerdict verdict;
  for (const auto& s : slices) {
    verdict.merge(check_linear_balance(s));
    verdict.merge(check_weakly_balanced(s.sub_loci));
  }
  return verdict;
}

}  // namespace giq
