#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "giq/balance.hpp"
#include "giq/pairing.hpp"
#include "giq/problem.hpp"
#include "giq/series.hpp"
#include "giq/truncation.hpp"
#include "giq/weights.hpp"

namespace giq {

struct SliceIndexSet {
  std::string label;
  std::vector<IndexPoint> points;
};

struct Report {
  std::string name;
  OrderKind order = OrderKind::lex;
  int max_degree = 0;
  std::set<Stage> stages;

  BalanceVerdict balance;  // always computed
  std::vector<IndexPoint> index_set;
  std::vector<SliceIndexSet> slice_index_sets;

  std::optional<PoincareSeries> equivariant;
  std::optional<PoincareSeries> intersection;  // series route
  std::vector<Rational> intersection_expansion;  // through max_degree
  std::optional<BettiPolynomial> series_betti;
  std::optional<bool> palindromic;

  std::vector<long long> ring_dimensions;  // by even degree
  std::optional<VSpace> v;
  std::optional<PairingReport> pairing;

  std::string cross_check = "n/a";  // series route vs kernel route
  std::string ring_check = "n/a";   // ring Hilbert function vs equivariant series
  std::vector<std::string> warnings;
  bool certified = true;
};

struct PipelineOptions {
  std::set<Stage> stages = all_stages();
  std::optional<OrderKind> order;
  std::optional<int> max_degree;
};

Report run_pipeline(const ProblemSpec& spec, const PipelineOptions& options = {});

/// Deterministic: equal reports serialize to identical bytes.
std::string to_json(const Report& r, int indent = 2);
std::string to_text(const Report& r);

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Golden values for the C^* and SL(2) examples.
std::vector<SelftestResult> selftest();

}  // namespace giq
