#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "giq/balance.hpp"
#include "giq/groebner.hpp"
#include "giq/series.hpp"
#include "giq/truncation.hpp"
#include "giq/weights.hpp"

namespace giq {

enum class Stage { strata, balance, series, betti, pairing };

std::string to_string(Stage s);
Stage parse_stage(std::string_view text);
inline const std::set<Stage>& all_stages() {
  static const std::set<Stage> s{Stage::strata, Stage::balance, Stage::series,
                                 Stage::betti, Stage::pairing};
  return s;
}

struct RingSpec {
  SignaturePtr signature;
  std::vector<GradedPolynomial> relations;
};

struct ConstraintSpec {
  std::string label;
  RingSpec target;
  std::vector<bool> fiber;               // per target variable
  std::vector<GradedPolynomial> images;  // per source variable, in the target ring
  std::optional<int> n_h;                // empty: derive from the slice named `slice`
  std::string slice;
};

struct TailSpec {
  int shift = 0;
  PoincareSeries factor;
};

struct SeriesSpec {
  std::optional<PoincareSeries> ambient;
  std::vector<Stratum> strata;
  std::optional<std::vector<TailSpec>> tails;  // empty: derive from the constraints
};

struct ProblemSpec {
  std::string name;
  std::size_t rank = 0;
  RootData roots;
  RepresentationWeights weights;
  std::vector<SliceSpec> slices;
  RingSpec ring;
  OrderKind order = OrderKind::lex;
  std::vector<ConstraintSpec> constraints;
  SeriesSpec series;
  int max_degree = 0;
  std::optional<int> top_degree;
  std::optional<int> dimension;  // real dimension of the quotient
  std::set<Stage> outputs = all_stages();

  /// Checks every cross-reference; throws InputError.
  void validate() const;
};

/// n_h of a constraint, either given or taken from its slice.
int resolve_n_h(const ProblemSpec& spec, const ConstraintSpec& c);

/// Builds the quotient rings and truncation constraints for `order`.
QuotientRingPtr build_ring(const ProblemSpec& spec, OrderKind order);
std::vector<TruncationConstraint> build_constraints(const ProblemSpec& spec,
                                                    const QuotientRingPtr& ring,
                                                    OrderKind order);

/// Parses the YAML problem format. `origin` names the source in errors.
ProblemSpec parse_problem(std::string_view text, const std::string& origin = "<input>");
ProblemSpec parse_problem_file(const std::string& path);

/// "pn-cstar(3,2,3)", "pn-cstar:3,2,3", "p1-sl2(2)" or "p1-sl2:2".
ProblemSpec problem_from_preset(std::string_view text);

}  // namespace giq
