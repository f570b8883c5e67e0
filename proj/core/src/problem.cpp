#include "giq/problem.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "giq/errors.hpp"
#include "giq/presets.hpp"

namespace giq {

std::string to_string(Stage s) {
  switch (s) {
    case Stage::strata: return "strata";
    case Stage::balance: return "balance";
    case Stage::series: return "series";
    case Stage::betti: return "betti";
    case Stage::pairing: return "pairing";
  }
  return "?";
}

Stage parse_stage(std::string_view text) {
  for (Stage s : all_stages())
    if (to_string(s) == text) return s;
  throw InputError("unknown output '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- validation

namespace {

void check_slice(const SliceSpec& s, std::size_t rank) {
  if (s.label.empty()) throw InputError("slice without a label");
  if (s.dim_h < 0) throw InputError("slice '" + s.label + "': dim-h must be >= 0");
  if (s.slice_weights.rank != rank)
    throw InputError("slice '" + s.label + "': weights have the wrong rank");
  s.slice_weights.validate();
  s.roots.validate(rank);
  for (const auto& sub : s.sub_loci) check_slice(sub, rank);
}

const SliceSpec* find_slice(const std::vector<SliceSpec>& slices, const std::string& label) {
  for (const auto& s : slices) {
    if (s.label == label) return &s;
    if (const SliceSpec* sub = find_slice(s.sub_loci, label)) return sub;
  }
  return nullptr;
}

}  // namespace

void ProblemSpec::validate() const {
  if (rank == 0) throw InputError("rank must be >= 1");
  roots.validate(rank);
  if (!weights.entries.empty()) {
    if (weights.rank != rank) throw InputError("weights have the wrong rank");
    weights.validate();
  }
  for (const auto& s : slices) check_slice(s, rank);
  if (!ring.signature) throw InputError("problem has no ring");
  for (const auto& r : ring.relations)
    if (!r.is_homogeneous())
      throw InputError("relation '" + to_string(r) + "' is not homogeneous");
  for (const auto& c : constraints) {
    if (!c.target.signature) throw InputError("constraint '" + c.label + "' has no target");
    if (c.fiber.size() != c.target.signature->size())
      throw InputError("constraint '" + c.label + "': missing base/fiber split");
    for (const auto& r : c.target.relations)
      if (!r.is_homogeneous())
        throw InputError("constraint '" + c.label + "': relation '" + to_string(r) +
                         "' is not homogeneous");
    RingMap(ring.signature, c.target.signature, c.images);
    resolve_n_h(*this, c);
  }
  for (const auto& s : series.strata)
    if (s.codim <= 0 || s.codim % 2 != 0)
      throw InputError("stratum codimension " + std::to_string(s.codim) +
                       " must be positive and even");
  if (series.tails)
    for (const auto& t : *series.tails)
      if (t.shift < 0 || t.shift % 2 != 0)
        throw InputError("tail shift " + std::to_string(t.shift) + " must be even and >= 0");
  if (max_degree < 0) throw InputError("max-degree must be >= 0");
  if (top_degree && (*top_degree < 0 || *top_degree % 2 != 0 || *top_degree > max_degree))
    throw InputError("top-degree must be even and within [0, max-degree]");
  if (dimension && (*dimension < 0 || *dimension % 2 != 0))
    throw InputError("dimension must be even and >= 0");
}

int resolve_n_h(const ProblemSpec& spec, const ConstraintSpec& c) {
  if (c.n_h) {
    if (*c.n_h < 0) throw InputError("constraint '" + c.label + "': n-h must be >= 0");
    return *c.n_h;
  }
  const std::string& label = c.slice.empty() ? c.label : c.slice;
  const SliceSpec* s = find_slice(spec.slices, label);
  if (!s)
    throw InputError("constraint '" + c.label + "' gives no n-h and no slice named '" + label +
                     "' exists to derive it from");
  int n_h = s->derived_n_h();
  if (n_h < 0)
    throw InputError("slice '" + label + "' yields negative n_h " + std::to_string(n_h));
  return n_h;
}

QuotientRingPtr build_ring(const ProblemSpec& spec, OrderKind order) {
  auto mo = MonomialOrder::natural(order, spec.ring.signature->size());
  return std::make_shared<const QuotientRing>(spec.ring.signature, spec.ring.relations, mo,
                                              spec.max_degree);
}

std::vector<TruncationConstraint> build_constraints(const ProblemSpec& spec,
                                                    const QuotientRingPtr& ring,
                                                    OrderKind order) {
  std::vector<TruncationConstraint> out;
  for (const auto& c : spec.constraints) {
    auto mo = MonomialOrder::natural(order, c.target.signature->size());
    auto target = std::make_shared<const QuotientRing>(c.target.signature, c.target.relations,
                                                       mo, spec.max_degree);
    out.push_back({c.label, RingMap(ring->signature(), c.target.signature, c.images), target,
                   c.fiber, resolve_n_h(spec, c)});
  }
  return out;
}

// ---------------------------------------------------------------- presets

ProblemSpec problem_from_preset(std::string_view text) {
  std::string s(text);
  std::string family;
  std::string args;
  if (auto open = s.find('('); open != std::string::npos) {
    if (s.back() != ')') throw InputError("preset '" + s + "': missing ')'");
    family = s.substr(0, open);
    args = s.substr(open + 1, s.size() - open - 2);
  } else if (auto colon = s.find(':'); colon != std::string::npos) {
    family = s.substr(0, colon);
    args = s.substr(colon + 1);
  } else {
    throw InputError("preset '" + s + "': expected family(args) or family:args");
  }
  std::vector<int> values;
  std::stringstream in(args);
  for (std::string item; std::getline(in, item, ',');) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw InputError("preset '" + s + "': '" + item + "' is not an integer");
    values.push_back(v);
  }
  if (family == "pn-cstar") {
    if (values.size() != 3) throw InputError("pn-cstar takes three integers");
    return problem_pn_cstar(values[0], values[1], values[2]);
  }
  if (family == "p1-sl2") {
    if (values.size() != 1) throw InputError("p1-sl2 takes one integer");
    return problem_p1_sl2(values[0]);
  }
  throw InputError("unknown preset family '" + family + "'");
}

// ---------------------------------------------------------------- YAML

namespace {

class Reader {
 public:
  explicit Reader(std::string origin) : origin_(std::move(origin)) {}

  [[noreturn]] void fail(const YAML::Node& n, const std::string& msg) const {
    auto m = n.Mark();
    std::string where = origin_;
    if (!m.is_null()) where += ":" + std::to_string(m.line + 1) + ":" + std::to_string(m.column + 1);
    throw InputError(where + ": " + msg);
  }

  /// Runs f, prefixing any InputError with the node's position.
  template <class F>
  auto at(const YAML::Node& n, F&& f) const -> decltype(f()) {
    try {
      return f();
    } catch (const InputError& e) {
      fail(n, e.what());
    }
  }

  void keys(const YAML::Node& map, std::initializer_list<std::string_view> allowed,
            const std::string& where) const {
    if (!map.IsMap()) fail(map, where + " must be a mapping");
    for (const auto& kv : map) {
      auto k = kv.first.as<std::string>();
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
        fail(kv.first, "unknown key '" + k + "' in " + where);
    }
  }

  YAML::Node required(const YAML::Node& map, const char* key, const std::string& where) const {
    YAML::Node n = map[key];
    if (!n) fail(map, where + " needs '" + key + "'");
    return n;
  }

  std::string str(const YAML::Node& n) const {
    if (!n.IsScalar()) fail(n, "expected a scalar");
    return n.Scalar();
  }

  int integer(const YAML::Node& n) const {
    std::string s = str(n);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail(n, "'" + s + "' is not an integer");
    return v;
  }

  Rational rational(const YAML::Node& n) const {
    return at(n, [&] { return parse_rational(str(n)); });
  }

  WeightVector vec(const YAML::Node& n, std::size_t rank) const {
    WeightVector w;
    if (n.IsSequence()) {
      for (const auto& x : n) w.push_back(rational(x));
    } else if (rank == 1) {
      w.push_back(rational(n));
    } else {
      fail(n, "expected a weight vector");
    }
    if (w.size() != rank)
      fail(n, "vector has length " + std::to_string(w.size()) + ", expected rank " +
                  std::to_string(rank));
    return w;
  }

  std::vector<WeightVector> vecs(const YAML::Node& n, std::size_t rank) const {
    std::vector<WeightVector> out;
    if (!n) return out;
    if (!n.IsSequence()) fail(n, "expected a list of vectors");
    for (const auto& x : n) out.push_back(vec(x, rank));
    return out;
  }

  RepresentationWeights weights(const YAML::Node& n, std::size_t rank) const {
    RepresentationWeights rep{rank, {}};
    if (!n) return rep;
    if (!n.IsSequence()) fail(n, "weights must be a list");
    for (const auto& e : n) {
      if (e.IsMap()) {
        keys(e, {"weight", "multiplicity"}, "weight entry");
        WeightEntry we{vec(required(e, "weight", "weight entry"), rank), 1};
        if (e["multiplicity"]) we.multiplicity = integer(e["multiplicity"]);
        if (we.multiplicity < 1) fail(e, "multiplicity must be >= 1");
        rep.entries.push_back(std::move(we));
      } else {
        rep.entries.push_back({vec(e, rank), 1});
      }
    }
    at(n, [&] { rep.validate(); });
    return rep;
  }

  RootData roots(const YAML::Node& map, std::size_t rank) const {
    RootData r{vecs(map["roots"], rank), vecs(map["chamber"], rank)};
    at(map, [&] { r.validate(rank); });
    return r;
  }

  SliceSpec slice(const YAML::Node& n, std::size_t rank) const {
    keys(n, {"label", "dim-h", "weights", "roots", "chamber", "sub-loci"}, "slice");
    SliceSpec s;
    s.label = str(required(n, "label", "slice"));
    s.dim_h = integer(required(n, "dim-h", "slice"));
    if (s.dim_h < 0) fail(n["dim-h"], "dim-h must be >= 0");
    s.slice_weights = weights(n["weights"], rank);
    s.roots = roots(n, rank);
    if (auto subs = n["sub-loci"]) {
      if (!subs.IsSequence()) fail(subs, "sub-loci must be a list");
      for (const auto& sub : subs) s.sub_loci.push_back(slice(sub, rank));
    }
    return s;
  }

  SignaturePtr variables(const YAML::Node& n) const {
    if (!n.IsSequence()) fail(n, "variables must be a list");
    std::vector<Variable> vars;
    for (const auto& v : n) {
      if (v.IsScalar()) {
        vars.push_back({v.Scalar(), 2});
      } else {
        keys(v, {"name", "degree"}, "variable");
        Variable var{str(required(v, "name", "variable")), 2};
        if (v["degree"]) var.degree = integer(v["degree"]);
        vars.push_back(std::move(var));
      }
    }
    return at(n, [&] { return make_signature(std::move(vars)); });
  }

  GradedPolynomial poly(const YAML::Node& n, const SignaturePtr& sig) const {
    return at(n, [&] { return parse_polynomial(str(n), sig); });
  }

  std::vector<GradedPolynomial> relations(const YAML::Node& n, const SignaturePtr& sig) const {
    std::vector<GradedPolynomial> out;
    if (!n) return out;
    if (!n.IsSequence()) fail(n, "relations must be a list");
    for (const auto& r : n) {
      auto p = poly(r, sig);
      if (!p.is_homogeneous()) fail(r, "relation '" + str(r) + "' is not homogeneous");
      out.push_back(std::move(p));
    }
    return out;
  }

  RingSpec ring(const YAML::Node& n, const std::string& where) const {
    keys(n, {"variables", "relations"}, where);
    auto sig = variables(required(n, "variables", where));
    return {sig, relations(n["relations"], sig)};
  }

  ConstraintSpec constraint(const YAML::Node& n, const SignaturePtr& source) const {
    keys(n, {"label", "target", "fiber", "map", "n-h", "slice"}, "constraint");
    ConstraintSpec c;
    c.label = str(required(n, "label", "constraint"));
    c.target = ring(required(n, "target", "constraint"), "constraint target");
    const auto& tsig = c.target.signature;

    auto fiber = required(n, "fiber", "constraint '" + c.label + "' (base/fiber split)");
    if (!fiber.IsSequence()) fail(fiber, "fiber must be a list of target variables");
    c.fiber.assign(tsig->size(), false);
    for (const auto& f : fiber) {
      auto idx = tsig->index_of(str(f));
      if (!idx) fail(f, "'" + str(f) + "' is not a target variable");
      c.fiber[*idx] = true;
    }

    auto map = required(n, "map", "constraint '" + c.label + "'");
    if (!map.IsMap()) fail(map, "map must be a mapping from source variables to polynomials");
    std::vector<std::optional<GradedPolynomial>> images(source->size());
    for (const auto& kv : map) {
      auto name = str(kv.first);
      auto idx = source->index_of(name);
      if (!idx) fail(kv.first, "'" + name + "' is not a variable of the main ring");
      images[*idx] = poly(kv.second, tsig);
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!images[i]) fail(map, "map gives no image for '" + (*source)[i].name + "'");
      c.images.push_back(*images[i]);
    }
    at(map, [&] { RingMap(source, tsig, c.images); });

    if (n["n-h"]) c.n_h = integer(n["n-h"]);
    if (n["slice"]) c.slice = str(n["slice"]);
    return c;
  }

  PoincareSeries series(const YAML::Node& n) const {
    return at(n, [&] { return parse_series(str(n)); });
  }

  SeriesSpec series_spec(const YAML::Node& n) const {
    keys(n, {"ambient", "strata", "tails"}, "series");
    SeriesSpec s;
    if (n["ambient"]) s.ambient = series(n["ambient"]);
    if (auto strata = n["strata"]) {
      if (!strata.IsSequence()) fail(strata, "strata must be a list");
      for (const auto& e : strata) {
        keys(e, {"codim", "factor"}, "stratum");
        Stratum st{integer(required(e, "codim", "stratum")),
                   series(required(e, "factor", "stratum"))};
        if (st.codim <= 0 || st.codim % 2 != 0)
          fail(e["codim"], "stratum codimension must be positive and even");
        s.strata.push_back(std::move(st));
      }
    }
    if (auto tails = n["tails"]) {
      if (!tails.IsSequence()) fail(tails, "tails must be a list");
      s.tails.emplace();
      for (const auto& e : tails) {
        keys(e, {"shift", "factor"}, "tail");
        TailSpec t{integer(required(e, "shift", "tail")), series(required(e, "factor", "tail"))};
        if (t.shift < 0 || t.shift % 2 != 0) fail(e["shift"], "shift must be even and >= 0");
        s.tails->push_back(std::move(t));
      }
    }
    return s;
  }

  std::set<Stage> outputs(const YAML::Node& n) const {
    if (!n.IsSequence()) fail(n, "outputs must be a list");
    std::set<Stage> out;
    for (const auto& e : n) out.insert(at(e, [&] { return parse_stage(str(e)); }));
    return out;
  }

  void overrides(const YAML::Node& root, ProblemSpec& p) const {
    if (root["name"]) p.name = str(root["name"]);
    if (root["order"]) p.order = at(root["order"], [&] { return parse_order_kind(str(root["order"])); });
    if (root["max-degree"]) p.max_degree = integer(root["max-degree"]);
    if (root["top-degree"]) p.top_degree = integer(root["top-degree"]);
    if (root["dimension"]) p.dimension = integer(root["dimension"]);
    if (root["outputs"]) p.outputs = outputs(root["outputs"]);
  }

  ProblemSpec problem(const YAML::Node& root) const {
    if (!root.IsMap()) fail(root, "problem file must be a mapping");
    auto version = root["giq-version"];
    if (!version) fail(root, "missing 'giq-version: 1' header");
    if (integer(version) != 1) fail(version, "unsupported giq-version " + str(version));

    if (auto preset = root["preset"]) {
      keys(root, {"giq-version", "preset", "name", "order", "max-degree", "top-degree",
                  "dimension", "outputs"},
           "preset problem");
      ProblemSpec p = at(preset, [&] { return problem_from_preset(str(preset)); });
      overrides(root, p);
      at(root, [&] { p.validate(); });
      return p;
    }

    keys(root, {"giq-version", "name", "rank", "roots", "chamber", "weights", "slices", "ring",
                "order", "constraints", "series", "max-degree", "top-degree", "dimension",
                "outputs"},
         "problem");
    ProblemSpec p;
    p.name = origin_;
    int rank = integer(required(root, "rank", "problem"));
    if (rank < 1) fail(root["rank"], "rank must be >= 1");
    p.rank = static_cast<std::size_t>(rank);
    p.roots = roots(root, p.rank);
    p.weights = weights(root["weights"], p.rank);
    if (auto slices = root["slices"]) {
      if (!slices.IsSequence()) fail(slices, "slices must be a list");
      for (const auto& s : slices) p.slices.push_back(slice(s, p.rank));
    }
    p.ring = ring(required(root, "ring", "problem"), "ring");
    if (auto cs = root["constraints"]) {
      if (!cs.IsSequence()) fail(cs, "constraints must be a list");
      for (const auto& c : cs) p.constraints.push_back(constraint(c, p.ring.signature));
    }
    if (root["series"]) p.series = series_spec(root["series"]);
    required(root, "max-degree", "problem");
    overrides(root, p);
    if (auto cs = root["constraints"]) {
      std::size_t i = 0;
      for (const auto& c : cs) {
        at(c, [&] { resolve_n_h(p, p.constraints[i]); });
        ++i;
      }
    }
    at(root, [&] { p.validate(); });
    return p;
  }

 private:
  std::string origin_;
};

}  // namespace

ProblemSpec parse_problem(std::string_view text, const std::string& origin) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw InputError(origin + ":" + std::to_string(e.mark.line + 1) + ":" +
                     std::to_string(e.mark.column + 1) + ": " + e.msg);
  }
  try {
    return Reader(origin).problem(root);
  } catch (const YAML::Exception& e) {
    throw InputError(origin + ": " + e.what());
  }
}

ProblemSpec parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str(), path);
}

}  // namespace giq
