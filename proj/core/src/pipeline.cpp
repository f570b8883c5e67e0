#include "giq/pipeline.hpp"

#include <algorithm>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

#include "giq/errors.hpp"
#include "giq/presets.hpp"

namespace giq {

namespace {

bool wants(const std::set<Stage>& s, Stage x) { return s.count(x) > 0; }

void run_series(const ProblemSpec& spec, const std::vector<TruncationConstraint>& constraints,
                Report& r) {
  if (!spec.series.ambient) {
    r.warnings.push_back("no ambient series given; series route skipped");
    return;
  }
  r.equivariant = morse_assemble(*spec.series.ambient, spec.series.strata);

  auto expected = expand(*r.equivariant, r.max_degree);
  r.ring_check = "agree";
  for (int d = 0; d <= r.max_degree; d += 2)
    if (expected[static_cast<std::size_t>(d)] !=
        static_cast<long>(r.ring_dimensions[static_cast<std::size_t>(d / 2)]))
      r.ring_check = "disagree";
  if (r.ring_check == "disagree")
    r.warnings.push_back("ring Hilbert function differs from the equivariant series");

  PoincareSeries ip = *r.equivariant;
  if (spec.series.tails) {
    for (const auto& t : *spec.series.tails) ip -= shift(t.factor, t.shift);
  } else {
    for (const auto& c : constraints) {
      auto tail = truncation_tail(c);
      if (!tail) {
        r.warnings.push_back("no closed-form tail for constraint '" + c.label +
                             "'; series route skipped");
        return;
      }
      ip -= *tail;
    }
  }
  r.intersection = ip;
  r.intersection_expansion = expand(ip, r.max_degree);
  if (!ip.is_polynomial()) {
    r.warnings.push_back("intersection series is not a polynomial");
    return;
  }
  try {
    r.series_betti = to_betti(ip);
  } catch (const IntegrityError& e) {
    r.warnings.push_back(std::string("intersection series: ") + e.what());
    return;
  }
  if (spec.dimension) {
    r.palindromic = palindrome_check(*r.series_betti, *spec.dimension);
    if (!*r.palindromic)
      r.warnings.push_back("intersection Betti numbers are not palindromic in dimension " +
                           std::to_string(*spec.dimension));
  }
}

void cross_check(Report& r) {
  if (!r.v || r.intersection_expansion.empty()) return;
  r.cross_check = "agree";
  const auto& b = r.v->betti().coefficients;
  for (std::size_t k = 0; k < b.size(); ++k)
    if (r.intersection_expansion[2 * k] != static_cast<long>(b[k])) {
      r.cross_check = "disagree";
      r.warnings.push_back("series route and kernel route differ in degree " +
                           std::to_string(2 * k));
      break;
    }
}

}  // namespace

Report run_pipeline(const ProblemSpec& input, const PipelineOptions& options) {
  ProblemSpec spec = input;
  if (options.order) spec.order = *options.order;
  if (options.max_degree) {
    spec.max_degree = *options.max_degree;
    if (spec.top_degree && *spec.top_degree > spec.max_degree) spec.top_degree.reset();
  }
  spec.validate();

  Report r;
  r.name = spec.name;
  r.order = spec.order;
  r.max_degree = spec.max_degree;
  r.stages = options.stages;

  // Balance first: the identification with IH depends on it.
  r.balance = check_weakly_balanced(spec.slices);
  if (!r.balance.passed) {
    r.certified = false;
    r.warnings.push_back(
        "action is not weakly balanced: V and pairings are computed but their "
        "identification with intersection cohomology is NOT certified");
  }

  if (wants(r.stages, Stage::strata)) {
    if (!spec.weights.entries.empty()) r.index_set = index_set(spec.weights, spec.roots);
    for (const auto& s : spec.slices)
      r.slice_index_sets.push_back({s.label, index_set(s.slice_weights, s.roots)});
  }

  bool need_series = wants(r.stages, Stage::series) || wants(r.stages, Stage::betti);
  bool need_v = wants(r.stages, Stage::betti) || wants(r.stages, Stage::pairing);
  if (!need_series && !need_v) return r;

  QuotientRingPtr ring = build_ring(spec, spec.order);
  auto constraints = build_constraints(spec, ring, spec.order);
  r.ring_dimensions = graded_dimensions(*ring, spec.max_degree);

  if (need_series) run_series(spec, constraints, r);
  if (need_v) {
    r.v = compute_v(ring, constraints, spec.max_degree);
    cross_check(r);
  }
  if (wants(r.stages, Stage::pairing)) {
    int top = spec.top_degree.value_or(top_degree(*r.v));
    if (spec.dimension && top != *spec.dimension)
      r.warnings.push_back("top degree " + std::to_string(top) +
                           " differs from the stated dimension " +
                           std::to_string(*spec.dimension));
    r.pairing = pairing_report(*r.v, top);
  }
  return r;
}

// ---------------------------------------------------------------- JSON

namespace {

using Json = nlohmann::ordered_json;

Json vec_json(const WeightVector& w) {
  Json a = Json::array();
  for (const auto& x : w) a.push_back(to_string(x));
  return a;
}

Json points_json(const std::vector<IndexPoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) {
    Json cert = Json::array();
    for (const auto& [idx, c] : p.certificate)
      cert.push_back({{"weight_index", idx}, {"coefficient", to_string(c)}});
    a.push_back({{"beta", vec_json(p.beta)},
                 {"n", p.n_beta},
                 {"moved_roots", p.moved_roots},
                 {"codim", p.codim},
                 {"certificate", cert}});
  }
  return a;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json matrix_json(const Matrix& m) {
  Json a = Json::array();
  for (const auto& row : to_strings(m)) a.push_back(row);
  return a;
}

}  // namespace

std::string to_json(const Report& r, int indent) {
  Json j;
  j["name"] = r.name;
  j["order"] = to_string(r.order);
  j["max_degree"] = r.max_degree;
  j["certified"] = r.certified;
  j["warnings"] = r.warnings;

  if (wants(r.stages, Stage::balance)) {
    Json viol = Json::array();
    for (const auto& v : r.balance.violations)
      viol.push_back({{"slice", v.label},
                      {"beta", vec_json(v.beta)},
                      {"lhs", v.lhs},
                      {"rhs", to_string(v.rhs)}});
    j["balance"] = {{"verdict", r.balance.passed ? "pass" : "fail"}, {"violations", viol}};
  }
  if (wants(r.stages, Stage::strata)) {
    j["index_set"] = points_json(r.index_set);
    Json slices = Json::array();
    for (const auto& s : r.slice_index_sets)
      slices.push_back({{"label", s.label}, {"points", points_json(s.points)}});
    j["slice_index_sets"] = slices;
  }
  bool series = wants(r.stages, Stage::series) || wants(r.stages, Stage::betti);
  if (series) {
    Json s;
    s["equivariant"] = r.equivariant ? Json(to_string(*r.equivariant)) : Json();
    s["intersection"] = r.intersection ? Json(to_string(*r.intersection)) : Json();
    s["expansion"] = rationals_json(r.intersection_expansion);
    s["betti"] = r.series_betti ? Json(r.series_betti->coefficients) : Json();
    s["palindromic"] = r.palindromic ? Json(*r.palindromic) : Json();
    s["ring_dimensions"] = r.ring_dimensions;
    s["ring_check"] = r.ring_check;
    j["series"] = s;
  }
  if (r.v) {
    const auto& order = r.v->ring()->order();
    Json bases = Json::object();
    for (const auto& [d, basis] : r.v->bases()) {
      Json elems = Json::array();
      for (const auto& p : basis) elems.push_back(to_string(p, order));
      bases[std::to_string(d)] = elems;
    }
    j["v"] = {{"betti", r.v->betti().coefficients}, {"bases", bases}};
    j["cross_check"] = r.cross_check;
  }
  if (r.pairing) {
    Json blocks = Json::array();
    for (const auto& b : r.pairing->blocks) {
      Json block = {{"i", b.degree}, {"complement", b.complement}, {"matrix", matrix_json(b.matrix)}};
      block["det"] = b.determinant ? Json(to_string(*b.determinant)) : Json();
      if (b.signature) block["signature"] = *b.signature;
      blocks.push_back(block);
    }
    j["pairing"] = {{"top_degree", r.pairing->top_degree},
                    {"top_class", to_string(r.pairing->top_class, r.v->ring()->order())},
                    {"blocks", blocks}};
  }
  return j.dump(indent) + "\n";
}

// ---------------------------------------------------------------- text

namespace {

std::string list_string(const std::vector<std::string>& items) {
  std::string s = "[";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + "]";
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows,
                 const std::string& indent) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  for (const auto& row : rows) {
    out << indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      if (c + 1 == row.size()) {
        out << row[c];
      } else {
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      }
    }
    out << "\n";
  }
}

void print_points(std::ostream& out, const std::vector<IndexPoint>& pts) {
  std::vector<std::vector<std::string>> rows{{"beta", "n", "moved", "codim"}};
  for (const auto& p : pts)
    rows.push_back({to_string(p.beta), std::to_string(p.n_beta), std::to_string(p.moved_roots),
                    std::to_string(p.codim)});
  print_table(out, rows, "  ");
}

}  // namespace

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "problem      " << r.name << "\n"
      << "order        " << to_string(r.order) << "\n"
      << "max degree   " << r.max_degree << "\n"
      << "certified    " << (r.certified ? "yes" : "NO") << "\n";
  for (const auto& w : r.warnings) out << "WARNING: " << w << "\n";

  if (wants(r.stages, Stage::balance)) {
    out << "\nbalance      " << (r.balance.passed ? "pass" : "FAIL") << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : r.balance.violations)
      rows.push_back({v.label, to_string(v.beta), std::to_string(v.lhs) + " <= " + to_string(v.rhs)});
    if (!rows.empty()) print_table(out, rows, "  ");
  }
  if (wants(r.stages, Stage::strata)) {
    out << "\nindex set\n";
    print_points(out, r.index_set);
    for (const auto& s : r.slice_index_sets) {
      out << "slice " << s.label << "\n";
      print_points(out, s.points);
    }
  }
  if (wants(r.stages, Stage::series) || wants(r.stages, Stage::betti)) {
    out << "\nseries\n";
    std::vector<std::vector<std::string>> rows;
    if (r.equivariant) rows.push_back({"equivariant", to_string(*r.equivariant)});
    if (r.intersection) rows.push_back({"intersection", to_string(*r.intersection)});
    if (r.series_betti) rows.push_back({"betti", to_string(*r.series_betti)});
    if (r.palindromic) rows.push_back({"palindromic", *r.palindromic ? "yes" : "no"});
    std::vector<std::string> dims;
    for (auto d : r.ring_dimensions) dims.push_back(std::to_string(d));
    rows.push_back({"ring dims", list_string(dims)});
    rows.push_back({"ring check", r.ring_check});
    print_table(out, rows, "  ");
  }
  if (r.v) {
    out << "\nV (kernel route)  betti " << to_string(r.v->betti())
        << "  cross-check " << r.cross_check << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& [d, basis] : r.v->bases()) {
      std::vector<std::string> elems;
      for (const auto& p : basis) elems.push_back(to_string(p, r.v->ring()->order()));
      rows.push_back({"V^" + std::to_string(d), list_string(elems)});
    }
    print_table(out, rows, "  ");
  }
  if (r.pairing) {
    out << "\npairing  top degree " << r.pairing->top_degree << "  top class "
        << to_string(r.pairing->top_class, r.v->ring()->order()) << "\n";
    for (const auto& b : r.pairing->blocks) {
      out << "  V^" << b.degree << " x V^" << b.complement;
      if (b.determinant) out << "  det " << to_string(*b.determinant);
      if (b.signature) out << "  signature " << *b.signature;
      out << "\n";
      print_table(out, to_strings(b.matrix), "    ");
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- selftest

namespace {

template <class F>
SelftestResult check(std::string name, F&& f) {
  SelftestResult res{std::move(name), false, ""};
  try {
    res.detail = f(res.passed);
  } catch (const std::exception& e) {
    res.passed = false;
    res.detail = std::string("exception: ") + e.what();
  }
  return res;
}

std::string join_basis(const std::vector<GradedPolynomial>& basis, const MonomialOrder& order) {
  std::vector<std::string> s;
  for (const auto& p : basis) s.push_back(to_string(p, order));
  return list_string(s);
}

}  // namespace

std::vector<SelftestResult> selftest() {
  std::vector<SelftestResult> out;
  ProblemSpec cstar = problem_pn_cstar(3, 2, 3);

  out.push_back(check("groebner basis of the (3,2,3) ring", [&](bool& ok) {
    QuotientRingPtr ring = build_ring(cstar, OrderKind::lex);
    auto sig = ring->signature();
    std::vector<GradedPolynomial> want = {
        parse_polynomial("xi^5 + 3*xi^3*rho^2", sig), parse_polynomial("xi^4*rho + 1/3*xi^2*rho^3", sig),
        parse_polynomial("xi^3*rho^3", sig), parse_polynomial("xi^2*rho^5", sig)};
    ok = ring->groebner().elements() == want;
    return join_basis(ring->groebner().elements(), ring->order());
  }));

  out.push_back(check("pn-cstar(3,2,3) intersection Betti numbers", [&](bool& ok) {
    auto b = preset_pn_cstar(3, 2, 3).betti;
    ok = b.coefficients == std::vector<long long>{1, 2, 3, 3, 3, 2, 1};
    return to_string(b);
  }));

  Report report;
  out.push_back(check("pn-cstar(3,2,3) V bases", [&](bool& ok) {
    report = run_pipeline(cstar);
    const std::vector<std::string> want = {
        "[1]", "[rho, xi]", "[rho^2, xi*rho, xi^2]", "[xi*rho^2, xi^2*rho, xi^3]",
        "[xi^2*rho^2, xi^3*rho, xi^4]", "[xi^2*rho^3, xi^3*rho^2]", "[xi^2*rho^4]"};
    std::string got;
    ok = true;
    for (int d = 0; d <= 12; d += 2) {
      std::string s = join_basis(report.v->basis(d), report.v->ring()->order());
      ok = ok && s == want[static_cast<std::size_t>(d / 2)];
      got += s + " ";
    }
    ok = ok && report.v->basis(14).empty();
    return got;
  }));

  out.push_back(check("pn-cstar(3,2,3) pairing blocks", [&](bool& ok) {
    const auto& p = *report.pairing;
    Rational third(1, 3);
    Matrix two{{1, 0}, {0, -third}};
    Matrix mid{{1, 0, -third}, {0, -third, 0}, {-third, 0, 1}};
    const PairingBlock* b2 = nullptr;
    const PairingBlock* b4 = nullptr;
    const PairingBlock* b6 = nullptr;
    for (const auto& b : p.blocks) {
      if (b.degree == 2) b2 = &b;
      if (b.degree == 4) b4 = &b;
      if (b.degree == 6) b6 = &b;
    }
    ok = p.top_degree == 12 && b2 && b4 && b6 && b2->matrix == two &&
         b2->determinant == Rational(-1, 3) && b2->signature == 0 && b4->matrix == mid &&
         b6->matrix == mid && b4->determinant == Rational(-8, 27) && b6->signature == 1;
    return "top " + std::to_string(p.top_degree) + ", " + std::to_string(p.blocks.size()) +
           " blocks";
  }));

  out.push_back(check("p1-sl2 intersection Betti numbers", [&](bool& ok) {
    auto b2 = preset_p1_sl2(2).betti;
    auto b3 = preset_p1_sl2(3).betti;
    ok = b2.coefficients == std::vector<long long>{1, 1} &&
         b3.coefficients == std::vector<long long>{1, 6, 6, 1};
    return to_string(b2) + " " + to_string(b3);
  }));

  for (const char* name : {"pn-cstar(3,2,3)", "p1-sl2(2)", "p1-sl2(3)"}) {
    out.push_back(check(std::string(name) + " cross-check", [&](bool& ok) {
      Report r = run_pipeline(problem_from_preset(name));
      ok = r.cross_check == "agree" && r.ring_check == "agree" && r.certified;
      return "betti " + to_string(r.v->betti()) + ", series " + r.cross_check + ", ring " +
             r.ring_check;
    }));
  }
  return out;
}

}  // namespace giq
