#include "giq/weights.hpp"

#include <algorithm>
#include <map>

#include "giq/errors.hpp"

namespace giq {

Rational dot(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size()) throw InputError("weight vectors of different rank");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const WeightVector& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += to_string(w[i]);
  }
  return s + ")";
}

int RepresentationWeights::total_multiplicity() const {
  int total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

void RepresentationWeights::validate() const {
  for (const auto& e : entries) {
    if (e.weight.size() != rank)
      throw InputError("weight " + to_string(e.weight) + " does not have rank " +
                       std::to_string(rank));
    if (e.multiplicity < 1)
      throw InputError("weight " + to_string(e.weight) + " has multiplicity " +
                       std::to_string(e.multiplicity) + " (must be >= 1)");
  }
}

bool RootData::in_chamber(const WeightVector& beta) const {
  for (const auto& s : chamber)
    if (dot(beta, s) < 0) return false;
  return true;
}

void RootData::validate(std::size_t rank) const {
  for (const auto& r : roots)
    if (r.size() != rank) throw InputError("root " + to_string(r) + " has wrong rank");
  for (const auto& s : chamber)
    if (s.size() != rank) throw InputError("simple root " + to_string(s) + " has wrong rank");
  for (const auto& r : roots) {
    WeightVector neg = r;
    for (auto& x : neg) x = -x;
    if (std::find(roots.begin(), roots.end(), neg) == roots.end())
      throw InputError("root system is not closed under negation: missing " +
                       to_string(neg));
  }
  if (chamber.empty() != roots.empty())
    throw InputError("chamber must be given exactly when roots are");
}

namespace {

// Solves the bordered system for the affine minimizer of the listed points:
// G mu = nu 1, sum mu = 1. Returns mu.
std::vector<Rational> affine_minimizer(std::span<const WeightVector> points,
                                       const std::vector<std::size_t>& active) {
  std::size_t k = active.size();
  std::size_t n = k + 1;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = dot(points[active[i]], points[active[j]]);
    a[i][k] = -1;
    a[k][i] = 1;
  }
  a[k][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) throw IntegrityError("min_norm_point: active set lost affine independence");
    std::swap(a[p], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<Rational> mu(k);
  for (std::size_t i = 0; i < k; ++i) mu[i] = a[i][n] / a[i][i];
  return mu;
}

WeightVector combine(std::span<const WeightVector> points,
                     const std::vector<std::size_t>& active,
                     const std::vector<Rational>& lambda) {
  WeightVector x(points[active[0]].size());
  for (std::size_t i = 0; i < active.size(); ++i)
    for (std::size_t c = 0; c < x.size(); ++c) x[c] += lambda[i] * points[active[i]][c];
  return x;
}

}  // namespace

MinNormPoint min_norm_point(std::span<const WeightVector> points) {
  if (points.empty()) throw InputError("min_norm_point: empty point list");
  std::size_t dim = points[0].size();
  for (const auto& p : points)
    if (p.size() != dim) throw InputError("min_norm_point: points of different rank");

  std::size_t start = 0;
  Rational best = dot(points[0], points[0]);
  for (std::size_t i = 1; i < points.size(); ++i) {
    Rational n = dot(points[i], points[i]);
    if (n < best) {
      best = n;
      start = i;
    }
  }
  std::vector<std::size_t> active{start};
  std::vector<Rational> lambda{Rational(1)};
  WeightVector x = points[start];

  for (;;) {
    Rational xx = dot(x, x);
    if (sgn(xx) == 0) break;
    std::size_t j = 0;
    Rational lowest = dot(x, points[0]);
    for (std::size_t i = 1; i < points.size(); ++i) {
      Rational v = dot(x, points[i]);
      if (v < lowest) {
        lowest = v;
        j = i;
      }
    }
    if (lowest >= xx) break;  // optimality: <p - x, x> >= 0 for every p
    if (std::find(active.begin(), active.end(), j) != active.end())
      throw IntegrityError("min_norm_point: cycling detected");
    active.push_back(j);
    lambda.push_back(0);

    for (;;) {
      std::vector<Rational> mu = affine_minimizer(points, active);
      bool interior = std::all_of(mu.begin(), mu.end(), [](const Rational& m) {
        return sgn(m) > 0;
      });
      if (interior) {
        lambda = std::move(mu);
        break;
      }
      Rational theta = 1;
      for (std::size_t i = 0; i < mu.size(); ++i) {
        if (sgn(mu[i]) > 0) continue;
        Rational gap = lambda[i] - mu[i];
        if (sgn(gap) == 0) continue;
        Rational t = lambda[i] / gap;
        if (t < theta) theta = t;
      }
      for (std::size_t i = 0; i < mu.size(); ++i)
        lambda[i] = theta * mu[i] + (1 - theta) * lambda[i];
      std::vector<std::size_t> kept;
      std::vector<Rational> kept_lambda;
      for (std::size_t i = 0; i < active.size(); ++i) {
        if (sgn(lambda[i]) == 0) continue;
        kept.push_back(active[i]);
        kept_lambda.push_back(lambda[i]);
      }
      if (kept.size() == active.size())
        throw IntegrityError("min_norm_point: minor cycle made no progress");
      active = std::move(kept);
      lambda = std::move(kept_lambda);
    }
    x = combine(points, active, lambda);
  }

  MinNormPoint out;
  out.point = std::move(x);
  for (std::size_t i = 0; i < active.size(); ++i)
    out.certificate.emplace_back(active[i], lambda[i]);
  std::sort(out.certificate.begin(), out.certificate.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

int n_of_beta(const RepresentationWeights& rep, const WeightVector& beta) {
  if (std::all_of(beta.begin(), beta.end(), [](const Rational& c) { return sgn(c) == 0; }))
    throw InputError("n_of_beta: beta must be nonzero");
  Rational bb = dot(beta, beta);
  int n = 0;
  for (const auto& e : rep.entries)
    if (dot(e.weight, beta) < bb) n += e.multiplicity;
  return n;
}

int moved_roots(const RootData& roots, const WeightVector& beta) {
  int n = 0;
  for (const auto& r : roots.roots)
    if (sgn(dot(r, beta)) != 0) ++n;
  return n;
}

std::vector<IndexPoint> index_set(const RepresentationWeights& rep,
                                  const RootData& roots) {
  rep.validate();
  roots.validate(rep.rank);

  // Distinct weights, each remembered by its first entry index.
  std::vector<WeightVector> distinct;
  std::vector<std::size_t> entry_of;
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    const auto& w = rep.entries[i].weight;
    if (std::find(distinct.begin(), distinct.end(), w) == distinct.end()) {
      distinct.push_back(w);
      entry_of.push_back(i);
    }
  }
  if (distinct.size() > kMaxDistinctWeights)
    throw InputError("index_set: " + std::to_string(distinct.size()) +
                     " distinct weights exceeds the limit of " +
                     std::to_string(kMaxDistinctWeights));

  std::map<WeightVector, HullCertificate> found;
  std::size_t m = distinct.size();
  std::vector<WeightVector> subset;
  std::vector<std::size_t> subset_index;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    subset.clear();
    subset_index.clear();
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::uint64_t{1} << i)) {
        subset.push_back(distinct[i]);
        subset_index.push_back(entry_of[i]);
      }
    MinNormPoint p = min_norm_point(subset);
    if (found.count(p.point)) continue;
    HullCertificate cert;
    for (const auto& [k, c] : p.certificate) cert.emplace_back(subset_index[k], c);
    found.emplace(std::move(p.point), std::move(cert));
  }

  std::vector<IndexPoint> out;
  for (auto& [beta, cert] : found) {
    bool zero = std::all_of(beta.begin(), beta.end(),
                            [](const Rational& c) { return sgn(c) == 0; });
    if (zero || !roots.in_chamber(beta)) continue;
    IndexPoint ip;
    ip.beta = beta;
    ip.n_beta = n_of_beta(rep, beta);
    ip.moved_roots = moved_roots(roots, beta);
    ip.codim = std::max(0, ip.signed_codim());
    ip.certificate = cert;
    std::sort(ip.certificate.begin(), ip.certificate.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(ip));
  }
  return out;
}

}  // namespace giq
