#include "giq/linalg.hpp"

#include <utility>

#include "giq/errors.hpp"

namespace giq {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

void Matrix::append_rows(const Matrix& below) {
  if (below.rows_ == 0) return;
  if (rows_ == 0) {
    cols_ = below.cols_;
  } else if (below.cols_ != cols_) {
    throw InputError("append_rows: column count mismatch");
  }
  data_.insert(data_.end(), below.data_.begin(), below.data_.end());
  rows_ += below.rows_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix shape mismatch");
  Matrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

namespace {

struct Echelon {
  std::vector<std::vector<Integer>> rows;  // fraction-free row echelon form
  std::vector<std::size_t> pivots;         // pivot column of row r
  int swaps = 0;
  Integer last_pivot = 1;
};

// Each row scaled by the lcm of its denominators. scale[r] records the factor.
std::vector<std::vector<Integer>> clear_denominators(const Matrix& m,
                                                     std::vector<Integer>* scale) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  if (scale) scale->assign(m.rows(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer d = m(r, c).get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational v = m(r, c) * l;
      out[r][c] = v.get_num();
    }
    if (scale) (*scale)[r] = l;
  }
  return out;
}

Echelon bareiss(std::vector<std::vector<Integer>> a, std::size_t cols) {
  Echelon e;
  std::size_t n = a.size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      ++e.swaps;
    }
    const Integer pivot = a[r][c];
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = pivot * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = pivot;
    e.pivots.push_back(c);
    ++r;
  }
  e.last_pivot = prev;
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return bareiss(clear_denominators(m, nullptr), m.cols()).pivots.size();
}

std::vector<std::vector<Rational>> kernel(const Matrix& m) {
  std::size_t n = m.cols();
  std::vector<std::vector<Rational>> basis;
  if (n == 0) return basis;
  if (m.rows() == 0) {
    for (std::size_t f = 0; f < n; ++f) {
      std::vector<Rational> v(n);
      v[f] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  Echelon e = bareiss(clear_denominators(m, nullptr), n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(n);
    x[f] = 1;
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
      std::size_t pc = e.pivots[r];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < n; ++j)
        if (sgn(x[j]) != 0 && e.rows[r][j] != 0) s += Rational(e.rows[r][j]) * x[j];
      x[pc] = -s / Rational(e.rows[r][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Rational determinant(const Matrix& m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  std::vector<Integer> scale;
  Echelon e = bareiss(clear_denominators(m, &scale), m.cols());
  if (e.pivots.size() < m.rows()) return 0;
  Rational det(e.last_pivot);
  if (e.swaps % 2 != 0) det = -det;
  for (const auto& s : scale) det /= Rational(s);
  return det;
}

std::vector<std::vector<std::string>> to_strings(const Matrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(to_string(m(r, c)));
  return out;
}

}  // namespace giq
