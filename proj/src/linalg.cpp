#include "oscdual/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oscdual {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<std::string> variables)
    : rows_(rows), cols_(cols), vars_(std::move(variables)), data_(rows * cols, MultiPoly(vars_)) {}

PolyMatrix::PolyMatrix(const std::vector<PolyVector>& rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  std::vector<MultiPoly> flat;
  flat.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  data_ = align_all(flat);
  if (!data_.empty()) vars_ = data_.front().variables();
}

PolyMatrix PolyMatrix::from_rationals(const RationalMatrix& m) {
  std::vector<PolyVector> rows;
  for (const auto& r : m) {
    PolyVector row;
    for (const auto& x : r) row.push_back(MultiPoly::constant(x));
    rows.push_back(std::move(row));
  }
  return PolyMatrix(rows);
}

void PolyMatrix::set(std::size_t r, std::size_t c, const MultiPoly& value) {
  if (value.variables() != vars_) {
    const auto vars = merge_variables(vars_, value.variables());
    if (vars != vars_) {
      for (auto& e : data_) e = e.with_variables(vars);
      vars_ = vars;
    }
    data_[r * cols_ + c] = value.with_variables(vars_);
    return;
  }
  data_[r * cols_ + c] = value;
}

PolyVector PolyMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

PolyVector PolyMatrix::column(std::size_t c) const {
  PolyVector out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(cols_, rows_, vars_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = at(r, c);
  return out;
}

PolyMatrix PolyMatrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix out(rows.size(), cols.size(), vars_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.data_[i * cols.size() + j] = at(rows[i], cols[j]);
  return out;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<std::size_t>& rows) const {
  std::vector<std::size_t> cols(cols_);
  std::iota(cols.begin(), cols.end(), 0);
  return select(rows, cols);
}

PolyMatrix PolyMatrix::evaluate(const std::map<std::string, Rational>& values) const {
  PolyMatrix out = *this;
  for (auto& e : out.data_) e = e.evaluate(values);
  return out;
}

RationalMatrix PolyMatrix::to_rationals() const {
  RationalMatrix out(rows_, RationalVector(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!at(r, c).is_constant()) throw std::invalid_argument("matrix entry is not constant");
      out[r][c] = at(r, c).constant_term();
    }
  }
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

bool PolyMatrix::is_constant() const {
  return std::all_of(data_.begin(), data_.end(), [](const MultiPoly& p) { return p.is_constant(); });
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r].push_back(at(r, c).to_string());
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

MultiPoly dot(const PolyVector& a, const PolyVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product of vectors of different length");
  MultiPoly s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

PolyVector multiply(const PolyMatrix& m, const PolyVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  PolyVector out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(dot(m.row(r), v));
  return out;
}

PolyVector differentiate(const PolyVector& v, std::string_view name) {
  PolyVector out;
  for (const auto& p : v) out.push_back(p.var_index(name) < 0 ? MultiPoly(p.variables()) : p.differentiate(name));
  return out;
}

PolyVector normalize_vector(const PolyVector& v_in) {
  PolyVector v = align_all(v_in);
  const MultiPoly g = gcd(v);
  if (g.is_zero()) return v;
  mpz_class num = 0;
  mpz_class den = 1;
  for (auto& p : v) {
    p = divide(p, g);
    for (const auto& [e, c] : p.terms()) {
      num = integer_gcd(num, c.numerator());
      den = integer_lcm(den, c.denominator());
    }
  }
  Rational scale(mpq_class(den, num));
  for (const auto& p : v) {
    if (!p.is_zero()) {
      if (p.leading_coefficient().sign() < 0) scale = -scale;
      break;
    }
  }
  for (auto& p : v) p *= scale;
  return v;
}

RationalVector normalize_vector(const RationalVector& v) {
  mpz_class num = 0;
  mpz_class den = 1;
  for (const auto& c : v) {
    num = integer_gcd(num, c.numerator());
    den = integer_lcm(den, c.denominator());
  }
  if (num == 0) return v;
  Rational scale(mpq_class(den, num));
  for (const auto& c : v) {
    if (!c.is_zero()) {
      if (c.sign() < 0) scale = -scale;
      break;
    }
  }
  RationalVector out;
  for (const auto& c : v) out.push_back(c * scale);
  return out;
}

namespace {

// Entries are minors of the input, so every division is exact.
struct Echelon {
  std::vector<MultiPoly> a;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> perm;
  std::vector<std::size_t> pivot_cols;
  int swaps = 0;

  MultiPoly& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

bool simpler(const MultiPoly& x, const MultiPoly& y) {
  if (x.total_degree() != y.total_degree()) return x.total_degree() < y.total_degree();
  return x.term_count() < y.term_count();
}

Echelon bareiss(const PolyMatrix& m) {
  Echelon e;
  e.rows = m.rows();
  e.cols = m.cols();
  e.a.reserve(e.rows * e.cols);
  for (std::size_t r = 0; r < e.rows; ++r)
    for (std::size_t c = 0; c < e.cols; ++c) e.a.push_back(m.at(r, c));
  e.perm.resize(e.rows);
  std::iota(e.perm.begin(), e.perm.end(), 0);
  MultiPoly prev = MultiPoly::constant(Rational(1), m.variables());
  std::size_t r = 0;
  for (std::size_t c = 0; c < e.cols && r < e.rows; ++c) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = r; i < e.rows; ++i) {
      if (e.at(i, c).is_zero()) continue;
      if (!pivot || simpler(e.at(i, c), e.at(*pivot, c))) pivot = i;
    }
    if (!pivot) continue;
    if (*pivot != r) {
      for (std::size_t j = 0; j < e.cols; ++j) std::swap(e.at(r, j), e.at(*pivot, j));
      std::swap(e.perm[r], e.perm[*pivot]);
      ++e.swaps;
    }
    const MultiPoly p = e.at(r, c);
    for (std::size_t i = r + 1; i < e.rows; ++i) {
      const MultiPoly f = e.at(i, c);
      for (std::size_t j = c + 1; j < e.cols; ++j) {
        MultiPoly num = p * e.at(i, j);
        if (!f.is_zero()) num -= f * e.at(r, j);
        e.at(i, j) = prev.is_constant() ? num * prev.constant_term().inverse() : divide(num, prev);
      }
      e.at(i, c) = MultiPoly(m.variables());
    }
    prev = p;
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

MultiPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return MultiPoly::constant(Rational(1));
  Echelon e = bareiss(m);
  if (e.pivot_cols.size() < m.rows()) return MultiPoly(m.variables());
  MultiPoly d = e.at(m.rows() - 1, m.cols() - 1);
  if (e.swaps % 2 == 1) d = -d;
  return d;
}

RankKernel ff_rank_kernel(const PolyMatrix& m) {
  RankKernel out;
  const Echelon e = bareiss(m);
  out.rank = e.pivot_cols.size();
  out.pivot_cols = e.pivot_cols;
  out.pivot_rows.assign(e.perm.begin(), e.perm.begin() + static_cast<std::ptrdiff_t>(out.rank));
  std::sort(out.pivot_rows.begin(), out.pivot_rows.end());

  const PolyMatrix basis = m.select(out.pivot_rows, out.pivot_cols);
  const MultiPoly det = determinant(basis);
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (std::find(out.pivot_cols.begin(), out.pivot_cols.end(), f) != out.pivot_cols.end()) continue;
    PolyVector u(m.cols(), MultiPoly(m.variables()));
    u[f] = det;
    for (std::size_t i = 0; i < out.rank; ++i) {
      PolyMatrix replaced = basis;
      for (std::size_t r = 0; r < out.rank; ++r) replaced.set(r, i, m.at(out.pivot_rows[r], f));
      u[out.pivot_cols[i]] = -determinant(replaced);
    }
    out.kernel.push_back(normalize_vector(u));
  }
  return out;
}

std::size_t rank(const PolyMatrix& m) { return bareiss(m).pivot_cols.size(); }

std::vector<Minor> all_minors(const PolyMatrix& m, std::size_t k) {
  if (k == 0 || k > std::min(m.rows(), m.cols()))
    throw std::invalid_argument("minor size " + std::to_string(k) + " out of range");
  auto combos = [k](std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      out.push_back(idx);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
  };
  std::vector<Minor> out;
  const auto row_sets = combos(m.rows());
  const auto col_sets = combos(m.cols());
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) out.push_back({rs, cs, determinant(m.select(rs, cs))});
  return out;
}

MultiPoly resultant(const MultiPoly& p_in, const MultiPoly& q_in, std::string_view name) {
  auto [p, q] = align(p_in, q_in);
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
  if (p.is_zero() || q.is_zero()) return MultiPoly(p.variables());
  const int m = p.degree_in(name);
  const int n = q.degree_in(name);
  if (m == 0 && n == 0) return MultiPoly::constant(Rational(1), p.variables());
  if (m == 0) return p.pow(static_cast<unsigned>(n));
  if (n == 0) return q.pow(static_cast<unsigned>(m));
  const auto pc = p.coefficients_in(name);
  const auto qc = q.coefficients_in(name);
  const auto size = static_cast<std::size_t>(m + n);
  PolyMatrix syl(size, size, p.variables());
  for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r)
    for (std::size_t i = 0; i <= static_cast<std::size_t>(m); ++i)
      syl.set(r, r + i, pc[static_cast<std::size_t>(m) - i]);
  for (std::size_t r = 0; r < static_cast<std::size_t>(m); ++r)
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
      syl.set(static_cast<std::size_t>(n) + r, r + i, qc[static_cast<std::size_t>(n) - i]);
  return determinant(syl).with_variables(p.variables());
}

// ---------------------------------------------------------------------------
// Dense rational linear algebra

namespace {

struct Rref {
  RationalMatrix a;
  std::vector<std::size_t> pivots;
};

Rref rref(RationalMatrix a, std::size_t cols) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Rational inv = a[r][c].inverse();
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.a = std::move(a);
  return out;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  return rref(m, m.front().size()).pivots.size();
}

std::vector<RationalVector> kernel(const RationalMatrix& m, std::size_t cols) {
  const Rref e = rref(m, cols);
  std::vector<RationalVector> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(e.pivots.begin(), e.pivots.end(), f) != e.pivots.end()) continue;
    RationalVector u(cols, Rational(0));
    u[f] = Rational(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) u[e.pivots[i]] = -e.a[i][f];
    out.push_back(normalize_vector(u));
  }
  return out;
}

Rational determinant(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    if (a[c].size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const Rational inv = a[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      const Rational f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  if (m.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  RationalMatrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const Rref e = rref(aug, cols + 1);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  RationalVector x(cols, Rational(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.a[i][cols];
  return x;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix aug(n, RationalVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = Rational(1);
  }
  const Rref e = rref(aug, n);
  if (e.pivots.size() < n) throw std::domain_error("singular matrix");
  RationalMatrix out(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = e.a[i][n + j];
  return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  RationalMatrix out(a.size(), RationalVector(cols, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("matrix product dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

RationalMatrix transpose(const RationalMatrix& m) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  RationalMatrix out(cols, RationalVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = m[i][j];
  return out;
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix out(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = Rational(1);
  return out;
}

}  // namespace oscdual
