#include "oscdual/contact.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace oscdual {

namespace {

// Pfaffian by expansion along the first remaining index.
template <typename T, typename Entry>
T pfaffian_rec(std::vector<std::size_t>& idx, const Entry& entry, const T& zero, const T& one) {
  if (idx.empty()) return one;
  const std::size_t first = idx[0];
  T sum = zero;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    T e = entry(first, idx[k]);
    if (e == zero) continue;
    std::vector<std::size_t> rest;
    for (std::size_t j = 1; j < idx.size(); ++j)
      if (j != k) rest.push_back(idx[j]);
    T sub = pfaffian_rec<T>(rest, entry, zero, one);
    if (k % 2 == 1)
      sum = sum + e * sub;
    else
      sum = sum - e * sub;
  }
  return sum;
}

std::vector<std::size_t> iota_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

SkewForm::SkewForm(RationalMatrix matrix) : matrix_(std::move(matrix)) {
  const std::size_t m = matrix_.size();
  if (m == 0 || m % 2 != 0) throw std::invalid_argument("skew form needs an even, positive size");
  for (const auto& row : matrix_)
    if (row.size() != m) throw std::invalid_argument("skew form matrix must be square");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      if (matrix_[i][j] != -matrix_[j][i]) throw std::invalid_argument("matrix is not antisymmetric");
}

Rational SkewForm::pfaffian() const {
  auto idx = iota_indices(size());
  return pfaffian_rec<Rational>(idx, [this](std::size_t i, std::size_t j) { return matrix_[i][j]; }, Rational(0),
                                Rational(1));
}

MultiPoly SkewForm::pairing(const PolyVector& u, const PolyVector& w) const {
  if (u.size() != size() || w.size() != size()) throw std::invalid_argument("skew form dimension mismatch");
  MultiPoly s;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (matrix_[i][j].is_zero()) continue;
      s += (u[i] * w[j] - u[j] * w[i]) * matrix_[i][j];
    }
  return s;
}

Rational SkewForm::pairing(const RationalVector& u, const RationalVector& w) const {
  if (u.size() != size() || w.size() != size()) throw std::invalid_argument("skew form dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) s += u[i] * matrix_[i][j] * w[j];
  return s;
}

SkewForm SkewForm::normalized() const {
  RationalVector upper;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j) upper.push_back(matrix_[i][j]);
  upper = normalize_vector(upper);
  RationalMatrix m(size(), RationalVector(size()));
  std::size_t k = 0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j) {
      m[i][j] = upper[k++];
      m[j][i] = -m[i][j];
    }
  return SkewForm(std::move(m));
}

bool proportional(const SkewForm& a, const SkewForm& b) {
  if (a.size() != b.size()) return false;
  return a.normalized() == b.normalized();
}

MultiPoly pfaffian(const PolyMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) throw std::invalid_argument("pfaffian needs an even square matrix");
  auto idx = iota_indices(m.rows());
  const MultiPoly zero(m.variables());
  return pfaffian_rec<MultiPoly>(idx, [&m](std::size_t i, std::size_t j) { return m.at(i, j); }, zero,
                                 MultiPoly::constant(Rational(1), m.variables()));
}

SkewForm standard_B(std::size_t n) {
  if (n < 1) throw std::invalid_argument("standard form needs n >= 1");
  RationalMatrix m(2 * n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    m[2 * i][2 * i + 1] = Rational(1);
    m[2 * i + 1][2 * i] = Rational(-1);
  }
  return SkewForm(std::move(m));
}

std::string ChartOneForm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    std::string c = coeffs[i].to_string();
    std::string term;
    if (c == "1")
      term = "d" + coordinates[i];
    else if (c == "-1")
      term = "-d" + coordinates[i];
    else if (coeffs[i].term_count() > 1)
      term = "(" + c + ")*d" + coordinates[i];
    else
      term = c + "*d" + coordinates[i];
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

StandardForms standard_forms(std::size_t n) {
  if (n < 2) throw std::invalid_argument("standard forms need n >= 2");
  StandardForms f;
  std::vector<std::string> zs;
  for (std::size_t i = 1; i < 2 * n; ++i) zs.push_back("z" + std::to_string(i));
  f.omega.chart = "z0=1";
  f.omega.coordinates = zs;
  f.omega.coeffs.assign(zs.size(), MultiPoly(zs));
  f.omega.coeffs[0] = MultiPoly::constant(Rational(1), zs);
  for (std::size_t i = 1; i < n; ++i) {
    // coordinate z_k sits at index k - 1
    f.omega.coeffs[2 * i + 1 - 1] = MultiPoly::variable("z" + std::to_string(2 * i), zs);
    f.omega.coeffs[2 * i - 1] = -MultiPoly::variable("z" + std::to_string(2 * i + 1), zs);
  }

  std::vector<std::string> vars;
  for (std::size_t j = 1; j <= n; ++j) vars.push_back("x" + std::to_string(j));
  for (std::size_t j = 2; j <= n; ++j) vars.push_back("xi" + std::to_string(j));
  f.eta.chart = "x0=1,y0=1";
  for (std::size_t j = 1; j <= n; ++j) f.eta.coordinates.push_back("x" + std::to_string(j));
  f.eta.coeffs.push_back(MultiPoly::constant(Rational(1), vars));
  for (std::size_t j = 2; j <= n; ++j) f.eta.coeffs.push_back(MultiPoly::variable("xi" + std::to_string(j), vars));
  return f;
}

ProjMap polarity(const SkewForm& b) {
  if (!b.is_nondegenerate()) throw std::invalid_argument("polarity needs a nondegenerate form");
  return ProjMap(b.matrix());
}

bool is_isotropic(const LinearSubspace& s, const SkewForm& b) {
  if (s.basis.cols() != b.size()) throw std::invalid_argument("subspace and form dimensions differ");
  for (std::size_t i = 0; i < s.basis.rows(); ++i)
    for (std::size_t j = i + 1; j < s.basis.rows(); ++j)
      if (!b.pairing(s.basis.row(i), s.basis.row(j)).is_zero()) return false;
  return true;
}

PolyVector LegendrianCheck::nonzero_residuals() const {
  PolyVector out;
  for (const auto& r : residuals)
    if (!r.is_zero()) out.push_back(r);
  return out;
}

LegendrianCheck legendrian_check(const ParamVariety& x, const SkewForm& b) {
  if (x.coords().size() != b.size()) throw std::invalid_argument("variety and form dimensions differ");
  LegendrianCheck out;
  const auto& v = x.coords();
  std::vector<PolyVector> d;
  for (const auto& p : x.params()) d.push_back(differentiate(v, p));
  for (std::size_t i = 0; i < d.size(); ++i) {
    out.labels.push_back("B(v,d" + x.params()[i] + "v)");
    out.residuals.push_back(b.pairing(v, d[i]));
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      out.labels.push_back("B(d" + x.params()[i] + "v,d" + x.params()[j] + "v)");
      out.residuals.push_back(b.pairing(d[i], d[j]));
    }
  out.integral = std::all_of(out.residuals.begin(), out.residuals.end(), [](const MultiPoly& r) { return r.is_zero(); });
  out.legendrian = out.integral && x.param_count() + 1 == b.n();
  return out;
}

namespace {

void enumerate_points(std::size_t m, unsigned bound, unsigned sum, std::vector<unsigned>& cur,
                      const std::function<bool(const std::vector<unsigned>&)>& visit, bool& done) {
  if (done) return;
  if (cur.size() + 1 == m) {
    if (sum > bound) return;
    cur.push_back(sum);
    done = visit(cur);
    cur.pop_back();
    return;
  }
  for (unsigned x = std::min(sum, bound) + 1; x-- > 0;) {
    cur.push_back(x);
    enumerate_points(m, bound, sum - x, cur, visit, done);
    cur.pop_back();
    if (done) return;
  }
}

}  // namespace

ContactSearch find_contact_form(const ParamVariety& x) {
  const std::size_t size = x.coords().size();
  if (size % 2 != 0) throw std::invalid_argument("contact forms need an odd-dimensional projective space");
  if (size > 8) throw std::invalid_argument("contact form search is limited to P^7");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) pairs.emplace_back(i, j);

  const auto& v = x.coords();
  std::vector<PolyVector> vecs{v};
  for (const auto& p : x.params()) vecs.push_back(differentiate(v, p));

  // One equation per (vector pair, monomial): sum_{i<j} p_ij * coeff(u_i w_j - u_j w_i).
  std::map<std::pair<std::size_t, Exponent>, RationalVector> rows;
  std::size_t pair_id = 0;
  for (std::size_t a = 0; a < vecs.size(); ++a)
    for (std::size_t c = a + 1; c < vecs.size(); ++c, ++pair_id)
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [i, j] = pairs[k];
        const MultiPoly e = vecs[a][i] * vecs[c][j] - vecs[a][j] * vecs[c][i];
        for (const auto& [exp, coeff] : e.terms()) {
          auto& row = rows[{pair_id, exp}];
          if (row.empty()) row.assign(pairs.size(), Rational(0));
          row[k] += coeff;
        }
      }
  RationalMatrix system;
  for (auto& [key, row] : rows) system.push_back(std::move(row));
  const auto basis = kernel(system, pairs.size());

  ContactSearch out;
  out.solution_dim = basis.size();
  auto to_matrix = [&](const RationalVector& p) {
    RationalMatrix m(size, RationalVector(size));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      m[pairs[k].first][pairs[k].second] = p[k];
      m[pairs[k].second][pairs[k].first] = -p[k];
    }
    return m;
  };
  for (const auto& p : basis) out.solution_basis.push_back(SkewForm(to_matrix(p)));

  std::vector<std::string> lambdas;
  for (std::size_t r = 1; r <= basis.size(); ++r) lambdas.push_back("l" + std::to_string(r));
  PolyMatrix generic(size, size, lambdas);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      MultiPoly e(lambdas);
      for (std::size_t r = 0; r < basis.size(); ++r) {
        const Rational& c = out.solution_basis[r].matrix()[i][j];
        if (!c.is_zero()) e += MultiPoly::variable(lambdas[r], lambdas) * c;
      }
      generic.set(i, j, e);
    }
  out.generic_pfaffian = pfaffian(generic);
  if (basis.empty() || out.generic_pfaffian.is_zero()) return out;

  // A nonzero polynomial of degree n cannot vanish on all of {0..n}^m; scan by increasing sum.
  const unsigned bound = static_cast<unsigned>(size / 2);
  const std::size_t m = basis.size();
  for (unsigned sum = 1; sum <= bound * m && !out.form; ++sum) {
    std::vector<unsigned> cur;
    bool done = false;
    enumerate_points(m, bound, sum, cur,
                     [&](const std::vector<unsigned>& pt) {
                       ParamValues at;
                       for (std::size_t r = 0; r < m; ++r) at[lambdas[r]] = Rational(static_cast<long>(pt[r]));
                       if (out.generic_pfaffian.evaluate_all(at).is_zero()) return false;
                       RationalVector p(pairs.size());
                       for (std::size_t r = 0; r < m; ++r)
                         for (std::size_t k = 0; k < pairs.size(); ++k) p[k] += basis[r][k] * Rational(static_cast<long>(pt[r]));
                       out.form = SkewForm(to_matrix(p)).normalized();
                       return true;
                     },
                     done);
  }
  return out;
}

ConeReduction cone_reduction(const ParamVariety& x, const SkewForm& b, const RationalVector& h) {
  const std::size_t size = b.size();
  if (x.coords().size() != size || h.size() != size) throw std::invalid_argument("dimension mismatch");
  if (size < 4) throw std::invalid_argument("cone reduction needs P^3 or larger");
  if (!pair(h, x.coords()).is_zero()) throw std::invalid_argument("variety is not contained in hyperplane");
  if (!b.is_nondegenerate()) throw std::invalid_argument("cone reduction needs a nondegenerate form");

  // h = B(v, .) means h = B^T v.
  const auto v = solve(transpose(b.matrix()), h);
  if (!v) throw std::invalid_argument("no vertex for this hyperplane");
  std::size_t wi = 0;
  while (wi < size && h[wi].is_zero()) ++wi;
  if (wi == size) throw std::invalid_argument("hyperplane covector is zero");
  RationalVector w(size);
  w[wi] = Rational(1);

  RationalVector wB(size);
  for (std::size_t j = 0; j < size; ++j)
    for (std::size_t i = 0; i < size; ++i) wB[j] += w[i] * b.matrix()[i][j];
  const auto e1 = kernel(RationalMatrix{h, wB}, size);

  RationalMatrix basis = e1;
  basis.push_back(*v);
  basis.push_back(w);
  // x = basis^T c, so c = (basis^T)^{-1} x
  const RationalMatrix to_coords = inverse(transpose(basis));
  PolyVector reduced;
  for (std::size_t r = 0; r < e1.size(); ++r) reduced.push_back(pair(to_coords[r], x.coords()));

  RationalMatrix b1(e1.size(), RationalVector(e1.size()));
  for (std::size_t i = 0; i < e1.size(); ++i)
    for (std::size_t j = 0; j < e1.size(); ++j) b1[i][j] = b.pairing(e1[i], e1[j]);

  return ConeReduction{ProjPoint::from_rationals(normalize_vector(*v)), w,
                       LinearSubspace{PolyMatrix::from_rationals(e1), size - 1},
                       ParamVariety(x.params(), reduced).canonical(), SkewForm(std::move(b1))};
}

}  // namespace oscdual
