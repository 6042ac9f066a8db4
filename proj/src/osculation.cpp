#include "oscdual/osculation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace oscdual {

namespace {

// Multi-indices of total degree d over k parameters, descending lex.
void indices_of_degree(std::size_t k, std::uint32_t d, Exponent& cur, std::vector<Exponent>& out) {
  if (cur.size() + 1 == k) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::uint32_t x = d + 1; x-- > 0;) {
    cur.push_back(x);
    indices_of_degree(k, d - x, cur, out);
    cur.pop_back();
  }
}

PolyVector derivative(const ParamVariety& x, const Exponent& e) {
  PolyVector v = x.coords();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::uint32_t m = 0; m < e[i]; ++m) v = differentiate(v, x.params()[i]);
  return v;
}

}  // namespace

std::string JetMatrix::row_label(std::size_t r) const {
  std::string out = "v";
  for (std::size_t i = 0; i < legend[r].size(); ++i)
    for (std::uint32_t m = 0; m < legend[r][i]; ++m) out = "d" + source.params()[i] + " " + out;
  return out;
}

JetMatrix jet_matrix(const ParamVariety& x, std::size_t s) {
  JetMatrix j{x, s, {}, {}};
  std::vector<PolyVector> rows;
  for (std::uint32_t d = 0; d <= s; ++d) {
    std::vector<Exponent> idx;
    Exponent cur;
    if (x.param_count() == 0) {
      if (d == 0) idx.push_back({});
    } else {
      indices_of_degree(x.param_count(), d, cur, idx);
    }
    for (const auto& e : idx) {
      j.legend.push_back(e);
      rows.push_back(derivative(x, e));
    }
  }
  j.matrix = PolyMatrix(rows);
  return j;
}

LinearSubspace osculating_space(const ParamVariety& x, std::size_t s, const ParamValues& at) {
  const RationalVector base = x.evaluate(at);
  if (std::all_of(base.begin(), base.end(), [](const Rational& c) { return c.is_zero(); }))
    throw std::invalid_argument("base point undefined at these parameter values");
  return span_of_rows(jet_matrix(x, s).matrix, at);
}

std::size_t generic_osculating_dim(const ParamVariety& x, std::size_t s) {
  return rank(jet_matrix(x, s).matrix) - 1;
}

QuadFormSpace second_fundamental_form(const ParamVariety& x, const ParamValues& at) {
  const std::size_t k = x.param_count();
  const RationalMatrix first = x.first_jet().evaluate(at).to_rationals();
  if (rank(first) != k + 1) throw std::invalid_argument("non-immersion point");
  const auto hyperplanes = kernel(first, x.coords().size());

  std::vector<std::vector<RationalVector>> second(k, std::vector<RationalVector>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Exponent e(k, 0);
      ++e[i];
      ++e[j];
      for (const auto& p : derivative(x, e)) second[i][j].push_back(p.evaluate_all(at));
    }

  QuadFormSpace out;
  RationalMatrix flat;
  for (const auto& h : hyperplanes) {
    RationalMatrix q(k, RationalVector(k));
    RationalVector row;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t c = 0; c < h.size(); ++c) q[i][j] += h[c] * second[i][j][c];
        if (j >= i) row.push_back(q[i][j]);
      }
    RationalMatrix trial = flat;
    trial.push_back(row);
    if (rank(trial) > flat.size()) {
      flat = std::move(trial);
      out.basis.push_back(std::move(q));
    }
  }
  return out;
}

ParamVariety osculating_dual(const ParamVariety& x) {
  const std::size_t k = x.param_count();
  const std::size_t size = x.coords().size();
  if (size != 2 * k + 2) throw std::invalid_argument("osculating dual needs a k-dimensional variety in P^{2k+1}");
  const JetMatrix jet = jet_matrix(x, 2);
  const RankKernel rk = ff_rank_kernel(jet.matrix);
  if (rk.rank != 2 * k + 1)
    throw std::invalid_argument("generic second osculating space has projective dimension " +
                                std::to_string(rk.rank - 1) + ", not a hyperplane");
  const PolyMatrix rows = jet.matrix.select_rows(rk.pivot_rows);
  std::vector<std::size_t> all_rows(rows.rows());
  for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
  PolyVector h;
  for (std::size_t j = 0; j < size; ++j) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < size; ++c)
      if (c != j) cols.push_back(c);
    MultiPoly m = determinant(rows.select(all_rows, cols));
    h.push_back(j % 2 == 0 ? m : -m);
  }
  return ParamVariety(x.params(), normalize_vector(h));
}

std::string to_string(SelfDualReport::Status s) {
  switch (s) {
    case SelfDualReport::Status::selfdual: return "selfdual";
    case SelfDualReport::Status::not_legendrian: return "not Legendrian";
    case SelfDualReport::Status::degenerate_osculation: return "degenerate osculation";
    case SelfDualReport::Status::in_hyperplane: return "contained in hyperplane";
    case SelfDualReport::Status::mismatch: return "dual differs from polarity";
  }
  return "unknown";
}

SelfDualReport selfdual_certificate(const ParamVariety& x, const SkewForm& b) {
  SelfDualReport r;
  const LegendrianCheck leg = legendrian_check(x, b);
  r.legendrian = leg.legendrian;
  r.osc2_generic_dim = generic_osculating_dim(x, 2);
  r.in_hyperplane = !hyperplane_containment(x).empty();
  if (!r.legendrian) {
    r.status = SelfDualReport::Status::not_legendrian;
    r.residuals = leg.nonzero_residuals();
    r.message = leg.integral ? "integral but not of dimension n-1" : "not Legendrian";
    return r;
  }
  if (r.osc2_generic_dim != 2 * b.n() - 2) {
    r.status = SelfDualReport::Status::degenerate_osculation;
    r.message = "generic dim Osc^2 is " + std::to_string(r.osc2_generic_dim) + ", expected " +
                std::to_string(2 * b.n() - 2);
    return r;
  }
  if (r.in_hyperplane) {
    r.status = SelfDualReport::Status::in_hyperplane;
    r.message = "contained in a hyperplane";
    return r;
  }
  const ParamVariety dual = osculating_dual(x);
  const PolyVector polar = polarity(b).apply(x.coords());
  for (const auto& d : cross_determinants(dual.coords(), polar))
    if (!d.is_zero()) r.residuals.push_back(d);
  r.selfdual = r.residuals.empty();
  r.status = r.selfdual ? SelfDualReport::Status::selfdual : SelfDualReport::Status::mismatch;
  r.message = to_string(r.status);
  return r;
}

}  // namespace oscdual
