#include "oscdual/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oscdual {

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool natural_name_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      const mpz_class na(std::string(a.substr(i, ie - i)));
      const mpz_class nb(std::string(b.substr(j, je - j)));
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  if (a == b) return a;
  auto contains_all = [](const std::vector<std::string>& big, const std::vector<std::string>& small) {
    return std::all_of(small.begin(), small.end(), [&](const std::string& s) {
      return std::find(big.begin(), big.end(), s) != big.end();
    });
  };
  if (contains_all(a, b)) return a;
  if (contains_all(b, a)) return b;
  std::set<std::string> all(a.begin(), a.end());
  all.insert(b.begin(), b.end());
  std::vector<std::string> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(),
            [](const std::string& x, const std::string& y) { return natural_name_less(x, y); });
  return out;
}

bool valid_variable_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); });
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly::MultiPoly(std::vector<std::string> variables, TermMap terms)
    : vars_(std::move(variables)), terms_(std::move(terms)) {
  for (const auto& [e, c] : terms_)
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent length does not match variables");
  prune();
}

MultiPoly MultiPoly::constant(const Rational& c, std::vector<std::string> variables) {
  MultiPoly p(std::move(variables));
  if (!c.is_zero()) p.terms_.emplace(Exponent(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name, std::vector<std::string> variables) {
  if (std::find(variables.begin(), variables.end(), name) == variables.end()) variables.push_back(name);
  MultiPoly p(std::move(variables));
  Exponent e(p.vars_.size(), 0);
  e[static_cast<std::size_t>(p.var_index(name))] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponent exponent, const Rational& c) {
  if (exponent.size() != variables.size()) throw std::invalid_argument("exponent length does not match variables");
  MultiPoly p(std::move(variables));
  if (!c.is_zero()) p.terms_.emplace(std::move(exponent), c);
  return p;
}

int MultiPoly::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

void MultiPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(), [](auto x) { return x == 0; }));
}

Rational MultiPoly::constant_term() const { return coefficient(Exponent(vars_.size(), 0)); }

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

int MultiPoly::degree_in(std::string_view name) const {
  if (terms_.empty()) return -1;
  const int idx = var_index(name);
  if (idx < 0) return 0;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(idx)]);
  return static_cast<int>(d);
}

std::vector<std::string> MultiPoly::used_variables() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const bool used = std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] > 0; });
    if (used) out.push_back(vars_[i]);
  }
  return out;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
    return static_cast<int>(std::accumulate(t.first.begin(), t.first.end(), std::uint64_t{0})) == d;
  });
}

const Exponent& MultiPoly::leading_exponent() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& variables) const {
  if (variables == vars_) return *this;
  std::vector<int> map(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), vars_[i]);
    if (it != variables.end()) map[i] = static_cast<int>(it - variables.begin());
  }
  MultiPoly out(variables);
  for (const auto& [e, c] : terms_) {
    Exponent ne(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] < 0) throw std::invalid_argument("variable '" + vars_[i] + "' missing from target list");
      ne[static_cast<std::size_t>(map[i])] = e[i];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

std::pair<MultiPoly, MultiPoly> align(const MultiPoly& a, const MultiPoly& b) {
  if (a.variables() == b.variables()) return {a, b};
  const auto vars = merge_variables(a.variables(), b.variables());
  return {a.with_variables(vars), b.with_variables(vars)};
}

std::vector<MultiPoly> align_all(const std::vector<MultiPoly>& polys) {
  std::vector<std::string> vars;
  for (const auto& p : polys) vars = merge_variables(vars, p.variables());
  std::vector<MultiPoly> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.with_variables(vars));
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.vars_ != vars_) {
    auto [a, b] = align(*this, o);
    *this = std::move(a);
    return *this += b;
  }
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) {
    auto [x, y] = align(a, b);
    return x * y;
  }
  MultiPoly out(a.vars_);
  if (a.is_zero() || b.is_zero()) return out;
  Exponent e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.terms_.emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  out.prune();
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& [e, v] : a.terms_) v = -v;
  return a;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(Rational(1), vars_);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::differentiate(std::string_view name) const {
  const int idx = var_index(name);
  if (idx < 0) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  const auto i = static_cast<std::size_t>(idx);
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent ne = e;
    --ne[i];
    out.terms_.emplace(std::move(ne), c * Rational(static_cast<long>(e[i])));
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& values) const {
  std::vector<std::string> vars = vars_;
  for (const auto& [name, v] : values) vars = merge_variables(vars, v.variables());
  std::vector<std::optional<MultiPoly>> repl(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it != values.end()) repl[i] = it->second.with_variables(vars);
  }
  // Cache powers per variable; terms share them.
  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(Rational(1), vars));
    while (cache.size() <= k) cache.push_back(cache.back() * *repl[i]);
    return cache[k];
  };
  MultiPoly out(vars);
  for (const auto& [e, c] : terms_) {
    Exponent kept(vars.size(), 0);
    MultiPoly term = constant(c, vars);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (repl[i]) {
        term *= power_of(i, e[i]);
      } else {
        const auto pos = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), vars_[i]) - vars.begin());
        kept[pos] = e[i];
      }
    }
    out += term * monomial(vars, kept, Rational(1));
  }
  return out;
}

MultiPoly MultiPoly::evaluate(const std::map<std::string, Rational>& values) const {
  std::vector<std::optional<Rational>> val(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it != values.end()) val[i] = it->second;
  }
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    Exponent ne = e;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0 && val[i]) {
        coeff *= val[i]->pow(e[i]);
        ne[i] = 0;
      }
    }
    if (coeff.is_zero()) continue;
    auto [it, inserted] = out.terms_.emplace(std::move(ne), coeff);
    if (!inserted) it->second += coeff;
  }
  out.prune();
  return out;
}

Rational MultiPoly::evaluate_all(const std::map<std::string, Rational>& values) const {
  const MultiPoly r = evaluate(values);
  if (!r.is_constant()) throw std::invalid_argument("evaluation leaves free variables in " + r.to_string());
  return r.constant_term();
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::string_view name) const {
  const int idx = var_index(name);
  if (idx < 0) return {*this};
  const auto i = static_cast<std::size_t>(idx);
  const int d = std::max(degree_in(name), 0);
  std::vector<MultiPoly> out(static_cast<std::size_t>(d) + 1, MultiPoly(vars_));
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    ne[i] = 0;
    out[e[i]].terms_.emplace(std::move(ne), c);
  }
  return out;
}

MultiPoly MultiPoly::leading_coefficient_in(std::string_view name) const {
  if (is_zero()) return *this;
  return coefficients_in(name).back();
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class g = 0;
  mpz_class l = 1;
  for (const auto& [e, c] : terms_) {
    g = integer_gcd(g, c.numerator());
    l = integer_lcm(l, c.denominator());
  }
  return Rational(mpq_class(g, l));
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (leading_coefficient().sign() < 0) c = -c;
  MultiPoly out = *this;
  out *= c.inverse();
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << '*';
      mono << vars_[i];
      if (e[i] > 1) mono << '^' << e[i];
      any = true;
    }
    const Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (!any)
      os << a;
    else if (a.is_one())
      os << mono.str();
    else
      os << a << '*' << mono.str();
    first = false;
  }
  return os.str();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto [x, y] = align(a, b);
  return x.terms_ == y.terms_;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>* fixed) : text_(text), fixed_(fixed) {}

  MultiPoly run() {
    std::vector<std::pair<Rational, std::map<std::string, std::uint32_t>>> terms;
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      skip();
      terms.push_back(term());
      if (sign < 0) terms.back().first = -terms.back().first;
    }
    std::vector<std::string> vars;
    if (fixed_ != nullptr) {
      vars = *fixed_;
    } else {
      std::set<std::string> seen;
      for (const auto& t : terms)
        for (const auto& [name, k] : t.second) seen.insert(name);
      vars.assign(seen.begin(), seen.end());
      std::sort(vars.begin(), vars.end(),
                [](const std::string& a, const std::string& b) { return natural_name_less(a, b); });
    }
    MultiPoly out(vars);
    for (const auto& [c, factors] : terms) {
      Exponent e(vars.size(), 0);
      for (const auto& [name, k] : factors) {
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) fail("unknown variable '" + name + "'");
        e[static_cast<std::size_t>(it - vars.begin())] += k;
      }
      out += MultiPoly::monomial(vars, std::move(e), c);
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "': " + what);
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<Rational, std::map<std::string, std::uint32_t>> term() {
    Rational coeff(1);
    std::map<std::string, std::uint32_t> factors;
    while (true) {
      skip();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = digits();
        std::string den = "1";
        skip();
        if (peek() == '/') {
          ++pos_;
          skip();
          den = digits();
        }
        coeff *= Rational::parse(num + "/" + den);
      } else if (c >= 'a' && c <= 'z') {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                                       (text_[pos_] >= '0' && text_[pos_] <= '9')))
          ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        std::uint32_t k = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          k = static_cast<std::uint32_t>(std::stoul(digits()));
        }
        factors[name] += k;
      } else {
        fail("expected coefficient or variable");
      }
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {coeff, factors};
  }

  std::string_view text_;
  const std::vector<std::string>* fixed_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return Parser(text, nullptr).run(); }

MultiPoly MultiPoly::parse(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, &variables).run();
}

// ---------------------------------------------------------------------------
// Division and gcd

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  auto [r, d] = align(a, b);
  MultiPoly q(r.variables());
  if (d.is_constant()) {
    r *= d.constant_term().inverse();
    return r;
  }
  const Exponent& ld = d.leading_exponent();
  const Rational inv = d.leading_coefficient().inverse();
  while (!r.is_zero()) {
    const Exponent& lr = r.leading_exponent();
    Exponent e(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      if (lr[i] < ld[i]) return std::nullopt;
      e[i] = lr[i] - ld[i];
    }
    const MultiPoly t = MultiPoly::monomial(r.variables(), std::move(e), r.leading_coefficient() * inv);
    q += t;
    r -= t * d;
  }
  return q;
}

MultiPoly divide(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::domain_error("inexact division of " + a.to_string() + " by " + b.to_string());
  return *q;
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::string_view name) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  auto [r, d] = align(a, b);
  const int db = d.degree_in(name);
  const MultiPoly lcb = d.leading_coefficient_in(name);
  const std::string var(name);
  const MultiPoly x = d.var_index(name) >= 0 ? MultiPoly::variable(var, d.variables())
                                               : MultiPoly::constant(Rational(1), d.variables());
  while (!r.is_zero() && r.degree_in(name) >= db) {
    const int shift = r.degree_in(name) - db;
    const MultiPoly lr = r.leading_coefficient_in(name);
    r = lcb * r - lr * x.pow(static_cast<unsigned>(shift)) * d;
    if (db == 0) break;
  }
  return db == 0 ? MultiPoly(r.variables()) : r;
}

namespace {

MultiPoly content_in(const MultiPoly& p, std::string_view name) {
  MultiPoly g(p.variables());
  for (const auto& c : p.coefficients_in(name)) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

}  // namespace

MultiPoly gcd(const MultiPoly& a_in, const MultiPoly& b_in) {
  auto [a, b] = align(a_in, b_in);
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(Rational(1), a.variables());

  std::string x;
  for (const auto& v : a.variables()) {
    if (a.involves(v) || b.involves(v)) {
      x = v;
      break;
    }
  }
  if (!a.involves(x)) return gcd(a, content_in(b, x));
  if (!b.involves(x)) return gcd(content_in(a, x), b);

  const MultiPoly ca = content_in(a, x);
  const MultiPoly cb = content_in(b, x);
  const MultiPoly c = gcd(ca, cb);
  MultiPoly p = divide(a, ca);
  MultiPoly q = divide(b, cb);
  if (p.degree_in(x) < q.degree_in(x)) std::swap(p, q);
  while (!q.is_zero()) {
    MultiPoly r = pseudo_remainder(p, q, x);
    p = std::move(q);
    q = r.is_zero() ? r : divide(r, content_in(r, x));
  }
  const MultiPoly g = divide(p, content_in(p, x));
  return (c * g).normalized();
}

MultiPoly gcd(const std::vector<MultiPoly>& polys) {
  MultiPoly g;
  for (const auto& p : polys) {
    g = gcd(g, p);
    if (g.is_constant() && !g.is_zero()) break;
  }
  if (!polys.empty()) g = g.with_variables(align_all(polys).front().variables());
  return g;
}

MultiPoly squarefree_part(const MultiPoly& p, std::string_view name) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  if (p.var_index(name) < 0) return p.normalized();
  const MultiPoly g = gcd(p, p.differentiate(name));
  return divide(p, g).normalized();
}

}  // namespace oscdual
