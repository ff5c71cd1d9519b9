#include "ginv/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ginv/bareiss.hpp"
#include "ginv/errors.hpp"

namespace ginv {

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(const BigRational& c, std::vector<std::string> variables) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p({name});
  p.add_term(Exponents{1}, BigRational(1));
  return p;
}

MultiPoly MultiPoly::monomial(const BigRational& c, std::vector<std::string> variables, Exponents exps) {
  if (exps.size() != variables.size()) throw DomainError("monomial: exponent vector length mismatch");
  MultiPoly p(std::move(variables));
  p.add_term(exps, c);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const BigRational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::optional<std::size_t> MultiPoly::index_of(std::string_view var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 &&
                            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                        [](int e) { return e == 0; }));
}

BigRational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? BigRational(0) : it->second;
}

int MultiPoly::degree(std::string_view var) const {
  if (terms_.empty()) return -1;
  auto idx = index_of(var);
  if (!idx) return 0;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
  return d;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

MultiPoly MultiPoly::coefficient(std::string_view var, int k) const {
  auto idx = index_of(var);
  std::vector<std::string> rest;
  for (const auto& v : vars_)
    if (v != var) rest.push_back(v);
  MultiPoly out(rest);
  for (const auto& [e, c] : terms_) {
    if ((idx ? e[*idx] : 0) != k) continue;
    Exponents r;
    r.reserve(rest.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (!idx || i != *idx) r.push_back(e[i]);
    out.add_term(r, c);
  }
  return out;
}

BigRational MultiPoly::coefficient_of(const std::map<std::string, int>& monomial) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [name, power] : monomial) {
    auto idx = index_of(name);
    if (!idx) {
      if (power != 0) return BigRational(0);
      continue;
    }
    e[*idx] = power;
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& variables) const {
  if (variables == vars_) return *this;
  std::vector<std::size_t> target(vars_.size());
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), vars_[i]);
    if (it == variables.end()) {
      if (used[i]) throw DomainError("with_variables: variable '" + vars_[i] + "' occurs but is not in the target list");
      target[i] = variables.size();
    } else {
      target[i] = static_cast<std::size_t>(it - variables.begin());
    }
  }
  MultiPoly out(variables);
  for (const auto& [e, c] : terms_) {
    Exponents r(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (target[i] < variables.size()) r[target[i]] = e[i];
    out.add_term(r, c);
  }
  return out;
}

MultiPoly MultiPoly::without_unused_variables() const {
  std::vector<std::string> keep;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    bool used = std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] != 0; });
    if (used) keep.push_back(vars_[i]);
  }
  return with_variables(keep);
}

BigRational MultiPoly::evaluate(const std::map<std::string, BigRational>& point) const {
  std::vector<const BigRational*> values(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it != point.end()) values[i] = &it->second;
  }
  BigRational sum(0);
  BigRational term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (values[i] == nullptr) throw DomainError("evaluate: no value for variable '" + vars_[i] + "'");
      BigRational p;
      mpz_pow_ui(p.get_num_mpz_t(), values[i]->get_num_mpz_t(), static_cast<unsigned long>(e[i]));
      mpz_pow_ui(p.get_den_mpz_t(), values[i]->get_den_mpz_t(), static_cast<unsigned long>(e[i]));
      term *= p;
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::evaluate(std::string_view var, const BigRational& value) const {
  auto idx = index_of(var);
  if (!idx) return *this;
  std::vector<std::string> rest;
  for (const auto& v : vars_)
    if (v != var) rest.push_back(v);
  MultiPoly out(rest);
  std::vector<BigRational> powers{BigRational(1)};
  for (const auto& [e, c] : terms_) {
    const int k = e[*idx];
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * value);
    Exponents r;
    r.reserve(rest.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != *idx) r.push_back(e[i]);
    out.add_term(r, c * powers[static_cast<std::size_t>(k)]);
  }
  return out;
}

std::vector<std::string> merged_variables(const MultiPoly& a, const MultiPoly& b) {
  std::vector<std::string> vars = a.variables();
  for (const auto& v : b.variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  return vars;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (vars_ != rhs.vars_) {
    auto vars = merged_variables(*this, rhs);
    *this = with_variables(vars);
    MultiPoly r = rhs.with_variables(vars);
    for (const auto& [e, c] : r.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this += -rhs; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) {
    auto vars = merged_variables(a, b);
    return a.with_variables(vars) * b.with_variables(vars);
  }
  MultiPoly out(a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly& MultiPoly::operator*=(const BigRational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  auto vars = merged_variables(a, b);
  return a.with_variables(vars).terms_ == b.with_variables(vars).terms_;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigRational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    bool need_star = false;
    if (mag != 1 || !has_var) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

MultiPoly pow(const MultiPoly& f, unsigned k) {
  MultiPoly result = MultiPoly::constant(BigRational(1), f.variables());
  MultiPoly base = f;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

WeightedDegree weighted_degree(const MultiPoly& f, const WeightVector& weights) {
  if (f.is_zero()) throw DomainError("weighted_degree of the zero polynomial");
  std::vector<int> w;
  for (const auto& v : f.variables()) {
    auto it = weights.find(v);
    int weight = it == weights.end() ? 1 : it->second;
    if (weight < 1) throw DomainError("weights must be positive (variable '" + v + "')");
    w.push_back(weight);
  }
  WeightedDegree out;
  for (const auto& [e, c] : f.terms()) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += w[i] * e[i];
    out.degrees.insert(d);
  }
  if (out.degrees.size() == 1) out.degree = *out.degrees.begin();
  return out;
}

MultiPoly substitute(const MultiPoly& f, std::string_view var, const MultiPoly& g) {
  const int deg = f.degree(var);
  if (deg < 0) return f;
  MultiPoly result;
  for (int k = deg; k >= 0; --k) {
    result = result * g + f.coefficient(var, k);
  }
  // Keep the caller's variables first, minus the eliminated one when g does
  // not reintroduce it.
  std::vector<std::string> order;
  for (const auto& v : f.variables())
    if (v != var) order.push_back(v);
  for (const auto& v : g.variables())
    if (v != var && std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
  if (std::find(g.variables().begin(), g.variables().end(), var) != g.variables().end())
    order.push_back(std::string(var));
  return result.with_variables(order);
}

DivisionResult divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  auto vars = merged_variables(f, g);
  MultiPoly p = f.with_variables(vars);
  MultiPoly d = g.with_variables(vars);
  const auto& [lead_e, lead_c] = *d.terms().rbegin();
  MultiPoly q(vars);
  MultiPoly r(vars);
  while (!p.is_zero()) {
    auto [pe, pc] = *p.terms().rbegin();
    bool divisible = true;
    Exponents diff(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      diff[i] = pe[i] - lead_e[i];
      if (diff[i] < 0) divisible = false;
    }
    if (divisible) {
      MultiPoly t = MultiPoly::monomial(pc / lead_c, vars, diff);
      q += t;
      p -= t * d;
    } else {
      MultiPoly t = MultiPoly::monomial(pc, vars, pe);
      r += t;
      p -= t;
    }
  }
  return {q, r};
}

MultiPoly divexact(const MultiPoly& f, const MultiPoly& g) {
  auto [q, r] = divide(f, g);
  if (!r.is_zero()) throw InexactDivision("divexact: nonzero remainder", r.str());
  return q;
}

BigRational content(const MultiPoly& f) {
  if (f.is_zero()) return BigRational(1);
  BigInteger num_gcd = 0;
  BigInteger den_lcm = 1;
  for (const auto& [e, c] : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  BigRational out(num_gcd, den_lcm);
  out.canonicalize();
  return out;
}

namespace {

std::vector<std::string> remaining_variables(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
  std::vector<std::string> rest;
  for (const auto& v : merged_variables(f, g))
    if (v != var) rest.push_back(v);
  return rest;
}

std::vector<MultiPoly> coefficient_list(const MultiPoly& f, std::string_view var, int formal_degree,
                                        const std::vector<std::string>& rest) {
  std::vector<MultiPoly> out;
  for (int k = 0; k <= formal_degree; ++k) out.push_back(f.coefficient(var, k).with_variables(rest));
  return out;
}

MultiPoly resultant_bareiss(const MultiPoly& f, const MultiPoly& g, std::string_view var, int m, int n,
                            const std::vector<std::string>& rest) {
  const MultiPoly zero(rest);
  const MultiPoly one = MultiPoly::constant(BigRational(1), rest);
  auto s = sylvester_matrix(coefficient_list(f, var, m, rest), coefficient_list(g, var, n, rest), zero);
  return bareiss_determinant(
      std::move(s), zero, one, [](const MultiPoly& a, const MultiPoly& b) { return divexact(a, b); },
      [](const MultiPoly& a) { return a.is_zero(); });
}

BigRational rational_sylvester_det(const std::vector<BigRational>& fc, const std::vector<BigRational>& gc) {
  // Clear denominators, then run Bareiss over the integers.
  auto to_integer_row = [](const std::vector<BigRational>& c, BigInteger& scale) {
    BigInteger lcm = 1;
    for (const auto& x : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInteger> out;
    for (const auto& x : c) {
      BigRational y = x * BigRational(lcm);
      out.push_back(y.get_num());
    }
    scale = lcm;
    return out;
  };
  BigInteger lf, lg;
  auto fi = to_integer_row(fc, lf);
  auto gi = to_integer_row(gc, lg);
  const std::size_t m = fc.size() - 1;
  const std::size_t n = gc.size() - 1;
  auto s = sylvester_matrix(fi, gi, BigInteger(0));
  BigInteger det = bareiss_determinant(
      std::move(s), BigInteger(0), BigInteger(1),
      [](const BigInteger& a, const BigInteger& b) {
        BigInteger q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
      },
      [](const BigInteger& a) { return sgn(a) == 0; });
  // res(lf·f, lg·g) = lf^n · lg^m · res(f, g)
  BigInteger denom, t;
  mpz_pow_ui(denom.get_mpz_t(), lf.get_mpz_t(), n);
  mpz_pow_ui(t.get_mpz_t(), lg.get_mpz_t(), m);
  denom *= t;
  BigRational out(det, denom);
  out.canonicalize();
  return out;
}

// Resultant with fixed formal degrees (m, n) in `var`, evaluating the
// remaining variables one at a time at 0, 1, …, D and interpolating.
MultiPoly resultant_interp(const MultiPoly& f, const MultiPoly& g, std::string_view var, int m, int n,
                           const std::vector<std::string>& rest) {
  if (rest.empty()) {
    std::vector<BigRational> fc, gc;
    for (int k = 0; k <= m; ++k) fc.push_back(f.coefficient(var, k).constant_term());
    for (int k = 0; k <= n; ++k) gc.push_back(g.coefficient(var, k).constant_term());
    return MultiPoly::constant(rational_sylvester_det(fc, gc));
  }
  const std::string x = rest.front();
  const std::vector<std::string> tail(rest.begin() + 1, rest.end());
  const int bound = n * std::max(f.degree(x), 0) + m * std::max(g.degree(x), 0);
  std::vector<BigRational> points;
  std::vector<MultiPoly> values;
  for (int i = 0; i <= bound; ++i) {
    BigRational xi(i);
    points.push_back(xi);
    values.push_back(resultant_interp(f.evaluate(x, xi), g.evaluate(x, xi), var, m, n, tail).with_variables(tail));
  }
  // Newton divided differences over polynomial values.
  const std::size_t count = points.size();
  for (std::size_t j = 1; j < count; ++j) {
    for (std::size_t i = count - 1; i >= j; --i) {
      values[i] = (values[i] - values[i - 1]) * BigRational(1 / (points[i] - points[i - j]));
      if (i == j) break;
    }
  }
  std::vector<std::string> vars = rest;
  MultiPoly xpoly = MultiPoly::variable(x).with_variables(vars);
  MultiPoly result = values[count - 1].with_variables(vars);
  for (std::size_t k = count - 1; k-- > 0;) {
    result = result * (xpoly - MultiPoly::constant(points[k], vars)) + values[k].with_variables(vars);
  }
  return result;
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::string_view var, ResultantMethod method) {
  const int m = f.degree(var);
  const int n = g.degree(var);
  if (m <= 0 || n <= 0) throw DomainError("resultant: both polynomials need positive degree in '" + std::string(var) + "'");
  auto rest = remaining_variables(f, g, var);
  switch (method) {
    case ResultantMethod::bareiss:
      return resultant_bareiss(f, g, var, m, n, rest);
    case ResultantMethod::interpolation:
      return resultant_interp(f, g, var, m, n, rest).with_variables(rest);
    case ResultantMethod::cross_check: {
      MultiPoly a = resultant_bareiss(f, g, var, m, n, rest);
      MultiPoly b = resultant_interp(f, g, var, m, n, rest).with_variables(rest);
      if (!(a == b)) throw InternalInconsistency("resultant: Bareiss and interpolation paths disagree");
      return a;
    }
  }
  return {};
}

namespace {

std::string univariate_variable(const MultiPoly& f, const MultiPoly& g) {
  auto fu = f.without_unused_variables();
  auto gu = g.without_unused_variables();
  auto vars = merged_variables(fu, gu);
  if (vars.size() != 1) throw DomainError("expected univariate polynomials in one common variable");
  return vars.front();
}

std::vector<BigRational> dense_coefficients(const MultiPoly& f, const std::string& var) {
  std::vector<BigRational> c(static_cast<std::size_t>(std::max(f.degree(var), 0)) + 1, BigRational(0));
  for (int k = 0; k < static_cast<int>(c.size()); ++k) c[static_cast<std::size_t>(k)] = f.coefficient(var, k).constant_term();
  return c;
}

}  // namespace

BigRational univariate_resultant(const MultiPoly& f, const MultiPoly& g) {
  const std::string var = univariate_variable(f, g);
  if (f.degree(var) <= 0 || g.degree(var) <= 0) throw DomainError("univariate_resultant: degree-0 input");
  return rational_sylvester_det(dense_coefficients(f, var), dense_coefficients(g, var));
}

MultiPoly univariate_gcd(const MultiPoly& f, const MultiPoly& g) {
  const std::string var = univariate_variable(f, g);
  auto a = dense_coefficients(f, var);
  auto b = dense_coefficients(g, var);
  auto trim = [](std::vector<BigRational>& c) {
    while (c.size() > 1 && sgn(c.back()) == 0) c.pop_back();
  };
  auto is_zero = [](const std::vector<BigRational>& c) { return c.size() == 1 && sgn(c[0]) == 0; };
  trim(a);
  trim(b);
  while (!is_zero(b)) {
    // a mod b
    while (!is_zero(a) && a.size() >= b.size()) {
      BigRational factor = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
      a.pop_back();
      if (a.empty()) a.push_back(BigRational(0));
      trim(a);
    }
    std::swap(a, b);
  }
  MultiPoly out({var});
  if (is_zero(a)) return out;
  BigRational lead = a.back();
  for (std::size_t k = 0; k < a.size(); ++k)
    out += MultiPoly::monomial(a[k] / lead, {var}, Exponents{static_cast<int>(k)});
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiPoly parse_all() {
    MultiPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  const std::vector<std::string>& seen() const { return seen_; }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc;
    bool first = true;
    while (true) {
      skip_space();
      bool negate = false;
      if (accept('+')) {
      } else if (accept('-')) {
        negate = true;
      } else if (!first) {
        break;
      }
      MultiPoly t = term();
      acc += negate ? -t : t;
      first = false;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (true) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        MultiPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= BigRational(1 / d.constant_term());
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (ch == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly::constant(BigRational(BigInteger(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (std::find(seen_.begin(), seen_.end(), name) == seen_.end()) seen_.push_back(name);
      return MultiPoly::variable(name);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> seen_;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::optional<std::vector<std::string>> variables) {
  Parser parser(text);
  MultiPoly p = parser.parse_all();
  if (variables) {
    for (const auto& name : parser.seen())
      if (std::find(variables->begin(), variables->end(), name) == variables->end())
        throw ParseError("polynomial parse error: unknown variable '" + name + "'");
    return p.with_variables(*variables);
  }
  return p.with_variables(parser.seen());
}

}  // namespace ginv
