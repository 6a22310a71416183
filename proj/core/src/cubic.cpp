#include "orchard/cubic.hpp"

#include <sstream>

namespace orchard {

namespace {

Integer power(const Integer& b, int e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

TernaryForm TernaryForm::linear(const ProjLine& l) {
  TernaryForm f(1);
  f.add({1, 0, 0}, Rational(l[0]));
  f.add({0, 1, 0}, Rational(l[1]));
  f.add({0, 0, 1}, Rational(l[2]));
  return f;
}

void TernaryForm::add(const Exponent& e, const Rational& c) {
  if (e[0] + e[1] + e[2] != degree_ || e[0] < 0 || e[1] < 0 || e[2] < 0) {
    throw GeometryError("monomial degree does not match form degree");
  }
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational TernaryForm::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TernaryForm::evaluate(const ProjPoint& p) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    s += c * power(p[0], e[0]) * power(p[1], e[1]) * power(p[2], e[2]);
  }
  return s;
}

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
  TernaryForm r(a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return r;
}

std::optional<TernaryForm> TernaryForm::divide_by(const ProjLine& l) const {
  if (degree_ < 1) return std::nullopt;
  int v = 0;
  while (sgn(l[v]) == 0) ++v;
  // Long division in the pivot variable: clear the term of highest
  // pivot-degree until only pivot-free terms (the remainder) are left.
  TernaryForm rest = *this;
  TernaryForm quotient(degree_ - 1);
  while (true) {
    const std::pair<const Exponent, Rational>* top = nullptr;
    for (const auto& t : rest.terms_) {
      if (t.first[v] > 0 && (top == nullptr || t.first[v] > top->first[v])) top = &t;
    }
    if (top == nullptr) break;
    Exponent qe = top->first;
    --qe[v];
    const Rational q = top->second / Rational(l[v]);
    quotient.add(qe, q);
    for (int u = 0; u < 3; ++u) {
      if (sgn(l[u]) != 0) {
        Exponent e = qe;
        ++e[u];
        rest.add(e, -q * Rational(l[u]));
      }
    }
  }
  if (!rest.is_zero()) return std::nullopt;
  return quotient;
}

CubicForm::CubicForm(std::array<Integer, 10> coeffs) : c_(std::move(coeffs)) {
  Integer g = 0;
  for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(g) == 0) throw GeometryError("zero cubic form");
  for (const auto& c : c_) {
    if (sgn(c) != 0) {
      if (sgn(c) < 0) g = -g;
      break;
    }
  }
  for (auto& c : c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

namespace {
std::array<Integer, 10> integral_coefficients(const TernaryForm& f) {
  if (f.degree() != 3) throw GeometryError("cubic form needs degree 3");
  Integer l = 1;
  for (const auto& [e, c] : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::array<Integer, 10> out;
  for (std::size_t i = 0; i < 10; ++i) {
    const Rational c = f.coeff(CubicForm::monomials[i]);
    out[i] = c.get_num() * (l / c.get_den());
  }
  return out;
}
}  // namespace

CubicForm::CubicForm(const TernaryForm& f) : CubicForm(integral_coefficients(f)) {}

std::array<Integer, 10> monomial_row(const ProjPoint& p) {
  std::array<Integer, 10> row;
  for (std::size_t i = 0; i < 10; ++i) {
    const auto& e = CubicForm::monomials[i];
    row[i] = power(p[0], e[0]) * power(p[1], e[1]) * power(p[2], e[2]);
  }
  return row;
}

Integer CubicForm::evaluate(const ProjPoint& p) const {
  const auto row = monomial_row(p);
  Integer s = 0;
  for (std::size_t i = 0; i < 10; ++i) s += c_[i] * row[i];
  return s;
}

TernaryForm CubicForm::as_form() const {
  TernaryForm f(3);
  for (std::size_t i = 0; i < 10; ++i) f.add(monomials[i], Rational(c_[i]));
  return f;
}

std::string CubicForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < 10; ++i) {
    const Integer& c = c_[i];
    if (sgn(c) == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1) {
      os << mag;
      wrote = true;
    }
    const char* names = "XYZ";
    for (int v = 0; v < 3; ++v) {
      const int e = monomials[i][v];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << names[v];
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

bool contains(const CubicForm& f, const ProjPoint& p) { return sgn(f.evaluate(p)) == 0; }

std::vector<CubicForm> fit_cubics(std::span<const ProjPoint> points) {
  using Row = std::array<Integer, 10>;
  std::vector<Row> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back(monomial_row(p));

  auto make_primitive = [](Row& r) {
    Integer g = 0;
    for (const auto& c : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1) {
      for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
  };

  // Fraction-free reduction to reduced row echelon form over the integers.
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < 10 && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    make_primitive(rows[rank]);
    const Row& pr = rows[rank];
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == rank || sgn(rows[k][col]) == 0) continue;
      const Integer a = pr[col];
      const Integer b = rows[k][col];
      for (int c = 0; c < 10; ++c) rows[k][c] = rows[k][c] * a - pr[c] * b;
      make_primitive(rows[k]);
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(10, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  Integer lcm = 1;
  for (std::size_t r = 0; r < rank; ++r) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rows[r][pivot_col[r]].get_mpz_t());
  }

  std::vector<CubicForm> basis;
  for (int f = 0; f < 10; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Row v;
    for (auto& c : v) c = 0;
    v[f] = lcm;
    for (std::size_t r = 0; r < rank; ++r) {
      const Integer& p = rows[r][pivot_col[r]];
      v[pivot_col[r]] = -rows[r][f] * (lcm / p);
    }
    basis.emplace_back(v);
  }
  return basis;
}

std::optional<CubicForm> on_common_cubic(std::span<const ProjPoint> points) {
  auto basis = fit_cubics(points);
  if (basis.empty()) return std::nullopt;
  return basis.front();
}

bool line_divides(const CubicForm& f, const ProjLine& l) {
  return f.as_form().divide_by(l).has_value();
}

Classification classify_with_candidates(const CubicForm& f, std::span<const ProjLine> candidates) {
  Classification out{CubicClass::no_candidate_factor, {}};
  TernaryForm rest = f.as_form();
  bool progress = true;
  while (progress && rest.degree() > 0) {
    progress = false;
    for (const auto& l : candidates) {
      if (auto q = rest.divide_by(l)) {
        out.line_factors.push_back(l);
        rest = std::move(*q);
        progress = true;
        break;
      }
    }
  }
  if (rest.degree() == 1) {
    // The cofactor of two lines is itself a line.
    std::array<Rational, 3> c{rest.coeff({1, 0, 0}), rest.coeff({0, 1, 0}), rest.coeff({0, 0, 1})};
    out.line_factors.emplace_back(clear_denominators(c));
  }
  switch (out.line_factors.size()) {
    case 0: out.kind = CubicClass::no_candidate_factor; break;
    case 1: out.kind = CubicClass::line_plus_conic; break;
    default: out.kind = CubicClass::three_lines; break;
  }
  return out;
}

std::string to_string(CubicClass c) {
  switch (c) {
    case CubicClass::three_lines: return "three-lines";
    case CubicClass::line_plus_conic: return "line-plus-conic";
    case CubicClass::no_candidate_factor: return "no-candidate-factor";
  }
  return "?";
}

}  // namespace orchard
