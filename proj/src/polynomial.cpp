#include "mitosiskit/polynomial.hpp"

#include "mitosiskit/errors.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mitosiskit {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(nvars, e, 1);
}

MultiPoly MultiPoly::monomial(int nvars, Exponents e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("exponent size mismatch");
  MultiPoly p(nvars);
  p.add_term(e, c);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent size mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
  MultiPoly out(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

Rational MultiPoly::eval(const Vec& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("eval point size mismatch");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point(static_cast<Eigen::Index>(i));
    }
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("derivative index out of range");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Exponents e2 = e;
    e2[static_cast<std::size_t>(var)] -= 1;
    out.add_term(e2, c * k);
  }
  return out;
}

MultiPoly MultiPoly::derivative(const Exponents& order) const {
  if (static_cast<int>(order.size()) != nvars_) throw std::invalid_argument("order size mismatch");
  MultiPoly out = *this;
  for (int v = 0; v < nvars_; ++v) {
    for (int k = 0; k < order[static_cast<std::size_t>(v)]; ++k) out = out.derivative(v);
  }
  return out;
}

int MultiPoly::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    (void)c;
    const int d = std::accumulate(e.begin(), e.end(), 0);
    if (d > deg) deg = d;
  }
  return deg;
}

bool MultiPoly::is_homogeneous() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    (void)c;
    const int d = std::accumulate(e.begin(), e.end(), 0);
    if (deg == -1) deg = d;
    if (d != deg) return false;
  }
  return true;
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (degree() != 0) throw std::logic_error("constant_value of non-constant polynomial");
  return terms_.begin()->second;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& g) const {
  if (g.nvars() != nvars_) throw std::invalid_argument("substitute nvars mismatch");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents e2 = e;
    const int k = e2[static_cast<std::size_t>(var)];
    e2[static_cast<std::size_t>(var)] = 0;
    MultiPoly term = monomial(nvars_, e2, c);
    for (int i = 0; i < k; ++i) term = term * g;
    out = out + term;
  }
  return out;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool any_var = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) vars << "*";
      if (i < names.size()) {
        vars << names[i];
      } else {
        vars << "x" << (i + 1);
      }
      if (e[i] > 1) vars << "^" << e[i];
      any_var = true;
    }
    if (!any_var) {
      os << rational_to_string(a);
    } else if (a == 1) {
      os << vars.str();
    } else {
      os << rational_to_string(a) << "*" << vars.str();
    }
  }
  return os.str();
}

std::vector<MultiPoly::Exponents> homogeneous_exponents(int nvars, int degree) {
  std::vector<MultiPoly::Exponents> out;
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  MultiPoly::Exponents cur(static_cast<std::size_t>(nvars), 0);
  // Ascending lexicographic order, matching how the term map iterates.
  auto rec = [&](auto&& self, int pos, int budget) -> void {
    if (pos == nvars - 1) {
      cur[static_cast<std::size_t>(pos)] = budget;
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= budget; ++k) {
      cur[static_cast<std::size_t>(pos)] = k;
      self(self, pos + 1, budget - k);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

MultiPoly interpolate_homogeneous(int nvars, int degree, const std::vector<Vec>& points,
                                  const std::vector<Rational>& values) {
  if (points.size() != values.size()) throw std::invalid_argument("points/values size mismatch");
  const std::vector<MultiPoly::Exponents> monos = homogeneous_exponents(nvars, degree);
  const Eigen::Index m = static_cast<Eigen::Index>(monos.size());
  const Eigen::Index rows = static_cast<Eigen::Index>(points.size());
  Mat a(rows, m);
  Vec b(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Vec& p = points[static_cast<std::size_t>(r)];
    if (p.size() != nvars) throw std::invalid_argument("interpolation point size mismatch");
    for (Eigen::Index j = 0; j < m; ++j) {
      Rational t = 1;
      const auto& e = monos[static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (int k = 0; k < e[i]; ++k) t *= p(static_cast<Eigen::Index>(i));
      }
      a(r, j) = t;
    }
    b(r) = values[static_cast<std::size_t>(r)];
  }
  if (rank_of(a) != m) {
    throw InterpolationRankDeficient("rank " + std::to_string(rank_of(a)) + " of " +
                                     std::to_string(m) + " monomials at degree " +
                                     std::to_string(degree));
  }
  const std::optional<Vec> coeffs = solve_exact(a, b);
  if (!coeffs) {
    throw std::logic_error("interpolate_homogeneous: inconsistent samples for a homogeneous fit");
  }
  MultiPoly out(nvars);
  for (Eigen::Index j = 0; j < m; ++j) {
    out.add_term(monos[static_cast<std::size_t>(j)], (*coeffs)(j));
  }
  return out;
}

}  // namespace mitosiskit
