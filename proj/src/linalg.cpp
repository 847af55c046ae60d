#include "mitosiskit/linalg.hpp"

#include <stdexcept>

namespace mitosiskit {

Eigen::Index rank_of(const Mat& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return Eigen::FullPivLU<Mat>(a).rank();
}

Rational det_of(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det of non-square matrix");
  if (a.rows() == 0) return 1;
  return Eigen::FullPivLU<Mat>(a).determinant();
}

std::optional<Vec> solve_exact(const Mat& a, const Vec& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_exact: size mismatch");
  if (a.cols() == 0) {
    if (b.isZero()) return Vec(0);
    return std::nullopt;
  }
  Eigen::FullPivLU<Mat> lu(a);
  Vec x = lu.solve(b);
  if ((a * x - b).isZero()) return x;
  return std::nullopt;
}

Mat kernel_of(const Mat& a) {
  if (a.cols() == 0) return Mat(0, 0);
  Eigen::FullPivLU<Mat> lu(a);
  const Eigen::Index k = lu.dimensionOfKernel();
  if (k == 0) return Mat(a.cols(), 0);
  Mat ker = lu.kernel();
  return ker.leftCols(k);
}

IMat integer_kernel(IMat c) {
  using boost::multiprecision::gcd;
  const Eigen::Index k = c.cols();
  IMat u = IMat::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) u(i, i) = 1;

  std::vector<Eigen::Index> free_cols;
  free_cols.reserve(static_cast<std::size_t>(k));
  for (Eigen::Index j = 0; j < k; ++j) free_cols.push_back(j);

  auto ext_gcd = [](Integer a, Integer b, Integer& x, Integer& y) {
    // Returns g = gcd(a, b) with x*a + y*b = g.
    Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
      Integer q = a / b;  // truncated division is fine for the invariant
      Integer r = a - q * b;
      Integer x2 = x0 - q * x1;
      Integer y2 = y0 - q * y1;
      a = b; b = r;
      x0 = x1; x1 = x2;
      y0 = y1; y1 = y2;
    }
    x = x0; y = y0;
    Integer g = a;
    if (g < 0) { g = -g; x = -x; y = -y; }
    return g;
  };

  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    // Collect free columns with a nonzero entry in row i.
    std::vector<std::size_t> hot;
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
      if (c(i, free_cols[t]) != 0) hot.push_back(t);
    }
    while (hot.size() > 1) {
      const Eigen::Index p = free_cols[hot[hot.size() - 2]];
      const Eigen::Index q = free_cols[hot[hot.size() - 1]];
      const Integer a = c(i, p), b = c(i, q);
      Integer x, y;
      const Integer g = ext_gcd(a, b, x, y);
      const Integer ag = a / g, bg = b / g;
      // Unimodular column operation: det [[x, -bg], [y, ag]] = x*ag + y*bg = 1.
      for (Eigen::Index r = 0; r < c.rows(); ++r) {
        const Integer cp = c(r, p), cq = c(r, q);
        c(r, p) = x * cp + y * cq;
        c(r, q) = -bg * cp + ag * cq;
      }
      for (Eigen::Index r = 0; r < k; ++r) {
        const Integer up = u(r, p), uq = u(r, q);
        u(r, p) = x * up + y * uq;
        u(r, q) = -bg * up + ag * uq;
      }
      hot.pop_back();
    }
    if (hot.size() == 1) {
      free_cols.erase(free_cols.begin() + static_cast<std::ptrdiff_t>(hot[0]));
    }
  }

  IMat ker(k, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    ker.col(static_cast<Eigen::Index>(t)) = u.col(free_cols[t]);
  }
  return ker;
}

IVec primitive_vector(const Vec& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::gcd;
  using boost::multiprecision::numerator;
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm_integer(l, denominator(v(i)));
  if (l == 0) l = 1;
  IVec w(v.size());
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    w(i) = numerator(v(i)) * (l / denominator(v(i)));
    g = gcd(g, w(i));
  }
  if (g > 1) {
    for (Eigen::Index i = 0; i < v.size(); ++i) w(i) /= g;
  }
  return w;
}

Mat saturated_lattice_basis(const Mat& span_cols) {
  const Eigen::Index k = span_cols.rows();
  const Eigen::Index r = rank_of(span_cols);
  if (r == 0) return Mat(k, 0);
  // V = col(span). V is cut out by the rows of C = basis of ker(span^T).
  Mat cker = kernel_of(span_cols.transpose());  // k x (k - r)
  IMat c(cker.cols(), k);
  for (Eigen::Index j = 0; j < cker.cols(); ++j) {
    IVec row = primitive_vector(cker.col(j));
    for (Eigen::Index t = 0; t < k; ++t) c(j, t) = row(t);
  }
  IMat ker = (cker.cols() == 0) ? [&] {
    IMat id(k, k);
    id.setZero();
    for (Eigen::Index i = 0; i < k; ++i) id(i, i) = 1;
    return id;
  }() : integer_kernel(c);
  Mat basis(k, ker.cols());
  for (Eigen::Index j = 0; j < ker.cols(); ++j) {
    for (Eigen::Index t = 0; t < k; ++t) basis(t, j) = Rational(ker(t, j));
  }
  if (rank_of(basis) != r || basis.cols() != r) {
    throw std::logic_error("saturated_lattice_basis: rank mismatch");
  }
  return basis;
}

Mat identity_mat(Eigen::Index d) {
  Mat m = Mat::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m(i, i) = 1;
  return m;
}

Vec to_vec(const std::vector<Rational>& v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

std::vector<Rational> from_vec(const Vec& v) {
  std::vector<Rational> out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = v(i);
  return out;
}

}  // namespace mitosiskit
