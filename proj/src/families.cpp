#include "mitosiskit/families.hpp"

#include "mitosiskit/errors.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace mitosiskit {

namespace {

Vec zero_vec(Eigen::Index d) {
  Vec v(d);
  v.setZero();
  return v;
}

Vec unit_vec(Eigen::Index d, Eigen::Index i) {
  Vec v = zero_vec(d);
  v(i) = 1;
  return v;
}

int add_facet(PolytopeFamily& fam, Vec normal, Vec off, std::string name) {
  fam.facets.push_back({std::move(normal), std::move(off), std::move(name)});
  return static_cast<int>(fam.facets.size()) - 1;
}

std::string sub2(const std::string& base, int i, int j) {
  std::ostringstream os;
  os << base << "[" << i << "][" << j << "]";
  return os.str();
}

// Gelfand-Zetlin family of type A: triangular arrays z^k_i (k = 1..n-1,
// i = 1..n-k) interlacing the weight row z^0 = lambda.
PolytopeFamily build_gz_a(int n) {
  if (n < 2) throw std::invalid_argument("gz-a requires n >= 2");
  PolytopeFamily fam;
  fam.kind = FamilyKind::GZ_A;
  fam.n = n;
  fam.nparams = n;
  const int d = n * (n - 1) / 2;
  fam.dim = d;
  fam.display_name = "gz-a(" + std::to_string(n) + ")";

  auto zi = [n](int k, int i) {
    int off = 0;
    for (int r = 1; r < k; ++r) off += n - r;
    return off + (i - 1);
  };

  std::vector<int> lower_of(d, -1);
  for (int k = 1; k <= n - 1; ++k) {
    for (int i = 1; i <= n - k; ++i) {
      const int c = zi(k, i);
      Vec nu = unit_vec(d, c);
      Vec ou = zero_vec(n);
      std::string upper_name;
      if (k == 1) {
        ou(i - 1) = 1;
        upper_name = sub2("z", k, i) + " <= l[" + std::to_string(i) + "]";
      } else {
        nu(zi(k - 1, i)) = -1;
        upper_name = sub2("z", k, i) + " <= " + sub2("z", k - 1, i);
      }
      add_facet(fam, std::move(nu), std::move(ou), std::move(upper_name));

      Vec nl = zero_vec(d);
      nl(c) = -1;
      Vec ol = zero_vec(n);
      std::string lower_name;
      if (k == 1) {
        ol(i) = -1;
        lower_name = sub2("z", k, i) + " >= l[" + std::to_string(i + 1) + "]";
      } else {
        nl(zi(k - 1, i + 1)) = 1;
        lower_name = sub2("z", k, i) + " >= " + sub2("z", k - 1, i + 1);
      }
      lower_of[c] = add_facet(fam, std::move(nl), std::move(ol), std::move(lower_name));
    }
  }
  fam.lattice = AffineLattice::standard(d);

  fam.vertex_map = Mat::Zero(d, n);
  for (int k = 1; k <= n - 1; ++k)
    for (int i = 1; i <= n - k; ++i) fam.vertex_map(zi(k, i), k + i - 1) = 1;

  // Tangent cone at the distinguished vertex: exactly the lower facets.
  std::vector<int> blocks;
  for (int b = 1; b <= n - 1; ++b) blocks.push_back(n - b);
  std::vector<FacetTag> tags(d);
  fam.cone_to_family.resize(d);
  fam.cone_cells.resize(d);
  for (int k = 1; k <= n - 1; ++k) {
    for (int i = 1; i <= n - k; ++i) {
      const int c = zi(k, i);
      tags[c] = (k == 1) ? FacetTag{0, 0, 1, i, 1} : FacetTag{k - 1, i + 1, k, i, 1};
      fam.cone_to_family[c] = lower_of[c];
      fam.cone_cells[c] = {k, k + i};
    }
  }
  fam.cone = BlockCone(blocks, std::move(tags));
  fam.cell_rows = n;
  fam.cell_cols = n;

  std::vector<int> lab(n - 1);
  for (int j = 1; j <= n - 1; ++j) lab[j - 1] = n - j;
  fam.weyl = RootSystem(RootSystemType::A, n, lab);
  fam.weight_map = Mat::Identity(n, n);
  for (int b = 1; b <= n - 1; ++b)
    for (int j = b; j >= 1; --j) fam.word_pattern.push_back(j);
  for (int i = 1; i <= n; ++i) fam.param_names.push_back("l" + std::to_string(i));
  return fam;
}

// Symplectic/odd-orthogonal Gelfand-Zetlin family: interleaved rows
// x^1 (n), y^1 (n-1), x^2 (n-1), ..., x^n (1) with the row above x^1 pinned
// to lambda. The mitosis cone is the degree cone in its own coordinates,
// realized on polytope facets through the cell table.
PolytopeFamily build_sgz_like(int n, FamilyKind kind) {
  if (n < 2) throw std::invalid_argument("family requires n >= 2");
  PolytopeFamily fam;
  fam.kind = kind;
  fam.n = n;
  fam.nparams = n;
  const int d = n * n;
  fam.dim = d;
  const bool cone_only = kind == FamilyKind::STRING_C;
  fam.display_name = (kind == FamilyKind::SGZ      ? "sgz("
                      : kind == FamilyKind::OGZ    ? "ogz("
                                                   : "string-c(") +
                     std::to_string(n) + ")";

  std::vector<int> xo(n + 1, 0), yo(n + 1, 0);
  {
    int p = 0;
    for (int i = 1; i <= n; ++i) {
      xo[i] = p;
      p += n - i + 1;
      if (i < n) {
        yo[i] = p;
        p += n - i;
      }
    }
  }
  auto xi = [&xo](int i, int j) { return xo[i] + j - 1; };
  auto yi = [&yo](int i, int j) { return yo[i] + j - 1; };

  std::map<std::pair<int, int>, int> x_upper, y_lower;
  if (!cone_only) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n - i + 1; ++j) {
        Vec nu = unit_vec(d, xi(i, j));
        Vec ou = zero_vec(n);
        std::string uname;
        if (i == 1) {
          ou(j - 1) = 1;
          uname = sub2("x", i, j) + " <= l[" + std::to_string(j) + "]";
        } else {
          nu(yi(i - 1, j)) = -1;
          uname = sub2("x", i, j) + " <= " + sub2("y", i - 1, j);
        }
        x_upper[{i, j}] = add_facet(fam, std::move(nu), std::move(ou), std::move(uname));

        Vec nl = zero_vec(d);
        nl(xi(i, j)) = -1;
        Vec ol = zero_vec(n);
        std::string lname;
        if (j <= n - i) {
          if (i == 1) {
            ol(j) = -1;
            lname = sub2("x", i, j) + " >= l[" + std::to_string(j + 1) + "]";
          } else {
            nl(yi(i - 1, j + 1)) = 1;
            lname = sub2("x", i, j) + " >= " + sub2("y", i - 1, j + 1);
          }
        } else {
          lname = sub2("x", i, j) + " >= 0";
        }
        add_facet(fam, std::move(nl), std::move(ol), std::move(lname));
      }
      if (i < n) {
        for (int j = 1; j <= n - i; ++j) {
          Vec nu = unit_vec(d, yi(i, j));
          nu(xi(i, j)) = -1;
          add_facet(fam, std::move(nu), zero_vec(n), sub2("y", i, j) + " <= " + sub2("x", i, j));
          Vec nl = zero_vec(d);
          nl(yi(i, j)) = -1;
          nl(xi(i, j + 1)) = 1;
          y_lower[{i, j}] =
              add_facet(fam, std::move(nl), zero_vec(n), sub2("y", i, j) + " >= " + sub2("x", i, j + 1));
        }
      }
    }
  }

  if (kind == FamilyKind::OGZ) {
    Mat basis = Mat::Identity(d, d);
    for (int i = 1; i <= n; ++i) basis(xi(i, n - i + 1), xi(i, n - i + 1)) = Rational(1, 2);
    fam.lattice = AffineLattice::from_basis(basis);
  } else {
    fam.lattice = AffineLattice::standard(d);
  }

  fam.vertex_map = Mat::Zero(d, n);
  if (!cone_only) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n - i + 1; ++j) fam.vertex_map(xi(i, j), i + j - 2) = 1;
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - i; ++j) fam.vertex_map(yi(i, j), i + j - 1) = 1;
  }

  // Degree cone: blocks (n, 2(n-1), ..., 2); chain(i) strings together the
  // block coordinates x^i_2, x^{i-1}_4, ..., x^1_i, ..., x^i_1 with
  // 0 <= e_1 <= e_2 <= ... ; the k-th inequality of chain(i) carries the
  // cell (n-i+k, i).
  std::vector<int> blocks;
  blocks.push_back(n);
  for (int b = 2; b <= n; ++b) blocks.push_back(2 * (n - b + 1));
  std::vector<FacetTag> tags;
  for (int i = 1; i <= n; ++i) {
    std::vector<std::pair<int, int>> chain;
    if (i == 1) {
      chain = {{1, 1}};
    } else {
      for (int b = i; b >= 2; --b) chain.push_back({b, 2 * (i - b + 1)});
      chain.push_back({1, i});
      for (int b = 2; b <= i; ++b) chain.push_back({b, 2 * (i - b) + 1});
    }
    for (int k = 1; k <= static_cast<int>(chain.size()); ++k) {
      FacetTag t;
      if (k == 1)
        t = {0, 0, chain[0].first, chain[0].second, 1};
      else
        t = {chain[k - 2].first, chain[k - 2].second, chain[k - 1].first, chain[k - 1].second, 1};
      tags.push_back(t);
      const int r = n - i + k, c = i;
      fam.cone_cells.push_back({r, c});
      if (!cone_only) {
        const int si = n + 1 - c;
        int famidx;
        if (r <= n)
          famidx = x_upper.at({si, r - n + c});
        else
          famidx = y_lower.at({si, n + c - r});
        fam.cone_to_family.push_back(famidx);
      }
    }
  }
  fam.cone = BlockCone(std::move(blocks), std::move(tags));
  fam.cell_rows = 2 * n - 1;
  fam.cell_cols = n;

  std::vector<int> lab(n);
  for (int j = 1; j <= n; ++j) lab[j - 1] = n + 1 - j;
  fam.weyl =
      RootSystem(kind == FamilyKind::OGZ ? RootSystemType::B : RootSystemType::C, n, lab);
  fam.weight_map = Mat::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    for (int j = n - k + 1; j >= 1; --j) fam.word_pattern.push_back(j);
    for (int j = 2; j <= n - k + 1; ++j) fam.word_pattern.push_back(j);
  }
  for (int i = 1; i <= n; ++i) fam.param_names.push_back("l" + std::to_string(i));
  return fam;
}


// Dual defining-operator family for C_2: coordinates (x11, x21, x12, x22).
PolytopeFamily build_ddo_c2() {
  PolytopeFamily fam;
  fam.kind = FamilyKind::DDO_C2;
  fam.n = 2;
  fam.nparams = 2;
  fam.dim = 4;
  fam.display_name = "ddo-c2";
  const int X11 = 0, X21 = 1, X12 = 2, X22 = 3;
  auto nrm = [&](std::initializer_list<std::pair<int, Rational>> terms) {
    Vec v = zero_vec(4);
    for (auto& [i, c] : terms) v(i) = c;
    return v;
  };
  auto off = [&](std::initializer_list<std::pair<int, Rational>> terms) {
    Vec v = zero_vec(2);
    for (auto& [i, c] : terms) v(i) = c;
    return v;
  };
  add_facet(fam, nrm({{X11, -1}}), off({}), "x[1][1] >= 0");
  add_facet(fam, nrm({{X11, 1}}), off({{0, 1}}), "x[1][1] <= w1");
  add_facet(fam, nrm({{X21, 1}, {X11, -1}}), off({{1, 1}}), "x[2][1] <= x[1][1] + w2");
  add_facet(fam, nrm({{X12, 1}, {X21, -2}}), off({}), "x[1][2] <= 2 x[2][1]");
  add_facet(fam, nrm({{X12, 1}, {X21, -1}}), off({{1, 1}}), "x[1][2] <= x[2][1] + w2");
  add_facet(fam, nrm({{X22, -1}}), off({}), "x[2][2] >= 0");
  add_facet(fam, nrm({{X22, 1}}), off({{1, 1}}), "x[2][2] <= w2");
  add_facet(fam, nrm({{X22, 1}, {X12, Rational(-1, 2)}}), off({}), "x[2][2] <= x[1][2]/2");

  fam.lattice = AffineLattice::standard(4);
  fam.vertex_map = Mat::Zero(4, 2);

  fam.cone = BlockCone({2, 2}, {FacetTag{0, 0, 1, 1, 1}, FacetTag{1, 2, 2, 1, 2},
                                FacetTag{0, 0, 2, 2, 1}, FacetTag{2, 2, 1, 2, Rational(1, 2)}});
  fam.cone_to_family = {0, 3, 5, 7};
  fam.cone_cells = {{2, 1}, {3, 2}, {1, 2}, {2, 2}};
  fam.cell_rows = 3;
  fam.cell_cols = 2;

  fam.weyl = RootSystem(RootSystemType::C, 2);
  fam.weight_map = Mat::Zero(2, 2);
  fam.weight_map(0, 0) = 1;
  fam.weight_map(0, 1) = 1;
  fam.weight_map(1, 1) = 1;
  fam.word_pattern = {1, 2, 1, 2};
  fam.param_names = {"w1", "w2"};
  return fam;
}

// Dual defining-operator family for C_3: coordinates
// (x11, x21, x31, x12, x22, x32, x13, x23, x33). The cone has 10 facets in
// dimension 9 and is not simplicial; no cell codec exists for it.
PolytopeFamily build_ddo_c3() {
  PolytopeFamily fam;
  fam.kind = FamilyKind::DDO_C3;
  fam.n = 3;
  fam.nparams = 3;
  fam.dim = 9;
  fam.display_name = "ddo-c3";
  enum { X11, X21, X31, X12, X22, X32, X13, X23, X33 };
  auto nrm = [&](std::initializer_list<std::pair<int, Rational>> terms) {
    Vec v = zero_vec(9);
    for (auto& [i, c] : terms) v(i) = c;
    return v;
  };
  auto off = [&](std::initializer_list<std::pair<int, Rational>> terms) {
    Vec v = zero_vec(3);
    for (auto& [i, c] : terms) v(i) = c;
    return v;
  };
  add_facet(fam, nrm({{X11, -1}}), off({}), "x[1][1] >= 0");
  add_facet(fam, nrm({{X11, 1}}), off({{0, 1}}), "x[1][1] <= w1");
  add_facet(fam, nrm({{X21, 1}, {X11, -1}}), off({{1, 1}}), "x[2][1] <= x[1][1] + w2");
  add_facet(fam, nrm({{X31, 1}, {X21, -1}}), off({{2, 1}}), "x[3][1] <= x[2][1] + w3");
  add_facet(fam, nrm({{X12, -1}}), off({}), "x[1][2] >= 0");
  add_facet(fam, nrm({{X12, 1}, {X21, -1}}), off({}), "x[1][2] <= x[2][1]");
  add_facet(fam, nrm({{X12, 1}}), off({{1, 1}}), "x[1][2] <= w2");
  add_facet(fam, nrm({{X22, 1}, {X12, -1}, {X31, -1}}), off({{2, 1}}),
            "x[2][2] <= x[1][2] + x[3][1] + w3");
  add_facet(fam, nrm({{X22, 1}, {X31, -2}}), off({}), "x[2][2] <= 2 x[3][1]");
  add_facet(fam, nrm({{X32, 1}, {X12, -1}}), off({{2, 1}}), "x[3][2] <= x[1][2] + w3");
  add_facet(fam, nrm({{X32, 1}, {X22, Rational(-1, 2)}}), off({}), "x[3][2] <= x[2][2]/2");
  add_facet(fam, nrm({{X13, 1}, {X22, -1}}), off({}), "x[1][3] <= x[2][2]");
  add_facet(fam, nrm({{X13, 1}, {X31, -1}}), off({{2, 1}}), "x[1][3] <= x[3][1] + w3");
  add_facet(fam, nrm({{X13, 1}, {X22, -1}, {X32, 1}}), off({{2, 1}}),
            "x[1][3] <= x[2][2] - x[3][2] + w3");
  add_facet(fam, nrm({{X23, 1}, {X13, -1}}), off({}), "x[2][3] <= x[1][3]");
  add_facet(fam, nrm({{X23, 1}, {X32, -1}}), off({{2, 1}}), "x[2][3] <= x[3][2] + w3");
  add_facet(fam, nrm({{X23, 1}, {X32, -2}}), off({}), "x[2][3] <= 2 x[3][2]");
  add_facet(fam, nrm({{X33, -1}}), off({}), "x[3][3] >= 0");
  add_facet(fam, nrm({{X33, 1}, {X23, Rational(-1, 2)}}), off({}), "x[3][3] <= x[2][3]/2");
  add_facet(fam, nrm({{X33, 1}}), off({{2, 1}}), "x[3][3] <= w3");

  fam.lattice = AffineLattice::standard(9);
  fam.vertex_map = Mat::Zero(9, 3);

  fam.cone = BlockCone(
      {3, 3, 3},
      {FacetTag{0, 0, 1, 1, 1}, FacetTag{0, 0, 1, 2, 1}, FacetTag{1, 2, 2, 1, 1},
       FacetTag{2, 2, 3, 1, 2}, FacetTag{3, 2, 2, 2, Rational(1, 2)}, FacetTag{1, 3, 2, 2, 1},
       FacetTag{2, 3, 1, 3, 1}, FacetTag{2, 3, 3, 2, 2}, FacetTag{0, 0, 3, 3, 1},
       FacetTag{3, 3, 2, 3, Rational(1, 2)}});
  fam.cone_to_family = {0, 4, 5, 8, 10, 11, 14, 16, 17, 18};
  fam.cell_rows = 0;
  fam.cell_cols = 0;

  fam.weyl = RootSystem(RootSystemType::C, 3);
  fam.weight_map = Mat::Zero(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int k = i; k < 3; ++k) fam.weight_map(i, k) = 1;
  fam.param_names = {"w1", "w2", "w3"};
  return fam;
}

// First `need` integer tuples with lows[t] <= x[t] <= highs[t], ordered by
// (sum, lex).
std::vector<std::vector<int>> graded_tuples(const std::vector<int>& lows,
                                            const std::vector<int>& highs, int need) {
  const int m = static_cast<int>(lows.size());
  int lo_sum = 0, hi_sum = 0;
  for (int t = 0; t < m; ++t) {
    lo_sum += lows[t];
    hi_sum += highs[t];
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m);
  std::vector<int> lo_suffix(m + 1, 0), hi_suffix(m + 1, 0);
  for (int t = m - 1; t >= 0; --t) {
    lo_suffix[t] = lo_suffix[t + 1] + lows[t];
    hi_suffix[t] = hi_suffix[t + 1] + highs[t];
  }
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (static_cast<int>(out.size()) >= need) return;
    if (pos == m) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    for (int v = lows[pos]; v <= highs[pos]; ++v) {
      const int r = rem - v;
      if (r < lo_suffix[pos + 1] || r > hi_suffix[pos + 1]) continue;
      cur[pos] = v;
      rec(pos + 1, r);
      if (static_cast<int>(out.size()) >= need) return;
    }
  };
  for (int t = lo_sum; t <= hi_sum && static_cast<int>(out.size()) < need; ++t) rec(0, t);
  return out;
}

}  // namespace

std::string family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::GZ_A:
      return "gz-a";
    case FamilyKind::SGZ:
      return "sgz";
    case FamilyKind::OGZ:
      return "ogz";
    case FamilyKind::DDO_C2:
      return "ddo-c2";
    case FamilyKind::DDO_C3:
      return "ddo-c3";
    case FamilyKind::STRING_C:
      return "string-c";
    case FamilyKind::OFFSET:
      return "offset";
  }
  throw std::logic_error("unknown family kind");
}

FamilyKind family_kind_from_name(const std::string& name) {
  if (name == "gz-a") return FamilyKind::GZ_A;
  if (name == "sgz") return FamilyKind::SGZ;
  if (name == "ogz") return FamilyKind::OGZ;
  if (name == "ddo-c2") return FamilyKind::DDO_C2;
  if (name == "ddo-c3") return FamilyKind::DDO_C3;
  if (name == "string-c") return FamilyKind::STRING_C;
  throw std::invalid_argument("unknown family name: " + name);
}

const BlockCone& PolytopeFamily::vertex_cone() const {
  if (!cone) throw NoConeStructure(display_name + " has no distinguished vertex cone");
  return *cone;
}

const RootSystem& PolytopeFamily::root_system() const {
  if (!weyl) throw UnsupportedKind(display_name + " has no root system attached");
  return *weyl;
}

bool PolytopeFamily::cell_fillable(int r, int c) const {
  if (kind == FamilyKind::GZ_A) return r >= 1 && c <= cell_cols && r < c;
  if (kind == FamilyKind::SGZ || kind == FamilyKind::OGZ || kind == FamilyKind::STRING_C ||
      kind == FamilyKind::DDO_C2)
    return c >= 1 && c <= cell_cols && r > n - c && r < n + c;
  return false;
}

bool PolytopeFamily::has_cell_codec() const { return !cone_cells.empty(); }

std::vector<int> PolytopeFamily::ops_for_word(const std::vector<int>& word) const {
  const int r = weyl ? weyl->rank() : 0;
  for (int j : word)
    if (j < 1 || j > r) throw std::invalid_argument("word letter out of range");
  std::vector<int> ops;
  switch (kind) {
    case FamilyKind::GZ_A:
      for (int j : word) ops.push_back(n - j);
      return ops;
    case FamilyKind::DDO_C2:
    case FamilyKind::DDO_C3:
      return word;
    case FamilyKind::SGZ:
    case FamilyKind::OGZ:
    case FamilyKind::STRING_C:
      ops.assign(word.rbegin(), word.rend());
      return ops;
    default:
      throw UnsupportedKind(display_name + " has no mitosis operator calculus");
  }
}

std::vector<int> PolytopeFamily::ops_to_blocks(const std::vector<int>& ops) const {
  const BlockCone& c = vertex_cone();
  std::vector<int> blocks;
  for (int o : ops) {
    const int b = (kind == FamilyKind::SGZ || kind == FamilyKind::OGZ ||
                   kind == FamilyKind::STRING_C)
                      ? n + 1 - o
                      : o;
    if (b < 1 || b > c.num_blocks()) throw std::invalid_argument("operator index out of range");
    blocks.push_back(b);
  }
  return blocks;
}

ConeFace PolytopeFamily::distinguished_vertex_face() const {
  const BlockCone& c = vertex_cone();
  if (c.num_facets() != c.dim())
    throw NonMinimalFaceSet(display_name +
                            ": vertex cone is not simplicial; pass an explicit facet set");
  std::vector<int> all(c.num_facets());
  for (int f = 0; f < c.num_facets(); ++f) all[f] = f;
  return make_cone_face(c, all);
}

std::vector<int> PolytopeFamily::realize_active_set(const ConeFace& f) const {
  if (cone_to_family.empty())
    throw UnsupportedKind(display_name + " has no polytope realization of cone faces");
  std::vector<int> out;
  for (int idx : f.set) out.push_back(cone_to_family.at(idx));
  std::sort(out.begin(), out.end());
  return out;
}

bool PolytopeFamily::strictly_valid(const Vec& params) const {
  if (params.size() != nparams) throw std::invalid_argument("parameter count mismatch");
  switch (kind) {
    case FamilyKind::GZ_A:
      for (int i = 0; i + 1 < nparams; ++i)
        if (!(params(i) > params(i + 1))) return false;
      return true;
    case FamilyKind::SGZ:
    case FamilyKind::OGZ:
      for (int i = 0; i + 1 < nparams; ++i)
        if (!(params(i) > params(i + 1))) return false;
      return params(nparams - 1) > 0;
    case FamilyKind::DDO_C2:
    case FamilyKind::DDO_C3:
    case FamilyKind::STRING_C:
      for (int i = 0; i < nparams; ++i)
        if (!(params(i) > 0)) return false;
      return true;
    case FamilyKind::OFFSET:
      return true;
  }
  return true;
}

Vec PolytopeFamily::reference_params() const {
  Vec p(nparams);
  switch (kind) {
    case FamilyKind::GZ_A:
      for (int i = 0; i < nparams; ++i) p(i) = nparams - 1 - i;
      return p;
    case FamilyKind::SGZ:
    case FamilyKind::OGZ:
      for (int i = 0; i < nparams; ++i) p(i) = nparams - i;
      return p;
    case FamilyKind::DDO_C2:
    case FamilyKind::DDO_C3:
    case FamilyKind::STRING_C:
      p.setOnes();
      return p;
    case FamilyKind::OFFSET:
      return fixed_reference;
  }
  p.setOnes();
  return p;
}

std::vector<Vec> PolytopeFamily::parameter_grid(int count, int offset) const {
  if (kind == FamilyKind::OFFSET) {
    if (offset + count > static_cast<int>(fixed_grid.size()))
      throw std::invalid_argument("offset grid exhausted");
    return {fixed_grid.begin() + offset, fixed_grid.begin() + offset + count};
  }
  const int K = dim + 2;
  std::vector<int> lows, highs;
  const bool anchored = kind == FamilyKind::GZ_A;
  const int gaps = anchored ? nparams - 1 : nparams;
  lows.assign(gaps, 1);
  highs.assign(gaps, K);
  if (anchored) {
    lows.push_back(0);
    highs.push_back(K);
  }
  auto tuples = graded_tuples(lows, highs, offset + count);
  if (static_cast<int>(tuples.size()) < offset + count)
    throw std::invalid_argument("parameter grid exhausted");
  std::vector<Vec> out;
  for (int t = offset; t < offset + count; ++t) {
    const auto& g = tuples[t];
    Vec p = zero_vec(nparams);
    if (kind == FamilyKind::DDO_C2 || kind == FamilyKind::DDO_C3 ||
        kind == FamilyKind::STRING_C) {
      for (int i = 0; i < nparams; ++i) p(i) = g[i];
    } else if (anchored) {
      const int a = g[gaps];
      for (int i = nparams - 1; i >= 0; --i)
        p(i) = (i == nparams - 1) ? Rational(a) : p(i + 1) + g[i];
    } else {
      for (int i = nparams - 1; i >= 0; --i)
        p(i) = (i == nparams - 1) ? Rational(g[i]) : p(i + 1) + g[i];
    }
    out.push_back(std::move(p));
  }
  return out;
}

PolytopeFamily build_family(FamilyKind kind, int n) {
  switch (kind) {
    case FamilyKind::GZ_A:
      return build_gz_a(n);
    case FamilyKind::SGZ:
    case FamilyKind::OGZ:
    case FamilyKind::STRING_C:
      return build_sgz_like(n, kind);
    case FamilyKind::DDO_C2:
      if (n != 2) throw std::invalid_argument("ddo-c2 is fixed at n = 2");
      return build_ddo_c2();
    case FamilyKind::DDO_C3:
      if (n != 3) throw std::invalid_argument("ddo-c3 is fixed at n = 3");
      return build_ddo_c3();
    case FamilyKind::OFFSET:
      throw std::invalid_argument("offset families are built with make_offset_family");
  }
  throw std::logic_error("unknown family kind");
}

PolytopeFamily make_offset_family(std::string name, const std::vector<Vec>& normals,
                                  const Vec& reference_offsets, std::vector<Vec> grid) {
  if (normals.empty()) throw std::invalid_argument("offset family needs facets");
  PolytopeFamily fam;
  fam.kind = FamilyKind::OFFSET;
  fam.n = 0;
  fam.dim = static_cast<int>(normals[0].size());
  fam.nparams = static_cast<int>(normals.size());
  fam.display_name = std::move(name);
  for (int f = 0; f < fam.nparams; ++f) {
    add_facet(fam, normals[f], unit_vec(fam.nparams, f), "facet " + std::to_string(f + 1));
  }
  fam.lattice = AffineLattice::standard(fam.dim);
  fam.vertex_map = Mat::Zero(fam.dim, fam.nparams);
  fam.weight_map = Mat::Identity(fam.nparams, fam.nparams);
  fam.fixed_grid = std::move(grid);
  fam.fixed_reference = reference_offsets;
  for (int f = 0; f < fam.nparams; ++f) fam.param_names.push_back("h" + std::to_string(f + 1));
  return fam;
}

PolytopeFamily make_trapezoid_family() {
  std::vector<Vec> normals(4, zero_vec(2));
  normals[0](0) = -1;
  normals[1](0) = -1;
  normals[1](1) = 1;
  normals[2](0) = 1;
  normals[3](1) = -1;
  Vec ref = zero_vec(4);
  ref(1) = 1;
  ref(2) = 1;
  std::vector<Vec> grid;
  for (int h1 = 0; h1 <= 1; ++h1)
    for (int h2 = 3; h2 <= 5; ++h2)
      for (int h3 = 3; h3 <= 5; ++h3)
        for (int h4 = 0; h4 <= 1; ++h4) {
          Vec h = zero_vec(4);
          h(0) = h1;
          h(1) = h2;
          h(2) = h3;
          h(3) = h4;
          grid.push_back(std::move(h));
        }
  return make_offset_family("trapezoid", normals, ref, std::move(grid));
}

Specialization specialize(const PolytopeFamily& fam, const Vec& params) {
  if (fam.kind == FamilyKind::STRING_C)
    throw UnsupportedKind(fam.display_name + " is a cone family without polytope members");
  if (params.size() != fam.nparams) throw std::invalid_argument("parameter count mismatch");
  std::vector<Facet> fs;
  fs.reserve(fam.facets.size());
  for (const auto& f : fam.facets)
    fs.push_back({f.normal, f.offset_coeffs.transpose().dot(params)});
  Specialization s{HPolytope(fam.dim, std::move(fs)), params, fam.vertex_map * params,
                   !fam.strictly_valid(params)};
  return s;
}

std::vector<std::pair<int, int>> face_cells(const PolytopeFamily& fam, const ConeFace& f) {
  if (!fam.has_cell_codec())
    throw UnsupportedKind(fam.display_name + " has no cell labeling of cone facets");
  std::vector<std::pair<int, int>> out;
  for (int idx : f.set) out.push_back(fam.cone_cells.at(idx));
  std::sort(out.begin(), out.end());
  return out;
}

ConeFace face_from_cells(const PolytopeFamily& fam,
                         const std::vector<std::pair<int, int>>& cells) {
  if (!fam.has_cell_codec())
    throw UnsupportedKind(fam.display_name + " has no cell labeling of cone facets");
  std::vector<int> set;
  for (const auto& cell : cells) {
    if (!fam.cell_fillable(cell.first, cell.second)) {
      std::ostringstream os;
      os << "cell (" << cell.first << "," << cell.second << ") lies outside the "
         << fam.display_name << " diagram";
      throw InvalidCell(os.str());
    }
    auto it = std::find(fam.cone_cells.begin(), fam.cone_cells.end(), cell);
    if (it == fam.cone_cells.end()) {
      std::ostringstream os;
      os << "cell (" << cell.first << "," << cell.second << ") has no facet";
      throw InvalidCell(os.str());
    }
    set.push_back(static_cast<int>(it - fam.cone_cells.begin()));
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return make_cone_face(fam.vertex_cone(), std::move(set));
}

std::string render_cells_text(const PolytopeFamily& fam,
                              const std::vector<std::pair<int, int>>& cells) {
  if (fam.cell_rows == 0) throw UnsupportedKind(fam.display_name + " has no cell diagram");
  std::ostringstream os;
  for (int r = 1; r <= fam.cell_rows; ++r) {
    for (int c = 1; c <= fam.cell_cols; ++c) {
      if (c > 1) os << ' ';
      if (!fam.cell_fillable(r, c))
        os << ' ';
      else if (std::find(cells.begin(), cells.end(), std::make_pair(r, c)) != cells.end())
        os << '+';
      else
        os << '.';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace mitosiskit
