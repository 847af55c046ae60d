#pragma once

#include "mitosiskit/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace mitosiskit {

enum class RootSystemType { A, B, C };

// Signed permutation in one-line notation: img[i-1] = w(i), values in
// {-n..-1, 1..n}. Type A elements keep all images positive.
struct SignedPerm {
  std::vector<int> img;

  static SignedPerm identity(int n);
  int n() const { return static_cast<int>(img.size()); }
  int apply(int i) const;  // w(-i) = -w(i)
  SignedPerm compose(const SignedPerm& o) const;  // (this o)(i) = this(o(i))
  SignedPerm inverse() const;
  Vec apply_to_vec(const Vec& x) const;  // permutation action on coordinates

  bool operator==(const SignedPerm& o) const { return img == o.img; }
  bool operator<(const SignedPerm& o) const { return img < o.img; }
  std::string to_string() const;
};

// Finite root system of type A/B/C realized in R^n with a configurable
// labeling of the simple reflections. For type A, n is the number of strands
// (rank n-1, weights in R^n); for B/C the rank is n.
//
// Coroot normalization (types B/C) follows the standard convention:
//   C_n: (e_i - e_j)v = e_i - e_j, (e_i + e_j)v = e_i + e_j, (2 e_i)v = e_i
//   B_n: (e_i - e_j)v = e_i - e_j, (e_i + e_j)v = e_i + e_j, (e_i)v = 2 e_i
class RootSystem {
 public:
  // label_to_std maps user simple-reflection labels (1-based) to standard
  // indices; empty means identity.
  RootSystem(RootSystemType t, int n, std::vector<int> label_to_std = {});

  RootSystemType type() const { return type_; }
  int ambient() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<int>& labeling() const { return label_to_std_; }

  SignedPerm simple_reflection_std(int k) const;   // 1 <= k <= rank
  SignedPerm simple_reflection(int user_label) const;
  SignedPerm element_of_word(const std::vector<int>& user_word) const;

  const std::vector<Vec>& positive_roots() const { return pos_roots_; }
  const std::vector<Vec>& positive_coroots() const { return pos_coroots_; }
  const std::vector<SignedPerm>& root_reflections() const { return reflections_; }

  int length(const SignedPerm& w) const;
  SignedPerm longest_element() const;

  // All elements grouped by length. Enumeration is limited to n <= 4
  // (throws RankTooLarge beyond).
  std::vector<std::vector<SignedPerm>> elements_by_length() const;

  // Degree of the flag subvariety indexed by w at the weight lambda:
  // deg(e) = 1, deg(w) = sum over positive roots beta with
  // l(w s_beta) = l(w) - 1 of <lambda, beta v> deg(w s_beta).
  Rational degree(const SignedPerm& w, const Vec& lambda) const;

  // Distinct reduced words of w occurring as subwords of the pattern
  // (user labels), sorted lexicographically. Throws NoAdmissibleWord if none.
  std::vector<std::vector<int>> reduced_subwords(const std::vector<int>& user_pattern,
                                                 const SignedPerm& w) const;

 private:
  RootSystemType type_;
  int n_;
  int rank_;
  std::vector<int> label_to_std_;
  std::vector<Vec> pos_roots_;
  std::vector<Vec> pos_coroots_;
  std::vector<SignedPerm> reflections_;
  mutable std::map<std::vector<Rational>, std::map<SignedPerm, Rational>> degree_memo_;
};

}  // namespace mitosiskit
