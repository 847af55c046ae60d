#include "mitosiskit/weyl.hpp"

#include "mitosiskit/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mitosiskit {

SignedPerm SignedPerm::identity(int n) {
  SignedPerm w;
  w.img.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w.img[static_cast<std::size_t>(i - 1)] = i;
  return w;
}

int SignedPerm::apply(int i) const {
  if (i == 0 || std::abs(i) > n()) throw std::invalid_argument("index out of range");
  const int v = img[static_cast<std::size_t>(std::abs(i) - 1)];
  return i > 0 ? v : -v;
}

SignedPerm SignedPerm::compose(const SignedPerm& o) const {
  if (n() != o.n()) throw std::invalid_argument("size mismatch");
  SignedPerm w;
  w.img.resize(img.size());
  for (int i = 1; i <= n(); ++i) w.img[static_cast<std::size_t>(i - 1)] = apply(o.apply(i));
  return w;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm w;
  w.img.resize(img.size());
  for (int i = 1; i <= n(); ++i) {
    const int v = apply(i);
    w.img[static_cast<std::size_t>(std::abs(v) - 1)] = (v > 0) ? i : -i;
  }
  return w;
}

Vec SignedPerm::apply_to_vec(const Vec& x) const {
  if (x.size() != n()) throw std::invalid_argument("vector size mismatch");
  Vec y = Vec::Zero(x.size());
  for (int i = 1; i <= n(); ++i) {
    const int v = apply(i);
    y(std::abs(v) - 1) = (v > 0) ? x(i - 1) : Rational(-x(i - 1));
  }
  return y;
}

std::string SignedPerm::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (i) os << ",";
    os << img[i];
  }
  os << "]";
  return os.str();
}

RootSystem::RootSystem(RootSystemType t, int n, std::vector<int> label_to_std)
    : type_(t), n_(n), label_to_std_(std::move(label_to_std)) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  rank_ = (t == RootSystemType::A) ? n - 1 : n;
  if (label_to_std_.empty()) {
    for (int k = 1; k <= rank_; ++k) label_to_std_.push_back(k);
  }
  if (static_cast<int>(label_to_std_.size()) != rank_) {
    throw std::invalid_argument("labeling size must equal the rank");
  }
  std::vector<int> check = label_to_std_;
  std::sort(check.begin(), check.end());
  for (int k = 1; k <= rank_; ++k) {
    if (check[static_cast<std::size_t>(k - 1)] != k) {
      throw std::invalid_argument("labeling must be a permutation of 1..rank");
    }
  }

  auto unit = [&](int i) {
    Vec v = Vec::Zero(n_);
    v(i - 1) = 1;
    return v;
  };
  auto add_root = [&](const Vec& root, const Vec& coroot, SignedPerm refl) {
    pos_roots_.push_back(root);
    pos_coroots_.push_back(coroot);
    reflections_.push_back(std::move(refl));
  };
  auto transposition = [&](int i, int j) {
    SignedPerm w = SignedPerm::identity(n_);
    std::swap(w.img[static_cast<std::size_t>(i - 1)], w.img[static_cast<std::size_t>(j - 1)]);
    return w;
  };
  auto neg_swap = [&](int i, int j) {
    // Reflection for e_i + e_j: i -> -j, j -> -i.
    SignedPerm w = SignedPerm::identity(n_);
    w.img[static_cast<std::size_t>(i - 1)] = -j;
    w.img[static_cast<std::size_t>(j - 1)] = -i;
    return w;
  };
  auto negate_one = [&](int i) {
    SignedPerm w = SignedPerm::identity(n_);
    w.img[static_cast<std::size_t>(i - 1)] = -i;
    return w;
  };

  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      add_root(unit(i) - unit(j), unit(i) - unit(j), transposition(i, j));
    }
  }
  if (type_ == RootSystemType::B || type_ == RootSystemType::C) {
    for (int i = 1; i <= n_; ++i) {
      for (int j = i + 1; j <= n_; ++j) {
        add_root(unit(i) + unit(j), unit(i) + unit(j), neg_swap(i, j));
      }
    }
    for (int i = 1; i <= n_; ++i) {
      if (type_ == RootSystemType::C) {
        add_root(2 * unit(i), unit(i), negate_one(i));
      } else {
        add_root(unit(i), 2 * unit(i), negate_one(i));
      }
    }
  }
}

SignedPerm RootSystem::simple_reflection_std(int k) const {
  if (k < 1 || k > rank_) throw std::invalid_argument("simple reflection index out of range");
  if (type_ == RootSystemType::A || k < n_) {
    SignedPerm w = SignedPerm::identity(n_);
    std::swap(w.img[static_cast<std::size_t>(k - 1)], w.img[static_cast<std::size_t>(k)]);
    return w;
  }
  SignedPerm w = SignedPerm::identity(n_);
  w.img[static_cast<std::size_t>(n_ - 1)] = -n_;
  return w;
}

SignedPerm RootSystem::simple_reflection(int user_label) const {
  if (user_label < 1 || user_label > rank_) {
    throw std::invalid_argument("simple reflection label out of range");
  }
  return simple_reflection_std(label_to_std_[static_cast<std::size_t>(user_label - 1)]);
}

SignedPerm RootSystem::element_of_word(const std::vector<int>& user_word) const {
  SignedPerm w = SignedPerm::identity(n_);
  for (const int j : user_word) w = w.compose(simple_reflection(j));
  return w;
}

int RootSystem::length(const SignedPerm& w) const {
  int len = 0;
  for (const auto& beta : pos_roots_) {
    const Vec img = w.apply_to_vec(beta);
    // A signed-permutation image of a root is +-(another root); it is negative
    // exactly when its first nonzero coordinate is negative (all A/B/C roots
    // in this realization have positive leading coordinate).
    for (Eigen::Index i = 0; i < img.size(); ++i) {
      if (img(i) != 0) {
        if (img(i) < 0) ++len;
        break;
      }
    }
  }
  return len;
}

SignedPerm RootSystem::longest_element() const {
  SignedPerm w = SignedPerm::identity(n_);
  if (type_ == RootSystemType::A) {
    std::reverse(w.img.begin(), w.img.end());
  } else {
    for (auto& v : w.img) v = -v;
  }
  return w;
}

std::vector<std::vector<SignedPerm>> RootSystem::elements_by_length() const {
  if (n_ > 4) throw RankTooLarge("group enumeration is limited to n <= 4");
  std::vector<std::vector<SignedPerm>> levels;
  std::set<SignedPerm> seen;
  levels.push_back({SignedPerm::identity(n_)});
  seen.insert(levels[0][0]);
  while (true) {
    std::set<SignedPerm> next;
    for (const auto& w : levels.back()) {
      for (int k = 1; k <= rank_; ++k) {
        SignedPerm w2 = w.compose(simple_reflection_std(k));
        if (!seen.count(w2)) next.insert(w2);
      }
    }
    if (next.empty()) break;
    levels.emplace_back(next.begin(), next.end());
    for (const auto& w : next) seen.insert(w);
  }
  return levels;
}

Rational RootSystem::degree(const SignedPerm& w, const Vec& lambda) const {
  if (lambda.size() != n_) throw std::invalid_argument("weight size mismatch");
  std::vector<Rational> key(static_cast<std::size_t>(lambda.size()));
  for (Eigen::Index i = 0; i < lambda.size(); ++i) key[static_cast<std::size_t>(i)] = lambda(i);
  auto& memo = degree_memo_[key];

  auto rec = [&](auto&& self, const SignedPerm& u) -> Rational {
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    const int lu = length(u);
    Rational total = 0;
    if (lu == 0) {
      total = 1;
    } else {
      for (std::size_t t = 0; t < pos_roots_.size(); ++t) {
        const SignedPerm u2 = u.compose(reflections_[t]);
        if (length(u2) != lu - 1) continue;
        const Rational pairing = lambda.dot(pos_coroots_[t]);
        total += pairing * self(self, u2);
      }
    }
    memo.emplace(u, total);
    return total;
  };
  return rec(rec, w);
}

std::vector<std::vector<int>> RootSystem::reduced_subwords(const std::vector<int>& user_pattern,
                                                           const SignedPerm& w) const {
  const int target = length(w);
  std::set<std::vector<int>> words;
  std::vector<int> cur_word;
  SignedPerm cur = SignedPerm::identity(n_);

  auto rec = [&](auto&& self, std::size_t pos, int cur_len) -> void {
    if (cur_len == target) {
      if (cur == w) words.insert(cur_word);
      return;
    }
    if (pos == user_pattern.size()) return;
    if (cur_len + static_cast<int>(user_pattern.size() - pos) < target) return;
    // take pattern[pos] if it extends a reduced expression
    const SignedPerm nxt = cur.compose(simple_reflection(user_pattern[pos]));
    if (length(nxt) == cur_len + 1) {
      const SignedPerm saved = cur;
      cur = nxt;
      cur_word.push_back(user_pattern[pos]);
      self(self, pos + 1, cur_len + 1);
      cur_word.pop_back();
      cur = saved;
    }
    self(self, pos + 1, cur_len);
  };
  rec(rec, 0, 0);

  if (words.empty()) {
    throw NoAdmissibleWord("no reduced subword of the pattern represents " + w.to_string());
  }
  return {words.begin(), words.end()};
}

}  // namespace mitosiskit
