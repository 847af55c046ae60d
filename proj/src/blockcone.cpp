#include "mitosiskit/blockcone.hpp"

#include "mitosiskit/errors.hpp"
#include "mitosiskit/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mitosiskit {

std::string FacetTag::to_string() const {
  std::ostringstream os;
  os << "H(" << src_i << "," << src_j << ";" << dst_i << "," << dst_j << ")";
  if (coeff != 1) os << "*" << rational_to_string(coeff);
  return os.str();
}

BlockCone::BlockCone(std::vector<int> blocks, std::vector<FacetTag> tags)
    : blocks_(std::move(blocks)), tags_(std::move(tags)) {
  if (blocks_.empty()) throw NoConeStructure("cone needs at least one block");
  block_offset_.resize(blocks_.size() + 1, 0);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] < 1) throw NoConeStructure("block sizes must be positive");
    block_offset_[i + 1] = block_offset_[i] + blocks_[i];
  }
  dim_ = block_offset_.back();
  for (const auto& t : tags_) {
    if (t.dst_i < 1 || t.dst_i > num_blocks() || t.dst_j < 1 || t.dst_j > block_size(t.dst_i)) {
      throw NoConeStructure("facet target out of range: " + t.to_string());
    }
    const bool zero_src = (t.src_i == 0 && t.src_j == 0);
    if (!zero_src && (t.src_i < 1 || t.src_i > num_blocks() || t.src_j < 1 ||
                      t.src_j > block_size(t.src_i))) {
      throw NoConeStructure("facet source out of range: " + t.to_string());
    }
    if (t.coeff <= 0) throw NoConeStructure("facet coefficient must be positive");
  }

  const Mat n = normal_matrix();
  if (rank_of(n) != dim_) {
    throw NoConeStructure("cone is not pointed (normal rank below dimension)");
  }
  rays_ = extreme_rays_of_cone(n);

  // Ray condition: no extreme ray parallel to an axis x^i_j with j != 1.
  for (const auto& r : rays_) {
    int nonzero = -1;
    bool single = true;
    for (Eigen::Index t = 0; t < r.size(); ++t) {
      if (r(t) != 0) {
        if (nonzero >= 0) {
          single = false;
          break;
        }
        nonzero = static_cast<int>(t);
      }
    }
    if (!single || nonzero < 0) continue;
    for (int i = 1; i <= num_blocks(); ++i) {
      for (int j = 2; j <= block_size(i); ++j) {
        if (coord(i, j) == nonzero) {
          throw NoConeStructure("extreme ray parallel to axis x^" + std::to_string(i) + "_" +
                                std::to_string(j));
        }
      }
    }
  }
}

int BlockCone::block_size(int i) const {
  if (i < 1 || i > num_blocks()) throw std::invalid_argument("block index out of range");
  return blocks_[static_cast<std::size_t>(i - 1)];
}

int BlockCone::coord(int i, int j) const {
  if (j < 1 || j > block_size(i)) throw std::invalid_argument("coordinate out of range");
  return block_offset_[static_cast<std::size_t>(i - 1)] + (j - 1);
}

Vec BlockCone::facet_normal(int f) const {
  if (f < 0 || f >= num_facets()) throw std::invalid_argument("facet index out of range");
  const FacetTag& t = tags_[static_cast<std::size_t>(f)];
  Vec n = Vec::Zero(dim_);
  if (t.src_i != 0) n(coord(t.src_i, t.src_j)) += 1;
  n(coord(t.dst_i, t.dst_j)) -= t.coeff;
  return n;
}

Mat BlockCone::normal_matrix() const {
  Mat n(num_facets(), dim_);
  for (int f = 0; f < num_facets(); ++f) n.row(f) = facet_normal(f).transpose();
  return n;
}

std::vector<int> rays_on_face(const BlockCone& c, const std::vector<int>& set) {
  std::vector<int> out;
  const auto& rays = c.extreme_rays();
  for (std::size_t r = 0; r < rays.size(); ++r) {
    bool on = true;
    for (const int f : set) {
      if (c.facet_normal(f).dot(rays[r]) != 0) {
        on = false;
        break;
      }
    }
    if (on) out.push_back(static_cast<int>(r));
  }
  return out;
}

namespace {

int face_dim_from_rays(const BlockCone& c, const std::vector<int>& ray_idx) {
  if (ray_idx.empty()) return 0;
  Mat m(c.dim(), static_cast<Eigen::Index>(ray_idx.size()));
  for (std::size_t k = 0; k < ray_idx.size(); ++k) {
    m.col(static_cast<Eigen::Index>(k)) = c.extreme_rays()[static_cast<std::size_t>(ray_idx[k])];
  }
  return static_cast<int>(rank_of(m));
}

}  // namespace

ConeFace make_cone_face(const BlockCone& c, std::vector<int> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  for (const int f : set) {
    if (f < 0 || f >= c.num_facets()) throw std::invalid_argument("facet index out of range");
  }
  const std::vector<int> rays = rays_on_face(c, set);
  const int dim = face_dim_from_rays(c, rays);
  // Minimality is inclusion-minimality: dropping any one facet must strictly
  // enlarge the face.  For a simplicial vertex cone this forces the set size
  // to equal the codimension, but a non-simplicial cone can pin a face with
  // fewer facets than its codimension (the hyperplanes meet in a larger
  // subspace that the cone itself truncates), so no size check is imposed.
  for (std::size_t k = 0; k < set.size(); ++k) {
    std::vector<int> sub = set;
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
    if (rays_on_face(c, sub).size() == rays.size()) {
      throw NonMinimalFaceSet("facet " + c.tags()[static_cast<std::size_t>(set[k])].to_string() +
                              " is redundant in the face set");
    }
  }
  ConeFace f;
  f.set = std::move(set);
  f.dim = dim;
  return f;
}

std::vector<std::vector<int>> minimal_defining_subsets(const BlockCone& c,
                                                       const std::vector<int>& set) {
  const std::vector<int> target_rays = rays_on_face(c, set);
  // All facets containing the face are candidates.
  std::vector<int> candidates;
  for (int f = 0; f < c.num_facets(); ++f) {
    const Vec n = c.facet_normal(f);
    bool contains = true;
    for (const int r : target_rays) {
      if (n.dot(c.extreme_rays()[static_cast<std::size_t>(r)]) != 0) {
        contains = false;
        break;
      }
    }
    if (contains) candidates.push_back(f);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Every candidate contains all target rays, so rays_on_face(cur) is always a
  // superset of the target; cur pins the face exactly when the counts agree.
  // Once cur pins the face every strict superset is non-minimal, so the
  // search never extends past a pinning set.
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (rays_on_face(c, cur).size() == target_rays.size()) {
      try {
        make_cone_face(c, cur);
        out.push_back(cur);
      } catch (const NonMinimalFaceSet&) {
      }
      return;
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
      cur.push_back(candidates[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Compares coordinates a and b (flat indices) on the face spanned by the given
// rays: -1 if x_a <= x_b everywhere with strict somewhere, +1 for the
// opposite, 0 if equal everywhere, 2 if incomparable.
int compare_on_face(const BlockCone& c, const std::vector<int>& ray_idx, int a, int b) {
  bool le = true, ge = true, eq = true;
  for (const int r : ray_idx) {
    const Vec& ray = c.extreme_rays()[static_cast<std::size_t>(r)];
    const Rational va = ray(a), vb = ray(b);
    if (va < vb) { ge = false; eq = false; }
    if (va > vb) { le = false; eq = false; }
  }
  if (eq) return 0;
  if (le) return -1;
  if (ge) return 1;
  return 2;
}

bool tag_less(const FacetTag& a, const FacetTag& b) {
  return std::tie(a.src_i, a.src_j, a.dst_i, a.dst_j, a.coeff) <
         std::tie(b.src_i, b.src_j, b.dst_i, b.dst_j, b.coeff);
}

}  // namespace

std::vector<ConeFace> mitosis_step(const BlockCone& c, const ConeFace& face, int block_i,
                                   std::vector<std::string>* log) {
  if (block_i < 1 || block_i > c.num_blocks()) {
    throw std::invalid_argument("block index out of range");
  }
  const int d_i = c.block_size(block_i);

  // Facets of the face set keyed by their target position in block i.
  std::map<int, int> target_in_set;  // j -> facet index
  for (const int f : face.set) {
    const FacetTag& t = c.tags()[static_cast<std::size_t>(f)];
    if (t.dst_i != block_i) continue;
    if (!target_in_set.emplace(t.dst_j, f).second) {
      throw NonMinimalFaceSet("two facets of the set share target x^" +
                              std::to_string(block_i) + "_" + std::to_string(t.dst_j));
    }
  }
  if (!target_in_set.count(d_i)) return {};

  int s = d_i;
  while (s - 1 >= 1 && target_in_set.count(s - 1)) --s;

  const std::vector<int> face_rays = rays_on_face(c, face.set);

  // H_+(i,j): the cone facet whose source is x^i_j, tie-broken by comparing
  // target coordinates everywhere on the face. x^i_s may be unbounded above
  // on the cone (no source facet); -1 marks that.
  std::map<int, int> hplus;
  for (int j = s; j <= d_i; ++j) {
    std::vector<int> cand;
    for (int f = 0; f < c.num_facets(); ++f) {
      const FacetTag& t = c.tags()[static_cast<std::size_t>(f)];
      if (t.src_i == block_i && t.src_j == j) cand.push_back(f);
    }
    if (cand.empty()) {
      if (j == s) {
        hplus[j] = -1;
        continue;
      }
      throw NoConeStructure("no upper-bound facet with source x^" + std::to_string(block_i) +
                            "_" + std::to_string(j));
    }
    int best = cand[0];
    for (std::size_t k = 1; k < cand.size(); ++k) {
      const FacetTag& tb = c.tags()[static_cast<std::size_t>(best)];
      const FacetTag& tk = c.tags()[static_cast<std::size_t>(cand[k])];
      const int cmp = compare_on_face(c, face_rays, c.coord(tk.dst_i, tk.dst_j),
                                      c.coord(tb.dst_i, tb.dst_j));
      if (cmp == -1) {
        best = cand[k];
      } else if (cmp == 0) {
        const bool swap = tag_less(tk, tb);
        if (log) {
          log->push_back("exact tie between " + tb.to_string() + " and " + tk.to_string() +
                         " on the face; chose " + (swap ? tk : tb).to_string() +
                         " (lexicographically smaller tag)");
        }
        if (swap) best = cand[k];
      } else if (cmp == 2) {
        throw AmbiguousTieBreak("upper bounds " + tb.to_string() + " and " + tk.to_string() +
                                " are incomparable on the face");
      }
    }
    hplus[j] = best;
  }

  // j joins the offspring index set when x^i_j has no upper bound in force on
  // the face: either no source facet exists at all, or the one selected as
  // H_+(i,j) is not among the defining facets.
  std::set<int> j_set;
  for (int j = s; j <= d_i; ++j) {
    const int hp = hplus.at(j);
    if (hp < 0 || !std::binary_search(face.set.begin(), face.set.end(), hp)) j_set.insert(j);
  }

  std::vector<ConeFace> out;
  for (const int j : j_set) {
    std::vector<int> newset;
    newset.reserve(face.set.size() - 1);
    const int removed = target_in_set.at(j);
    for (const int f : face.set) {
      if (f == removed) continue;
      bool replaced = false;
      for (const int k : j_set) {
        if (k > j && target_in_set.at(k) == f) {
          newset.push_back(hplus.at(k));
          replaced = true;
          break;
        }
      }
      if (!replaced) newset.push_back(f);
    }
    ConeFace child = make_cone_face(c, std::move(newset));
    if (child.dim != face.dim + 1) {
      throw std::logic_error("offspring dimension is not dim+1 (got " +
                             std::to_string(child.dim) + " from " + std::to_string(face.dim) +
                             ")");
    }
    out.push_back(std::move(child));
  }
  return out;
}

std::vector<ConeFace> mitosis_apply(const BlockCone& c, const ConeFace& start,
                                    const std::vector<int>& ops, std::vector<std::string>* log) {
  // Deduplicate by geometric identity (the set of extreme rays); keep the
  // lexicographically smallest defining subset as representative.
  auto canon = [&](std::vector<ConeFace> faces) {
    std::map<std::vector<int>, ConeFace> by_rays;
    for (auto& f : faces) {
      std::vector<int> key = rays_on_face(c, f.set);
      auto it = by_rays.find(key);
      if (it == by_rays.end()) {
        by_rays.emplace(std::move(key), std::move(f));
      } else if (f.set < it->second.set) {
        it->second = std::move(f);
      }
    }
    std::vector<ConeFace> out;
    out.reserve(by_rays.size());
    for (auto& [k, f] : by_rays) {
      (void)k;
      out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  std::vector<ConeFace> cur = {start};
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    std::vector<ConeFace> next;
    for (const auto& f : cur) {
      std::vector<ConeFace> step = mitosis_step(c, f, *it, log);
      next.insert(next.end(), step.begin(), step.end());
    }
    cur = canon(std::move(next));
    if (cur.empty()) break;
  }
  return canon(std::move(cur));
}

}  // namespace mitosiskit
