#include "bettigraph/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace bettigraph {

namespace {

// Grow the face `cur` by vertices from `cand`, all larger than any vertex
// of `cur` and non-adjacent to all of it.
void extend(const Graph& g, Mask cur, Mask cand,
            std::vector<std::vector<Mask>>& faces) {
  size_t card = static_cast<size_t>(std::popcount(cur));
  if (faces.size() <= card) faces.resize(card + 1);
  faces[card].push_back(cur);
  while (cand != 0) {
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    extend(g, cur | vertex_bit(v), cand & ~g.neighbors(v), faces);
  }
}

} // namespace

void RestrictedComplex::check_invariants(const Graph* source) const {
  if (faces.empty() || faces[0] != std::vector<Mask>{0})
    throw std::logic_error("RestrictedComplex: missing empty face");
  for (size_t c = 1; c < faces.size(); ++c) {
    const auto& level = faces[c];
    if (!std::is_sorted(level.begin(), level.end()))
      throw std::logic_error("RestrictedComplex: faces not sorted");
    for (Mask f : level) {
      if (std::popcount(f) != static_cast<int>(c))
        throw std::logic_error("RestrictedComplex: face in wrong level");
      if (!VertexSet::from_mask(f).subset_of(ground))
        throw std::logic_error("RestrictedComplex: face outside ground set");
      for (Mask m = f; m != 0; m &= m - 1) {
        Mask sub = f & ~(m & -m);
        const auto& below = faces[c - 1];
        if (!std::binary_search(below.begin(), below.end(), sub))
          throw std::logic_error("RestrictedComplex: not closed under subsets");
      }
      if (source != nullptr)
        for (Mask m = f; m != 0; m &= m - 1)
          if ((source->neighbors(std::countr_zero(m)) & f) != 0)
            throw std::logic_error("RestrictedComplex: dependent face");
    }
  }
}

RestrictedComplex restricted_independence_complex(const Graph& g, VertexSet w) {
  if (!w.subset_of(g.vertices()))
    throw std::invalid_argument(
        "restricted_independence_complex: W not within the vertex set");
  RestrictedComplex c;
  c.ground = w;
  extend(g, 0, w.mask, c.faces);
  for (auto& level : c.faces) std::sort(level.begin(), level.end());
  return c;
}

FieldMatrix boundary_matrix(const RestrictedComplex& c, int k, FieldSpec f) {
  if (k < 0) throw std::invalid_argument("boundary_matrix: k must be >= 0");
  long long rows = c.face_count(k - 1);
  long long cols = c.face_count(k);
  FieldMatrix m(f, static_cast<int>(rows), static_cast<int>(cols));
  if (rows == 0 || cols == 0) return m;
  const auto& below = c.faces[static_cast<size_t>(k)];
  const auto& level = c.faces[static_cast<size_t>(k) + 1];
  for (size_t col = 0; col < level.size(); ++col) {
    Mask face = level[col];
    int pos = 0;
    for (Mask m2 = face; m2 != 0; m2 &= m2 - 1, ++pos) {
      Mask sub = face & ~(m2 & -m2);
      auto it = std::lower_bound(below.begin(), below.end(), sub);
      m.set(static_cast<int>(it - below.begin()), static_cast<int>(col),
            pos % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

std::vector<long long> reduced_homology_dims(const RestrictedComplex& c,
                                             FieldSpec f) {
  int d = c.dim();
  std::vector<long long> dims;
  if (d < 0) return dims;
  std::vector<int> ranks(static_cast<size_t>(d) + 2, 0);
  for (int k = 0; k <= d; ++k) ranks[static_cast<size_t>(k)] = matrix_rank(boundary_matrix(c, k, f));
  for (int k = 0; k <= d; ++k)
    dims.push_back(c.face_count(k) - ranks[static_cast<size_t>(k)] -
                   ranks[static_cast<size_t>(k) + 1]);
  return dims;
}

} // namespace bettigraph
