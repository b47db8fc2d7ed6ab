#ifndef BETTIGRAPH_COMPLEX_HPP
#define BETTIGRAPH_COMPLEX_HPP

#include <vector>

#include "bettigraph/field.hpp"
#include "bettigraph/graph.hpp"
#include "bettigraph/matrix.hpp"

namespace bettigraph {

/// The independence complex of a graph restricted to a ground set W.
/// faces[c] lists the c-vertex faces (dimension c-1) sorted by bit-mask
/// value; faces[0] is the empty face, so the complex is augmented.
struct RestrictedComplex {
  VertexSet ground;
  std::vector<std::vector<Mask>> faces;

  int dim() const { return static_cast<int>(faces.size()) - 2; }

  // Number of k-faces, 0 outside -1..dim().
  long long face_count(int k) const {
    int c = k + 1;
    if (c < 0 || c >= static_cast<int>(faces.size())) return 0;
    return static_cast<long long>(faces[static_cast<size_t>(c)].size());
  }

  // True when the complex is the full simplex on its ground set.
  bool is_simplex() const {
    return !ground.empty() && dim() == ground.size() - 1;
  }

  // Downward closure, sortedness, and (when given) independence in the
  // source graph; throws std::logic_error on violation.
  void check_invariants(const Graph* source = nullptr) const;
};

// Faces are exactly the independent subsets of W, found by recursive
// extension pruned with adjacency masks.
RestrictedComplex restricted_independence_complex(const Graph& g, VertexSet w);

// Boundary map from k-faces to (k-1)-faces of the augmented complex
// (so boundary_matrix(c, 0, f) maps vertices onto the empty face).
// Signs come from the position of the dropped vertex in sorted order.
FieldMatrix boundary_matrix(const RestrictedComplex& c, int k, FieldSpec f);

// dim H~_k for k = 0..dim(c), each equal to
// (#k-faces) - rank d_k - rank d_{k+1}.
std::vector<long long> reduced_homology_dims(const RestrictedComplex& c,
                                             FieldSpec f);

} // namespace bettigraph

#endif
