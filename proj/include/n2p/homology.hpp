#ifndef N2P_HOMOLOGY_HPP
#define N2P_HOMOLOGY_HPP

#include <map>
#include <vector>

#include "n2p/linalg.hpp"
#include "n2p/simplicial.hpp"

namespace n2p {

// Augmented (reduced) chain complex of a simplicial complex. boundary[k]
// maps k-faces to (k-1)-faces; the (-1)-dimensional chain group is spanned
// by the empty face, so boundary[0] is the augmentation row. Faces are
// indexed lexicographically, signs come from the sorted-vertex orientation.
struct BoundaryMatrices {
  std::vector<std::vector<VertexMask>> faces;  // faces[k+1] = k-faces
  std::vector<IntMat> boundary;                // boundary[k]: C_k -> C_{k-1}

  int top_dim() const { return static_cast<int>(faces.size()) - 2; }
  // f-vector entry; k from -1 to top_dim.
  int face_count(int k) const {
    return static_cast<int>(faces[static_cast<std::size_t>(k + 1)].size());
  }
};

inline BoundaryMatrices boundary_matrices(const SimplicialComplex& c) {
  BoundaryMatrices b;
  const int d = c.dim();
  for (int k = -1; k <= d; ++k) b.faces.push_back(c.faces_of_dim(k));

  for (int k = 0; k <= d; ++k) {
    const auto& rows = b.faces[static_cast<std::size_t>(k)];      // (k-1)-faces
    const auto& cols = b.faces[static_cast<std::size_t>(k + 1)];  // k-faces
    std::map<VertexMask, int> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i)
      row_index[rows[i]] = static_cast<int>(i);
    IntMat m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto verts = detail::mask_vertices(cols[j]);
      int sign = 1;
      for (int v : verts) {
        VertexMask face = cols[j] & ~(VertexMask{1} << v);
        m.at(row_index.at(face), static_cast<int>(j)) = sign;
        sign = -sign;
      }
    }
    b.boundary.push_back(std::move(m));
  }
  return b;
}

// Dimensions of the reduced homology groups, indexed from -1 (the
// augmentation degree) up to dim. dims(k) on a non-void complex:
// nullity(d_k) - rank(d_{k+1}).
struct HomologyDims {
  std::vector<long long> dims_;  // dims_[k+1] = dim of degree k

  long long dim(int k) const {
    if (k < -1 || k + 1 >= static_cast<int>(dims_.size())) return 0;
    return dims_[static_cast<std::size_t>(k + 1)];
  }
  int top() const { return static_cast<int>(dims_.size()) - 2; }
  bool all_zero() const {
    for (auto d : dims_)
      if (d != 0) return false;
    return true;
  }
  long long reduced_euler() const {
    long long chi = 0;
    int sign = -1;  // degree -1 first
    for (auto d : dims_) { chi += sign * d; sign = -sign; }
    return chi;
  }
};

inline HomologyDims reduced_homology_dims(const SimplicialComplex& c,
                                          const FieldSpec& f) {
  BoundaryMatrices b = boundary_matrices(c);
  const int d = b.top_dim();
  std::vector<int> rank(static_cast<std::size_t>(d + 2), 0);  // rank[k] = rank of boundary[k], k = 0..d
  for (int k = 0; k <= d; ++k)
    rank[static_cast<std::size_t>(k)] = matrix_rank(b.boundary[static_cast<std::size_t>(k)], f);
  HomologyDims h;
  for (int k = -1; k <= d; ++k) {
    long long nullity = (k == -1)
                            ? b.face_count(-1)  // d_{-1} = 0
                            : b.face_count(k) - rank[static_cast<std::size_t>(k)];
    long long img = (k == d) ? 0 : rank[static_cast<std::size_t>(k + 1)];
    h.dims_.push_back(nullity - img);
  }
  return h;
}

}  // namespace n2p

#endif  // N2P_HOMOLOGY_HPP
