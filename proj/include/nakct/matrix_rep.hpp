#pragma once

#include <vector>

#include "nakct/modcat.hpp"

namespace nakct {

/// Explicit representation of M(i,j): basis b_i..b_j, b_t at vertex t mod m,
/// arrow alpha_s sends b_t to b_{t-1} when t is at vertex s and t-1 >= i.
struct MatrixRep {
  int m = 0;
  Interval span{0, 0};

  int dim() const { return span.length(); }

  int vertex_of_index(int r) const { return mod_floor(span.a + r - 1, m) + 1; }

  std::vector<int> vertex_dims() const {
    std::vector<int> d(m, 0);
    for (int r = 0; r < dim(); ++r) ++d[vertex_of_index(r) - 1];
    return d;
  }

  /// Index of alpha_s b_r, or -1 when the product is zero.
  int act(int s, int r) const { return (r >= 1 && vertex_of_index(r) == s) ? r - 1 : -1; }

  IntMatrix arrow(int s) const {
    IntMatrix x(dim(), dim());
    for (int r = 0; r < dim(); ++r)
      if (int t = act(s, r); t >= 0) x(t, r) = 1;
    return x;
  }
};

inline MatrixRep matrix_rep(const Algebra& A, const Indec& M) { return {A.m(), {M.i, M.j}}; }

/// dim Hom(M, N) as the solution space of f alpha_s = alpha_s f over all
/// arrows, with f restricted to vertex-preserving entries.
inline int hom_dim_oracle(const Algebra& A, const Indec& M, const Indec& N) {
  const MatrixRep rm = matrix_rep(A, M);
  const MatrixRep rn = matrix_rep(A, N);
  const int dm = rm.dim();
  const int dn = rn.dim();
  std::vector<int> unknown(static_cast<size_t>(dn) * dm, -1);
  int nu = 0;
  for (int r = 0; r < dn; ++r)
    for (int c = 0; c < dm; ++c)
      if (rn.vertex_of_index(r) == rm.vertex_of_index(c)) unknown[r * dm + c] = nu++;
  if (nu == 0) return 0;

  // Entry (r,c) of f alpha_s - alpha_s f. Only arrows at the vertex of b_c or
  // of the preimage of b_r under alpha_s contribute.
  IntMatrix sys(2 * dn * dm, nu);
  int row = 0;
  for (int r = 0; r < dn; ++r)
    for (int c = 0; c < dm; ++c) {
      int arrows[2] = {rm.vertex_of_index(c), r + 1 < dn ? rn.vertex_of_index(r + 1) : 0};
      for (int k = 0; k < 2; ++k) {
        const int s = arrows[k];
        if (s == 0 || (k == 1 && s == arrows[0])) continue;
        bool any = false;
        if (int u = rm.act(s, c); u >= 0 && unknown[r * dm + u] >= 0) {
          sys(row, unknown[r * dm + u]) += 1;
          any = true;
        }
        if (r + 1 < dn && rn.act(s, r + 1) == r && unknown[(r + 1) * dm + c] >= 0) {
          sys(row, unknown[(r + 1) * dm + c]) -= 1;
          any = true;
        }
        if (any) ++row;
      }
    }
  sys.rows = row;
  sys.data.resize(static_cast<size_t>(row) * nu);
  return nu - exact_rank(sys);
}

}  // namespace nakct
