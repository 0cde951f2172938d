#pragma once

#include <optional>
#include <set>
#include <vector>

#include "nakct/classify.hpp"

namespace nakct {

/// sigma(i) = vertex of tau soc P_i; absent where soc P_i is projective.
struct ResolutionQuiver {
  std::vector<std::optional<int>> successor;  // index v - 1

  std::optional<int> operator()(int v) const { return successor[v - 1]; }
};

inline ResolutionQuiver resolution_quiver(const Algebra& A) {
  ResolutionQuiver q;
  for (int v = 1; v <= A.m(); ++v) {
    const int soc = A.lmax(v);
    if (is_projective(A, simple(A, soc)))
      q.successor.push_back(std::nullopt);
    else
      q.successor.push_back(A.vertex(soc - 1));
  }
  return q;
}

/// Vertices lying on a cycle of the resolution quiver.
inline std::set<int> cyclic_simples(const Algebra& A) {
  const ResolutionQuiver q = resolution_quiver(A);
  std::set<int> out;
  for (int v = 1; v <= A.m(); ++v) {
    std::optional<int> w = q(v);
    for (int step = 0; step < A.m() && w; ++step) {
      if (*w == v) {
        out.insert(v);
        break;
      }
      w = q(*w);
    }
  }
  return out;
}

/// The blocks m_1 < ... < m_{r+1} = m_1 + m of a self-glued algebra
/// admitting an nZ-cluster tilting subcategory, in lifted coordinates.
struct SelfGluedModel {
  Algebra algebra;
  int n;
  Decomposition blocks;
  Subcategory cluster_tilting;

  int r() const { return static_cast<int>(blocks.pieces.size()); }

  /// Block index and lifted (i, j) with m_k <= i < m_{k+1}.
  std::pair<int, Interval> locate(const Indec& M) const {
    const int m1 = blocks.pieces.front().start;
    const long long shift = static_cast<long long>(mod_floor(M.i - m1, algebra.m())) + m1 - M.i;
    const Interval x{M.i + shift, M.j + shift};
    for (int k = 0; k < r(); ++k)
      if (blocks.pieces[k].start <= x.a && x.a < blocks.pieces[k].end) return {k, x};
    throw Error(ErrorCode::Internal, "module outside every block");
  }
};

inline SelfGluedModel self_glued_model(const Algebra& A, int n) {
  ClassificationResult c = classify_nz(A, n);
  if (c.kind != CaseKind::CyclicSelfGlued)
    throw Error(ErrorCode::NotInClassifiedCase,
                "algebra is not a self-glued algebra with an nZ-cluster tilting subcategory");
  return {A, n, *c.decomposition, c.subcategories.front()};
}

/// Finds some n for which the algebra is classified self-glued.
inline std::optional<SelfGluedModel> find_self_glued_model(const Algebra& A) {
  if (!A.cyclic() || is_homogeneous(A)) return std::nullopt;
  for (int n = 2; n <= 2 * A.m(); n += 2) {
    bool candidate = false;
    for (int p : cut_points(A))
      if (decompose(unglue(A, p), n)) candidate = true;
    if (candidate) return self_glued_model(A, n);
  }
  return std::nullopt;
}

struct FCategory {
  std::vector<Indec> objects;
  std::optional<std::vector<Indec>> f_projectives;
};

/// The four type families over block k with i = m_k (mod l_k); types 3 and 4
/// are the projective objects.
inline std::vector<Indec> f_type_family(const SelfGluedModel& S, int type) {
  std::set<Indec> out;
  for (const Piece& b : S.blocks.pieces)
    for (long long i = b.start; i < b.end; i += b.loewy) {
      const int l = b.loewy;
      switch (type) {
        case 1: out.insert(canonical(S.algebra, i, i)); break;
        case 2: out.insert(canonical(S.algebra, i + 1, i + l - 1)); break;
        case 3: out.insert(canonical(S.algebra, i, i + l - 1)); break;
        case 4: out.insert(canonical(S.algebra, i + 1, i + l)); break;
      }
    }
  return {out.begin(), out.end()};
}

inline FCategory f_objects(const Algebra& A) {
  if (gldim(A)) throw Error(ErrorCode::FiniteGlobalDimension, "algebra has finite global dimension");
  const std::set<int> cyc = cyclic_simples(A);
  FCategory f;
  for (const Indec& x : indecomposables(A)) {
    if (!cyc.count(A.vertex(x.j))) continue;
    if (is_projective(A, simple(A, x.i))) continue;
    if (cyc.count(A.vertex(x.i - 1))) f.objects.push_back(x);
  }
  if (auto S = find_self_glued_model(A)) {
    std::set<Indec> p;
    for (int t : {3, 4})
      for (const Indec& x : f_type_family(*S, t)) p.insert(x);
    f.f_projectives = std::vector<Indec>(p.begin(), p.end());
  }
  return f;
}

struct GammaPresentation {
  Algebra gamma;
  std::vector<Indec> projectives_enum;
  std::vector<int> offsets;  // t_s
};

inline GammaPresentation gamma(const SelfGluedModel& S) {
  const Algebra& A = S.algebra;
  std::vector<Indec> ps;
  std::vector<int> offsets;
  int t = 0;
  for (const Piece& b : S.blocks.pieces) {
    offsets.push_back(t);
    const int count = (b.end - b.start) / b.loewy;
    for (int i = 0; i < count; ++i) {
      const long long lo = b.start + static_cast<long long>(i) * b.loewy;
      ps.push_back(canonical(A, lo, lo + b.loewy - 1));
      ps.push_back(canonical(A, lo + 1, lo + b.loewy));
    }
    t += 2 * count;
  }
  const int mg = static_cast<int>(ps.size());
  if (mg != S.r() * S.n) throw Error(ErrorCode::Internal, "Gamma has the wrong number of vertices");
  for (int a = 0; a < mg; ++a)
    for (int b = 0; b < mg; ++b) {
      const int want = (b == a || b == (a + 1) % mg) ? 1 : 0;
      if (hom_dim(A, ps[a], ps[b]) != want)
        throw Error(ErrorCode::Internal, "projective objects of F violate the Gamma quiver");
    }
  return {Algebra::homogeneous(Kind::Cyclic, mg, 2), std::move(ps), std::move(offsets)};
}

enum class Via { Inclusion, Projection, Identity };

inline const char* to_string(Via v) {
  switch (v) {
    case Via::Inclusion: return "Inclusion";
    case Via::Projection: return "Projection";
    case Via::Identity: return "Identity";
  }
  return "";
}

struct SingImage {
  bool nonzero = false;
  std::optional<Indec> target;
  std::optional<Via> via;
};

inline SingImage sing_image(const SelfGluedModel& S, const Indec& M) {
  require_valid(S.algebra, M);
  const auto [k, x] = S.locate(M);
  const Piece& b = S.blocks.pieces[k];
  const int l = b.loewy;
  const bool i_cong = mod_floor(x.a - (b.start + 1), l) == 0;
  const bool j_cong = mod_floor(x.b - b.start, l) == 0;
  SingImage out;
  if (!(x.b - x.a < l - 1 && (i_cong || j_cong))) return out;
  out.nonzero = true;
  if (i_cong) {
    out.target = canonical(S.algebra, x.a, x.a + l - 2);
    out.via = Via::Inclusion;
  } else {
    out.target = canonical(S.algebra, x.b, x.b);
    out.via = Via::Projection;
  }
  if (*out.target == M) out.via = Via::Identity;
  return out;
}

struct SingCt {
  int count = 0;
  std::set<int> distinguished_simple_indices;
  std::set<int> gamma_indices;
};

inline SingCt sing_ct(const SelfGluedModel& S) {
  const GammaPresentation g = gamma(S);
  SingCt out;
  // Gamma is selfinjective, so nZ-cluster tilting subcategories of mod Gamma
  // and of its stable category correspond.
  const auto found = enumerate_ct(g.gamma, S.n, Mode::NZ);
  const auto built = classify_nz(g.gamma, S.n).subcategories;
  if (found != built) throw Error(ErrorCode::Internal, "Gamma construction disagrees with enumeration");
  for (const Subcategory& c : built)
    for (const Indec& x : c.members)
      for (const Indec& y : c.members)
        for (int k = 1; k <= S.n; ++k) {
          const IndecOrZero w = omega(g.gamma, x, k);
          const int stable = w ? stable_hom_dim(g.gamma, *w, y) : 0;
          if (stable != ext_dim(g.gamma, x, y, k))
            throw Error(ErrorCode::Internal, "stable Hom and Ext disagree over Gamma");
        }
  out.count = static_cast<int>(found.size());
  for (const Piece& b : S.blocks.pieces) {
    const int v = S.algebra.vertex(b.start);
    out.distinguished_simple_indices.insert(v);
    for (size_t a = 0; a < g.projectives_enum.size(); ++a)
      if (S.algebra.vertex(g.projectives_enum[a].j) == v) out.gamma_indices.insert(static_cast<int>(a));
  }
  return out;
}

/// An injective non-projective module that survives in the singularity category.
inline Indec gorenstein_witness(const SelfGluedModel& S) {
  for (const Piece& b : S.blocks.pieces) {
    if (b.loewy < 3) continue;
    const Indec w = canonical(S.algebra, b.end - 1, b.end);
    if (is_injective(S.algebra, w) && !is_projective(S.algebra, w) && sing_image(S, w).nonzero) return w;
    throw Error(ErrorCode::Internal, "witness candidate failed its defining properties");
  }
  throw Error(ErrorCode::Internal, "no block of Loewy length >= 3");
}

}  // namespace nakct
