#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nakct/algebra.hpp"
#include "nakct/exact_rank.hpp"

namespace nakct {

/// Indecomposable module M(i,j) with socle S_i and top S_j, 1 <= i <= m.
struct Indec {
  int i = 0;
  int j = 0;

  int length() const { return j - i + 1; }
  auto operator<=>(const Indec&) const = default;
};

inline std::string to_string(const Indec& x) {
  return "M(" + std::to_string(x.i) + "," + std::to_string(x.j) + ")";
}

/// std::nullopt stands for the zero module.
using IndecOrZero = std::optional<Indec>;

/// A uniserial interval [a,b] in lifted (non-canonical) coordinates.
struct Interval {
  long long a;
  long long b;

  int length() const { return static_cast<int>(b - a + 1); }
};

inline bool module_exists(const Algebra& A, long long i, long long j) {
  return i <= j && j <= A.rmax(i);
}

inline Indec canonical(const Algebra& A, long long i, long long j) {
  const long long shift = A.vertex(i) - i;
  return {static_cast<int>(i + shift), static_cast<int>(j + shift)};
}

inline bool is_valid(const Algebra& A, const Indec& M) {
  return M.i >= 1 && M.i <= A.m() && module_exists(A, M.i, M.j);
}

inline void require_valid(const Algebra& A, const Indec& M) {
  if (!is_valid(A, M))
    throw Error(ErrorCode::ModuleNotInCategory, to_string(M) + " is not a module of the algebra");
}

inline Indec simple(const Algebra& A, long long v) { return canonical(A, v, v); }
inline Indec projective(const Algebra& A, long long v) { return canonical(A, A.lmax(v), v); }
inline Indec injective(const Algebra& A, long long v) { return canonical(A, v, A.rmax(v)); }

/// All indecomposables sorted by (i, j).
inline std::vector<Indec> indecomposables(const Algebra& A) {
  std::vector<Indec> out;
  out.reserve(A.num_indecomposables());
  for (int i = 1; i <= A.m(); ++i)
    for (int j = i; j <= A.rmax(i); ++j) out.push_back({i, j});
  return out;
}

/// Dense numbering of indecomposables, consistent with indecomposables().
class ModuleIndex {
 public:
  explicit ModuleIndex(const Algebra& A) : offset_(A.m() + 1, 0) {
    for (int i = 1; i <= A.m(); ++i) offset_[i] = offset_[i - 1] + (A.rmax(i) - i + 1);
  }

  int size() const { return offset_.back(); }
  int operator()(const Indec& M) const { return offset_[M.i - 1] + (M.j - M.i); }

 private:
  std::vector<int> offset_;
};

struct CoverHull {
  Indec cover;
  Indec hull;
  bool is_projective;
  bool is_injective;
};

inline bool is_projective(const Algebra& A, const Indec& M) { return M.i == A.lmax(M.j); }
inline bool is_injective(const Algebra& A, const Indec& M) { return M.j == A.rmax(M.i); }

inline CoverHull cover_hull(const Algebra& A, const Indec& M) {
  return {canonical(A, A.lmax(M.j), M.j), canonical(A, M.i, A.rmax(M.i)),
          is_projective(A, M), is_injective(A, M)};
}

inline std::vector<Indec> projectives(const Algebra& A) {
  std::set<Indec> s;
  for (int v = 1; v <= A.m(); ++v) s.insert(projective(A, v));
  return {s.begin(), s.end()};
}

inline std::vector<Indec> injectives(const Algebra& A) {
  std::set<Indec> s;
  for (int v = 1; v <= A.m(); ++v) s.insert(injective(A, v));
  return {s.begin(), s.end()};
}

/// Omega^k for k > 0, the k-th cosyzygy for k < 0.
inline IndecOrZero omega(const Algebra& A, const IndecOrZero& M, int k) {
  IndecOrZero x = M;
  for (; k > 0 && x; --k) {
    if (is_projective(A, *x)) return std::nullopt;
    x = canonical(A, A.lmax(x->j), x->i - 1);
  }
  for (; k < 0 && x; ++k) {
    if (is_injective(A, *x)) return std::nullopt;
    x = canonical(A, x->j + 1, A.rmax(x->i));
  }
  return x;
}

enum class Dir { Fwd, Bwd };

inline IndecOrZero translate(const Algebra& A, const IndecOrZero& M, Dir dir) {
  if (!M) return std::nullopt;
  if (dir == Dir::Fwd) {
    if (is_projective(A, *M)) return std::nullopt;
    return canonical(A, M->i - 1, M->j - 1);
  }
  if (is_injective(A, *M)) return std::nullopt;
  return canonical(A, M->i + 1, M->j + 1);
}

inline IndecOrZero tau_n(const Algebra& A, const IndecOrZero& M, int n, Dir dir) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "n must be >= 1");
  return translate(A, omega(A, M, dir == Dir::Fwd ? n - 1 : -(n - 1)), dir);
}

/// Top positions v in [c,d] of images of nonzero maps src -> dst, one per
/// basis element of Hom.
inline std::vector<long long> hom_targets(const Algebra& A, const Interval& src,
                                          const Interval& dst) {
  std::vector<long long> out;
  const int m = A.m();
  long long v = A.cyclic() ? dst.a + mod_floor(src.b - dst.a, m) : src.b;
  const long long step = A.cyclic() ? m : dst.b + 1;
  for (; v <= dst.b; v += step)
    if (v >= dst.a && v - dst.a <= src.b - src.a) out.push_back(v);
  return out;
}

inline int hom_dim(const Algebra& A, const Indec& M, const Indec& N) {
  return static_cast<int>(hom_targets(A, {M.i, M.j}, {N.i, N.j}).size());
}

/// The basis map src -> dst whose image has top v, as a |dst| x |src| matrix.
inline IntMatrix shift_map(const Interval& src, const Interval& dst, long long v) {
  IntMatrix f(dst.length(), src.length());
  const long long s = v - src.b;
  for (long long t = src.a; t <= src.b; ++t)
    if (t + s >= dst.a) f(static_cast<int>(t + s - dst.a), static_cast<int>(t - src.a)) = 1;
  return f;
}

inline IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix z(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int k = 0; k < x.cols; ++k) {
      const long long a = x(r, k);
      if (a == 0) continue;
      for (int c = 0; c < y.cols; ++c) z(r, c) += a * y(k, c);
    }
  return z;
}

/// Minimal projective resolution kept in one lifted coordinate frame, so the
/// differential P_s -> P_{s-1} is the identity on overlapping basis indices.
class ProjectiveResolution {
 public:
  ProjectiveResolution(const Algebra& A, const Indec& M, int length) {
    std::optional<Interval> x = Interval{M.i, M.j};
    for (int s = 0; s <= length; ++s) {
      if (!x) {
        terms_.push_back(std::nullopt);
        continue;
      }
      const long long top = x->b;
      const long long soc = A.lmax(top);
      terms_.push_back(Interval{soc, top});
      if (x->a > soc)
        x = Interval{soc, x->a - 1};
      else
        x = std::nullopt;
    }
  }

  int length() const { return static_cast<int>(terms_.size()) - 1; }
  const std::optional<Interval>& term(int s) const { return terms_[s]; }

  /// Matrix of P_s -> P_{s-1}, s >= 1, both terms nonzero.
  IntMatrix differential(int s) const {
    const Interval& p = *terms_[s];
    const Interval& q = *terms_[s - 1];
    IntMatrix d(q.length(), p.length());
    for (long long t = std::max(p.a, q.a); t <= p.b; ++t)
      d(static_cast<int>(t - q.a), static_cast<int>(t - p.a)) = 1;
    return d;
  }

 private:
  std::vector<std::optional<Interval>> terms_;
};

namespace detail {

/// Rank of Hom(P_{s-1}, N) -> Hom(P_s, N), f |-> f o d_s.
inline int pullback_rank(const Algebra& A, const ProjectiveResolution& res, const Interval& N,
                         int s) {
  if (s < 1 || s > res.length() || !res.term(s) || !res.term(s - 1)) return 0;
  const Interval& prev = *res.term(s - 1);
  const Interval& cur = *res.term(s);
  const auto targets = hom_targets(A, prev, N);
  if (targets.empty()) return 0;
  const IntMatrix d = res.differential(s);
  IntMatrix images(static_cast<int>(targets.size()), N.length() * cur.length());
  for (size_t r = 0; r < targets.size(); ++r) {
    const IntMatrix g = multiply(shift_map(prev, N, targets[r]), d);
    for (size_t e = 0; e < g.data.size(); ++e) images(static_cast<int>(r), static_cast<int>(e)) = g.data[e];
  }
  return exact_rank(images);
}

}  // namespace detail

/// dim Ext^k(M, N) from a resolution of M of length at least k + 1.
inline int ext_dim(const Algebra& A, const ProjectiveResolution& res, const Indec& N, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "Ext degree must be >= 1");
  if (res.length() < k + 1) throw Error(ErrorCode::Internal, "resolution too short");
  if (!res.term(k)) return 0;
  const Interval n{N.i, N.j};
  const int hom = static_cast<int>(hom_targets(A, *res.term(k), n).size());
  if (hom == 0) return 0;
  return hom - detail::pullback_rank(A, res, n, k + 1) - detail::pullback_rank(A, res, n, k);
}

inline int ext_dim(const Algebra& A, const Indec& M, const Indec& N, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "Ext degree must be >= 1");
  if (k + 1 > A.resolution_cap())
    throw Error(ErrorCode::ResolutionTooLong, "Ext degree exceeds the resolution cap");
  return ext_dim(A, ProjectiveResolution(A, M, k + 1), N, k);
}

/// dim of Hom(M, N) modulo maps factoring through a projective; every such
/// map factors through the projective cover of N.
inline int stable_hom_dim(const Algebra& A, const Indec& M, const Indec& N) {
  const Interval x{M.i, M.j};
  const Interval y{N.i, N.j};
  const int hom = static_cast<int>(hom_targets(A, x, y).size());
  if (hom == 0) return 0;
  const Interval p{A.lmax(N.j), N.j};
  IntMatrix proj(y.length(), p.length());
  for (long long t = y.a; t <= y.b; ++t) proj(static_cast<int>(t - y.a), static_cast<int>(t - p.a)) = 1;
  const auto targets = hom_targets(A, x, p);
  IntMatrix images(static_cast<int>(targets.size()), y.length() * x.length());
  for (size_t r = 0; r < targets.size(); ++r) {
    const IntMatrix g = multiply(proj, shift_map(x, p, targets[r]));
    for (size_t e = 0; e < g.data.size(); ++e) images(static_cast<int>(r), static_cast<int>(e)) = g.data[e];
  }
  return hom - exact_rank(images);
}

/// Terms 0..length of the minimal projective resolution of M.
inline std::vector<IndecOrZero> min_resolution(const Algebra& A, const Indec& M, int length) {
  if (length < 0) throw Error(ErrorCode::InvalidParameter, "length must be >= 0");
  if (length > A.resolution_cap())
    throw Error(ErrorCode::ResolutionTooLong, "resolution length exceeds the cap");
  std::vector<IndecOrZero> out;
  IndecOrZero x = M;
  for (int s = 0; s <= length; ++s) {
    out.push_back(x ? IndecOrZero(cover_hull(A, *x).cover) : std::nullopt);
    x = omega(A, x, 1);
  }
  return out;
}

/// Projective dimension, or nullopt if the syzygy orbit cycles.
inline std::optional<int> projective_dimension(const Algebra& A, const Indec& M) {
  std::set<Indec> seen;
  IndecOrZero x = M;
  const int cap = A.resolution_cap();
  for (int s = 0;; ++s) {
    if (is_projective(A, *x)) return s;
    if (!seen.insert(*x).second) return std::nullopt;
    if (s > cap) throw Error(ErrorCode::Internal, "syzygy orbit exceeded the cap");
    x = omega(A, x, 1);
  }
}

/// Global dimension; nullopt means infinite.
inline std::optional<int> gldim(const Algebra& A) {
  int best = 0;
  for (int v = 1; v <= A.m(); ++v) {
    const auto pd = projective_dimension(A, simple(A, v));
    if (!pd) return std::nullopt;
    best = std::max(best, *pd);
  }
  return best;
}

enum class ArrowTag { Mono, Epi };

struct ARArrow {
  Indec from;
  Indec to;
  ArrowTag tag;
};

struct ARQuiver {
  std::vector<Indec> vertices;
  std::vector<ARArrow> arrows;
  /// Pairs (M, tau M) for non-projective M.
  std::vector<std::pair<Indec, Indec>> translations;
};

inline ARQuiver ar_quiver(const Algebra& A) {
  ARQuiver q;
  q.vertices = indecomposables(A);
  for (const Indec& x : q.vertices) {
    if (module_exists(A, x.i, x.j + 1)) q.arrows.push_back({x, canonical(A, x.i, x.j + 1), ArrowTag::Mono});
    if (x.i + 1 <= x.j) q.arrows.push_back({x, canonical(A, x.i + 1, x.j), ArrowTag::Epi});
    if (auto t = translate(A, x, Dir::Fwd)) q.translations.push_back({x, *t});
  }
  return q;
}

}  // namespace nakct
