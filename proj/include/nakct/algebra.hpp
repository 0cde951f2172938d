#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nakct/error.hpp"

namespace nakct {

enum class Kind { Acyclic, Cyclic };

inline const char* to_string(Kind k) {
  return k == Kind::Acyclic ? "acyclic" : "cyclic";
}

/// Floor modulus; result in [0, m).
inline int mod_floor(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

/// Connected Nakayama algebra given by its quiver kind and Kupisch series.
/// Vertices are labelled 1..m; the arrow alpha_j points from j to j-1.
class Algebra {
 public:
  static Algebra from_kupisch(Kind kind, std::vector<int> c) {
    const int m = static_cast<int>(c.size());
    auto fail = [](const std::string& msg) {
      throw Error(ErrorCode::InvalidKupisch, msg);
    };
    if (kind == Kind::Acyclic) {
      if (m < 2) fail("acyclic algebra needs m >= 2");
      if (c[0] != 1) fail("c_1 must be 1");
      for (int j = 2; j <= m; ++j) {
        const int cj = c[j - 1];
        if (cj < 2) fail("c_j must be >= 2 at index " + std::to_string(j));
        if (cj > j) fail("c_j must be <= j at index " + std::to_string(j));
        if (cj > c[j - 2] + 1)
          fail("c_j <= c_{j-1} + 1 violated at index " + std::to_string(j));
      }
    } else {
      if (m < 1) fail("cyclic algebra needs m >= 1");
      for (int j = 1; j <= m; ++j) {
        const int cj = c[j - 1];
        const int prev = c[(j + m - 2) % m];
        if (cj < 2) fail("c_j must be >= 2 at index " + std::to_string(j));
        if (cj > prev + 1)
          fail("c_j <= c_{j-1} + 1 violated at index " + std::to_string(j));
      }
    }
    return Algebra(kind, std::move(c));
  }

  static Algebra homogeneous(Kind kind, int m, int l) {
    if (l < 2) throw Error(ErrorCode::InvalidParameter, "l must be >= 2");
    if (kind == Kind::Acyclic && m < 2)
      throw Error(ErrorCode::InvalidParameter, "acyclic algebra needs m >= 2");
    if (m < 1) throw Error(ErrorCode::InvalidParameter, "m must be >= 1");
    std::vector<int> c(m);
    for (int j = 1; j <= m; ++j) c[j - 1] = kind == Kind::Acyclic ? std::min(j, l) : l;
    return from_kupisch(kind, std::move(c));
  }

  Kind kind() const { return kind_; }
  bool cyclic() const { return kind_ == Kind::Cyclic; }
  int m() const { return static_cast<int>(c_.size()); }
  const std::vector<int>& kupisch() const { return c_; }

  /// Canonical label in 1..m of an arbitrary integer position.
  int vertex(long long v) const { return mod_floor(v - 1, m()) + 1; }

  int c(long long v) const { return c_[vertex(v) - 1]; }

  int lmax(long long j) const { return static_cast<int>(j - c(j) + 1); }

  int rmax(long long i) const {
    const int v = vertex(i);
    return static_cast<int>(rmax_[v - 1] + (i - v));
  }

  /// Largest Kupisch entry, i.e. the Loewy length of the algebra.
  int loewy_length() const { return *std::max_element(c_.begin(), c_.end()); }

  int num_indecomposables() const {
    int s = 0;
    for (int x : c_) s += x;
    return s;
  }

  /// Default cap on resolution lengths.
  int resolution_cap() const { return 4 * m() * loewy_length(); }

  bool operator==(const Algebra& o) const { return kind_ == o.kind_ && c_ == o.c_; }
  bool operator!=(const Algebra& o) const { return !(*this == o); }

 private:
  Algebra(Kind kind, std::vector<int> c) : kind_(kind), c_(std::move(c)) {
    rmax_.resize(c_.size());
    for (int i = 1; i <= m(); ++i) {
      long long j = i;
      while (lmax(j + 1) <= i) ++j;
      rmax_[i - 1] = static_cast<int>(j);
    }
  }

  Kind kind_;
  std::vector<int> c_;
  std::vector<int> rmax_;
};

struct Bounds {
  int lmax;
  int rmax;
};

inline Bounds bounds(const Algebra& a, long long v) { return {a.lmax(v), a.rmax(v)}; }

/// Loewy length l when the algebra is k Q_m / R^l.
inline std::optional<int> is_homogeneous(const Algebra& a) {
  const auto& c = a.kupisch();
  const int l = c.back();
  if (a.cyclic()) {
    for (int x : c)
      if (x != l) return std::nullopt;
    return l;
  }
  for (int j = 1; j <= a.m(); ++j)
    if (c[j - 1] != std::min(j, l)) return std::nullopt;
  return l;
}

inline bool is_selfinjective(const Algebra& a) {
  return a.cyclic() && is_homogeneous(a).has_value();
}

inline Algebra glue(const Algebra& a1, const Algebra& a2) {
  if (a1.kind() != Kind::Acyclic || a2.kind() != Kind::Acyclic)
    throw Error(ErrorCode::KindMismatch, "glue requires two acyclic algebras");
  std::vector<int> c = a1.kupisch();
  c.insert(c.end(), a2.kupisch().begin() + 1, a2.kupisch().end());
  return Algebra::from_kupisch(Kind::Acyclic, std::move(c));
}

/// Identifies vertex m with vertex 1; labels 2..m-1 are kept.
inline Algebra self_glue(const Algebra& a) {
  if (a.kind() != Kind::Acyclic)
    throw Error(ErrorCode::KindMismatch, "self_glue requires an acyclic algebra");
  const auto& c = a.kupisch();
  std::vector<int> out(c.begin(), c.end() - 1);
  out[0] = c.back();
  return Algebra::from_kupisch(Kind::Cyclic, std::move(out));
}

inline std::set<int> cut_points(const Algebra& a) {
  std::set<int> out;
  const int m = a.m();
  for (int p = 1; p <= m; ++p) {
    if (a.kind() == Kind::Acyclic && (p <= 1 || p >= m)) continue;
    if (a.c(p + 1) == 2) out.insert(p);
  }
  return out;
}

/// Cuts a cyclic algebra open at vertex p. Acyclic vertex t+1 corresponds to
/// cyclic vertex p+t, so both ends 1 and m+1 lie over p.
inline Algebra unglue(const Algebra& a, int p) {
  if (a.kind() != Kind::Cyclic)
    throw Error(ErrorCode::KindMismatch, "unglue requires a cyclic algebra");
  if (a.c(p + 1) != 2)
    throw Error(ErrorCode::NotACutPoint,
                "vertex " + std::to_string(p) + " is not a cut point");
  std::vector<int> c{1};
  for (int t = 1; t <= a.m(); ++t) c.push_back(a.c(p + t));
  return Algebra::from_kupisch(Kind::Acyclic, std::move(c));
}

/// Kupisch series rotated so that vertex p becomes vertex 1.
inline Algebra rotate(const Algebra& a, int p) {
  std::vector<int> c;
  for (int t = 0; t < a.m(); ++t) c.push_back(a.c(p + t));
  return Algebra::from_kupisch(a.kind(), std::move(c));
}

/// Lexicographically minimal rotation; acyclic algebras are returned as is.
inline Algebra canonical_rotation(const Algebra& a) {
  if (!a.cyclic()) return a;
  Algebra best = a;
  for (int p = 2; p <= a.m(); ++p) {
    Algebra r = rotate(a, p);
    if (r.kupisch() < best.kupisch()) best = r;
  }
  return best;
}

inline bool equal_up_to_rotation(const Algebra& a, const Algebra& b) {
  return canonical_rotation(a) == canonical_rotation(b);
}

}  // namespace nakct
