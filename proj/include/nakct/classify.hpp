#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "nakct/tilting.hpp"

namespace nakct {

struct Piece {
  int start;  // m_k
  int end;    // m_{k+1}
  int loewy;  // l_k

  auto operator<=>(const Piece&) const = default;
};

struct Decomposition {
  std::vector<Piece> pieces;
  bool self_glued = false;

  bool operator==(const Decomposition&) const = default;
};

enum class CaseKind {
  AcyclicHomogRadSq,
  AcyclicHomogDeep,
  CyclicHomogRadSq,
  CyclicHomogStacked,
  AcyclicGlued,
  CyclicSelfGlued,
  None,
};

inline const char* to_string(CaseKind c) {
  switch (c) {
    case CaseKind::AcyclicHomogRadSq: return "AcyclicHomogRadSq";
    case CaseKind::AcyclicHomogDeep: return "AcyclicHomogDeep";
    case CaseKind::CyclicHomogRadSq: return "CyclicHomogRadSq";
    case CaseKind::CyclicHomogStacked: return "CyclicHomogStacked";
    case CaseKind::AcyclicGlued: return "AcyclicGlued";
    case CaseKind::CyclicSelfGlued: return "CyclicSelfGlued";
    case CaseKind::None: return "None";
  }
  return "";
}

struct ClassificationResult {
  bool exists = false;
  CaseKind kind = CaseKind::None;
  std::optional<Decomposition> decomposition;
  std::vector<Subcategory> subcategories;
};

namespace detail {

inline bool divides(long long d, long long x) { return d != 0 && x % d == 0; }

}  // namespace detail

/// Existence of an n-cluster tilting subcategory for k Q_m / R^l.
inline bool admits_homog_nct(Kind kind, int m, int l, int n) {
  if (l < 2 || n < 2 || m < (kind == Kind::Acyclic ? 2 : 1))
    throw Error(ErrorCode::InvalidParameter, "need l >= 2, n >= 2 and a valid m");
  const long long d = static_cast<long long>(l) * (n - 1) + 2;
  if (kind == Kind::Acyclic) {
    if (l == 2 && (m - 1) % n == 0) return true;
    return n % 2 == 0 && detail::divides(d, m - 1 - static_cast<long long>(n / 2) * l);
  }
  const long long t = std::gcd(n + 1, 2 * (l - 1));
  return detail::divides(d, 2LL * m) || detail::divides(d, t * m);
}

/// Parse of an acyclic algebra into homogeneous pieces of global dimension n.
inline std::optional<Decomposition> decompose(const Algebra& A, int n) {
  if (A.kind() != Kind::Acyclic)
    throw Error(ErrorCode::KindMismatch, "decompose requires an acyclic algebra");
  if (n < 2) throw Error(ErrorCode::InvalidParameter, "n must be >= 2");
  const int m = A.m();
  Decomposition d;
  int s = 1;
  while (s < m) {
    int t = 0;
    while (s + t + 1 <= m && A.c(s + t + 1) == t + 2) ++t;
    if (t == 0) return std::nullopt;
    const int l = A.c(s + t);
    if (l < 2 || (n * l) % 2 != 0) return std::nullopt;
    const int len = n * l / 2;
    if (l != 2 && len % l != 0) return std::nullopt;
    if (s + len > m) return std::nullopt;
    for (int u = 1; u <= len; ++u)
      if (A.c(s + u) != std::min(u + 1, l)) return std::nullopt;
    d.pieces.push_back({s, s + len, l});
    s += len;
  }
  return d;
}

namespace detail {

inline Subcategory with_projectives(const Algebra& A, std::vector<Indec> extra) {
  auto p = projectives(A);
  extra.insert(extra.end(), p.begin(), p.end());
  return Subcategory(std::move(extra));
}

inline ClassificationResult classify_homogeneous(const Algebra& A, int l, int n) {
  ClassificationResult r;
  const int m = A.m();
  if (!A.cyclic()) {
    if (l == 2 && (m - 1) % n == 0) {
      r.kind = CaseKind::AcyclicHomogRadSq;
      std::vector<Indec> s;
      for (int k = 0; 1 + k * n <= m; ++k) s.push_back(simple(A, 1 + k * n));
      r.subcategories.push_back(with_projectives(A, s));
    } else if (l >= 3 && (m - 1) % l == 0 && n == 2 * (m - 1) / l) {
      r.kind = CaseKind::AcyclicHomogDeep;
      r.subcategories.push_back(with_projectives(A, injectives(A)));
    }
    if (!r.subcategories.empty()) r.decomposition = decompose(A, n);
  } else {
    const bool radsq = l == 2 && m % n == 0;
    const bool stacked = l >= 4 && n == l - 2 && m % n == 0;
    if (radsq || stacked) {
      r.kind = radsq ? CaseKind::CyclicHomogRadSq : CaseKind::CyclicHomogStacked;
      for (int i = 1; i <= n; ++i) {
        std::vector<Indec> s;
        for (int k = 0; k < m / n; ++k) {
          s.push_back(simple(A, i + k * n));
          if (stacked) s.push_back(canonical(A, i + k * n, i + (k + 1) * n));
        }
        r.subcategories.push_back(with_projectives(A, s));
      }
    }
  }
  return r;
}

/// Cyclic vertex over acyclic vertex a of unglue(A, p).
inline Indec to_cyclic(const Algebra& A, int p, const Indec& x) {
  return canonical(A, p + x.i - 1, p + x.j - 1);
}

}  // namespace detail

inline ClassificationResult classify_nz(const Algebra& A, int n) {
  if (n < 2) throw Error(ErrorCode::InvalidParameter, "n must be >= 2");
  ClassificationResult r;
  const ExtTable table(A, n - 1);

  if (const auto l = is_homogeneous(A)) {
    r = detail::classify_homogeneous(A, *l, n);
  } else if (!A.cyclic()) {
    Subcategory c = tau_n_closure(A, n);
    auto dec = decompose(A, n);
    const bool ok = verify_ct(A, c, n, Mode::NZ, &table).verdict;
    if (ok != dec.has_value())
      throw Error(ErrorCode::Internal, "closure verdict and decomposition disagree");
    if (ok) {
      r.kind = CaseKind::AcyclicGlued;
      r.decomposition = std::move(dec);
      r.subcategories.push_back(std::move(c));
    }
  } else {
    std::map<std::vector<int>, std::optional<Subcategory>> decided;
    std::optional<Subcategory> image;
    for (int p : cut_points(A)) {
      const Algebra B = unglue(A, p);
      auto it = decided.find(B.kupisch());
      if (it == decided.end()) {
        ClassificationResult sub = classify_nz(B, n);
        std::optional<Subcategory> s;
        if (sub.exists) s = sub.subcategories.front();
        it = decided.emplace(B.kupisch(), std::move(s)).first;
      }
      if (!it->second) continue;
      std::vector<Indec> members;
      for (const Indec& x : it->second->members) members.push_back(detail::to_cyclic(A, p, x));
      Subcategory mapped(std::move(members));
      if (!image) {
        image = mapped;
        Decomposition d = *decompose(B, n);
        for (Piece& q : d.pieces) {
          q.start += p - 1;
          q.end += p - 1;
        }
        d.self_glued = true;
        r.decomposition = std::move(d);
      } else if (*image != mapped) {
        throw Error(ErrorCode::Internal, "self-glued subcategory is not unique");
      }
    }
    if (image) {
      r.kind = CaseKind::CyclicSelfGlued;
      r.subcategories.push_back(std::move(*image));
    }
  }

  for (const Subcategory& c : r.subcategories)
    if (!verify_ct(A, c, n, Mode::NZ, &table).verdict)
      throw Error(ErrorCode::Internal, "constructed subcategory failed verification");
  std::sort(r.subcategories.begin(), r.subcategories.end());
  r.exists = !r.subcategories.empty();
  if (!r.exists) {
    r.kind = CaseKind::None;
    r.decomposition.reset();
  }
  return r;
}

}  // namespace nakct
