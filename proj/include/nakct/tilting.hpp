#pragma once

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "nakct/modcat.hpp"

namespace nakct {

enum class Mode { N, NZ };

/// Finite set of indecomposables standing for the additive closure of their sum.
struct Subcategory {
  std::vector<Indec> members;

  Subcategory() = default;
  explicit Subcategory(std::vector<Indec> xs) : members(std::move(xs)) { normalize(); }

  void normalize() {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }

  bool contains(const Indec& x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
  size_t size() const { return members.size(); }

  auto operator<=>(const Subcategory&) const = default;
};

/// Dimensions of Ext^k between all pairs of indecomposables, 1 <= k <= max_degree.
class ExtTable {
 public:
  ExtTable(const Algebra& A, int max_degree)
      : index_(A), n_(index_.size()), max_degree_(max_degree) {
    if (max_degree + 1 > A.resolution_cap())
      throw Error(ErrorCode::ResolutionTooLong, "Ext degree exceeds the resolution cap");
    const auto mods = indecomposables(A);
    dims_.assign(static_cast<size_t>(std::max(max_degree, 0)) * n_ * n_, 0);
    for (int x = 0; x < n_; ++x) {
      const ProjectiveResolution res(A, mods[x], max_degree + 1);
      for (int y = 0; y < n_; ++y)
        for (int k = 1; k <= max_degree; ++k)
          dims_[slot(x, y, k)] = static_cast<std::uint8_t>(std::min(ext_dim(A, res, mods[y], k), 255));
    }
  }

  int max_degree() const { return max_degree_; }
  int size() const { return n_; }
  const ModuleIndex& index() const { return index_; }

  int dim(int x, int y, int k) const { return dims_[slot(x, y, k)]; }

  /// Ext^k(x, y) != 0 for some 0 < k < n.
  bool nonzero_below(int x, int y, int n) const {
    for (int k = 1; k < n; ++k)
      if (dims_[slot(x, y, k)] != 0) return true;
    return false;
  }

 private:
  size_t slot(int x, int y, int k) const {
    return (static_cast<size_t>(k - 1) * n_ + x) * n_ + y;
  }

  ModuleIndex index_;
  int n_;
  int max_degree_;
  std::vector<std::uint8_t> dims_;
};

/// Which Ext condition a module outside C fails to violate: Left means
/// Ext^k(C, Z) = 0 for all members, Right means Ext^k(Z, C) = 0.
enum class PerpSide { Left, Right, Both };

inline const char* to_string(PerpSide s) {
  switch (s) {
    case PerpSide::Left: return "left";
    case PerpSide::Right: return "right";
    case PerpSide::Both: return "both";
  }
  return "";
}

enum class FailureKind {
  MissingProjective,
  MissingInjective,
  OrthogonalityFailure,
  PerpGap,
  NotClosedUnderOmegaN,
};

inline const char* to_string(FailureKind k) {
  switch (k) {
    case FailureKind::MissingProjective: return "MissingProjective";
    case FailureKind::MissingInjective: return "MissingInjective";
    case FailureKind::OrthogonalityFailure: return "OrthogonalityFailure";
    case FailureKind::PerpGap: return "PerpGap";
    case FailureKind::NotClosedUnderOmegaN: return "NotClosedUnderOmegaN";
  }
  return "";
}

struct Failure {
  FailureKind kind;
  Indec x;
  Indec y{};       // OrthogonalityFailure only
  int degree = 0;  // OrthogonalityFailure only
  PerpSide side = PerpSide::Both;
};

struct VerifyReport {
  bool verdict = true;
  std::vector<Failure> failures;
  /// Members M with Omega^n M = 0, accepted by the closure check.
  std::vector<Indec> zero_omega_n;
};

inline void require_valid(const Algebra& A, const Subcategory& C) {
  for (const Indec& x : C.members)
    if (!is_valid(A, x))
      throw Error(ErrorCode::InvalidSubcategory, to_string(x) + " is not a module of the algebra");
}

inline VerifyReport verify_ct(const Algebra& A, const Subcategory& C, int n, Mode mode,
                              const ExtTable* table = nullptr) {
  if (n < 2) throw Error(ErrorCode::InvalidParameter, "n must be >= 2");
  require_valid(A, C);
  std::unique_ptr<ExtTable> own;
  if (!table || table->max_degree() < n - 1) {
    own = std::make_unique<ExtTable>(A, n - 1);
    table = own.get();
  }
  const ModuleIndex& idx = table->index();
  VerifyReport rep;

  for (const Indec& p : projectives(A))
    if (!C.contains(p)) rep.failures.push_back({FailureKind::MissingProjective, p});
  for (const Indec& q : injectives(A))
    if (!C.contains(q)) rep.failures.push_back({FailureKind::MissingInjective, q});

  for (const Indec& x : C.members)
    for (const Indec& y : C.members)
      for (int k = 1; k < n; ++k)
        if (table->dim(idx(x), idx(y), k) != 0)
          rep.failures.push_back({FailureKind::OrthogonalityFailure, x, y, k});

  for (const Indec& z : indecomposables(A)) {
    if (C.contains(z)) continue;
    bool left = false, right = false;
    for (const Indec& c : C.members) {
      left = left || table->nonzero_below(idx(c), idx(z), n);
      right = right || table->nonzero_below(idx(z), idx(c), n);
    }
    if (!left || !right)
      rep.failures.push_back({FailureKind::PerpGap, z, {}, 0,
                              !left && !right ? PerpSide::Both
                              : !left         ? PerpSide::Left
                                              : PerpSide::Right});
  }

  if (mode == Mode::NZ)
    for (const Indec& x : C.members) {
      if (is_projective(A, x)) continue;
      const IndecOrZero y = omega(A, x, n);
      if (!y)
        rep.zero_omega_n.push_back(x);
      else if (!C.contains(*y))
        rep.failures.push_back({FailureKind::NotClosedUnderOmegaN, x});
    }

  rep.verdict = rep.failures.empty();
  return rep;
}

/// Projectives closed under the inverse n-AR translate.
inline Subcategory tau_n_closure(const Algebra& A, int n) {
  if (n < 2) throw Error(ErrorCode::InvalidParameter, "n must be >= 2");
  std::set<Indec> seen;
  std::deque<Indec> work;
  for (const Indec& p : projectives(A))
    if (seen.insert(p).second) work.push_back(p);
  while (!work.empty()) {
    const Indec x = work.front();
    work.pop_front();
    if (auto y = tau_n(A, x, n, Dir::Bwd); y && seen.insert(*y).second) work.push_back(*y);
  }
  return Subcategory({seen.begin(), seen.end()});
}

inline constexpr int kDefaultMaxGroundSet = 64;
inline constexpr int kHardMaxGroundSet = 512;

/// Enumeration capacity; NAKCT_MAX_GROUND_SET overrides the default.
inline int max_ground_set() {
  if (const char* env = std::getenv("NAKCT_MAX_GROUND_SET")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, kHardMaxGroundSet));
  }
  return kDefaultMaxGroundSet;
}

namespace detail {

using Bits = std::bitset<kHardMaxGroundSet>;

/// Bron-Kerbosch over the compatibility graph, i.e. maximal conflict-free
/// sets, pruned by conditions every cluster tilting subcategory satisfies.
class CtSearch {
 public:
  CtSearch(const Algebra& A, int n, Mode mode, const ExtTable& table)
      : A_(A), n_(n), mode_(mode), table_(table), mods_(indecomposables(A)) {
    const int N = table.size();
    const ModuleIndex& idx = table.index();
    conflict_.resize(N);
    left_.resize(N);
    right_.resize(N);
    omega_n_.assign(N, -1);
    for (int x = 0; x < N; ++x)
      for (int y = 0; y < N; ++y) {
        if (table.nonzero_below(x, y, n)) {
          conflict_[x].set(y);
          conflict_[y].set(x);
          left_[y].set(x);
          right_[x].set(y);
        }
      }
    for (int x = 0; x < N; ++x) {
      all_.set(x);
      if (is_projective(A, mods_[x])) proj_.set(x);
      if (mode == Mode::NZ && !proj_[x])
        if (auto y = omega(A, mods_[x], n)) omega_n_[x] = idx(*y);
    }
    for (const Indec& p : projectives(A)) base_.set(idx(p));
    for (const Indec& q : injectives(A)) base_.set(idx(q));
  }

  std::vector<Subcategory> run() {
    const int N = table_.size();
    for (int x = 0; x < N; ++x)
      if (base_[x] && (conflict_[x] & base_).any()) return {};
    Bits cand;
    for (int x = 0; x < N; ++x)
      if (!base_[x] && !conflict_[x][x] && !(conflict_[x] & base_).any()) cand.set(x);
    order_.clear();
    for (int x = 0; x < N; ++x)
      if (cand[x]) order_.push_back(x);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return (conflict_[a] & cand).count() > (conflict_[b] & cand).count();
    });
    expand(base_, cand, Bits{});
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  bool feasible(const Bits& r, const Bits& p) const {
    const Bits reach = r | p;
    const Bits outside = all_ & ~reach;
    for (int z = 0; z < table_.size(); ++z) {
      if (!outside[z]) continue;
      if (!(left_[z] & reach).any() || !(right_[z] & reach).any()) return false;
    }
    if (mode_ == Mode::NZ)
      for (int x = 0; x < table_.size(); ++x)
        if (r[x] && omega_n_[x] >= 0 && !reach[omega_n_[x]]) return false;
    return true;
  }

  void expand(const Bits& r, Bits p, Bits x) {
    if (!feasible(r, p)) return;
    if (p.none()) {
      if (x.none()) report(r);
      return;
    }
    // Tomita pivot: the vertex of p|x compatible with most of p.
    int pivot = -1;
    size_t best = 0;
    for (int u : order_) {
      if (!p[u] && !x[u]) continue;
      const size_t k = (p & ~conflict_[u]).count();
      if (pivot < 0 || k > best) {
        pivot = u;
        best = k;
      }
    }
    const Bits skip = pivot >= 0 ? (p & ~conflict_[pivot]) : Bits{};
    for (int v : order_) {
      if (!p[v] || (skip[v] && v != pivot)) continue;
      Bits r2 = r;
      r2.set(v);
      const Bits compat = ~conflict_[v];
      Bits p2 = p & compat;
      p2.reset(v);
      expand(r2, p2, x & compat);
      p.reset(v);
      x.set(v);
    }
  }

  void report(const Bits& r) {
    std::vector<Indec> members;
    for (int x = 0; x < table_.size(); ++x)
      if (r[x]) members.push_back(mods_[x]);
    Subcategory c(std::move(members));
    if (verify_ct(A_, c, n_, mode_, &table_).verdict) found_.push_back(std::move(c));
  }

  const Algebra& A_;
  int n_;
  Mode mode_;
  const ExtTable& table_;
  std::vector<Indec> mods_;
  std::vector<Bits> conflict_, left_, right_;
  std::vector<int> omega_n_;
  Bits all_, proj_, base_;
  std::vector<int> order_;
  std::vector<Subcategory> found_;
};

}  // namespace detail

/// All n- (or nZ-) cluster tilting subcategories, sorted lexicographically.
inline std::vector<Subcategory> enumerate_ct(const Algebra& A, int n, Mode mode,
                                             const ExtTable* table = nullptr,
                                             int max_ground = max_ground_set()) {
  if (n < 2) throw Error(ErrorCode::InvalidParameter, "n must be >= 2");
  const int N = A.num_indecomposables();
  if (N > max_ground || N > kHardMaxGroundSet)
    throw Error(ErrorCode::GroundSetTooLarge,
                "ground set of " + std::to_string(N) + " indecomposables exceeds the bound " +
                    std::to_string(std::min(max_ground, kHardMaxGroundSet)));
  std::unique_ptr<ExtTable> own;
  if (!table || table->max_degree() < n - 1) {
    own = std::make_unique<ExtTable>(A, n - 1);
    table = own.get();
  }
  return detail::CtSearch(A, n, mode, *table).run();
}

}  // namespace nakct
