#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nakct {

/// Dense integer matrix stored row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}

  long long& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  long long operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

namespace detail {

struct Overflow {};

/// 64-bit integer that throws Overflow instead of wrapping.
struct CheckedInt {
  long long v = 0;

  CheckedInt() = default;
  CheckedInt(long long x) : v(x) {}

  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    long long r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    long long r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) { return a.v / b.v; }
  friend bool operator==(CheckedInt a, CheckedInt b) { return a.v == b.v; }
  friend bool operator!=(CheckedInt a, CheckedInt b) { return a.v != b.v; }
};

/// Fraction-free Bareiss elimination; every division is exact.
template <class T>
int bareiss_rank(int rows, int cols, std::vector<T> a) {
  auto at = [&](int r, int c) -> T& { return a[static_cast<size_t>(r) * cols + c]; };
  T prev = T(1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (at(r, col) != T(0)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = 0; c < cols; ++c) std::swap(at(piv, c), at(rank, c));
    const T p = at(rank, col);
    for (int r = rank + 1; r < rows; ++r) {
      const T f = at(r, col);
      for (int c = col + 1; c < cols; ++c)
        at(r, c) = (p * at(r, c) - f * at(rank, c)) / prev;
      at(r, col) = T(0);
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Exact rank over the rationals. Runs in checked 64-bit arithmetic and
/// restarts with arbitrary precision if an intermediate overflows.
inline int exact_rank(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  try {
    std::vector<detail::CheckedInt> a(m.data.begin(), m.data.end());
    return detail::bareiss_rank(m.rows, m.cols, std::move(a));
  } catch (const detail::Overflow&) {
    using boost::multiprecision::cpp_int;
    std::vector<cpp_int> a(m.data.begin(), m.data.end());
    return detail::bareiss_rank(m.rows, m.cols, std::move(a));
  }
}

}  // namespace nakct
