#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "affchar/rat.hpp"

namespace affchar {

// Finite weights live in the fundamental-weight basis Lambda_1..Lambda_n.
// Rank is bounded by the largest supported family (E8).
inline constexpr int kMaxRank = 8;

struct FiniteWeight {
  std::array<int32_t, kMaxRank> c{};
  int8_t n = 0;

  FiniteWeight() = default;
  explicit FiniteWeight(int rank) : n(static_cast<int8_t>(rank)) {
    AFF_REQUIRE(rank >= 0 && rank <= kMaxRank, "rank out of range");
  }
  FiniteWeight(std::initializer_list<int> xs) {
    AFF_REQUIRE(xs.size() <= kMaxRank, "rank out of range");
    n = static_cast<int8_t>(xs.size());
    int i = 0;
    for (int x : xs) c[i++] = x;
  }
  static FiniteWeight from(const std::vector<Int>& xs) {
    AFF_REQUIRE(xs.size() <= kMaxRank, "rank out of range");
    FiniteWeight w(static_cast<int>(xs.size()));
    for (int i = 0; i < w.n; ++i) {
      AFF_REQUIRE(xs[i] >= INT32_MIN && xs[i] <= INT32_MAX, "coordinate out of range");
      w.c[i] = static_cast<int32_t>(xs[i]);
    }
    return w;
  }

  int rank() const { return n; }
  int32_t operator[](int i) const { return c[i]; }
  int32_t& operator[](int i) { return c[i]; }

  bool operator==(const FiniteWeight& o) const { return n == o.n && c == o.c; }
  // lexicographic order on coordinates
  bool operator<(const FiniteWeight& o) const {
    if (n != o.n) return n < o.n;
    for (int i = 0; i < n; ++i)
      if (c[i] != o.c[i]) return c[i] < o.c[i];
    return false;
  }

  FiniteWeight operator+(const FiniteWeight& o) const {
    FiniteWeight w(n);
    for (int i = 0; i < n; ++i) w.c[i] = c[i] + o.c[i];
    return w;
  }
  FiniteWeight operator-(const FiniteWeight& o) const {
    FiniteWeight w(n);
    for (int i = 0; i < n; ++i) w.c[i] = c[i] - o.c[i];
    return w;
  }
  FiniteWeight operator-() const {
    FiniteWeight w(n);
    for (int i = 0; i < n; ++i) w.c[i] = -c[i];
    return w;
  }
  bool is_zero() const {
    for (int i = 0; i < n; ++i)
      if (c[i] != 0) return false;
    return true;
  }
  // sum of fundamental-weight coordinates; the "height" used for test grids
  Int coord_sum() const {
    Int s = 0;
    for (int i = 0; i < n; ++i) s += c[i];
    return s;
  }
  std::string str() const;
};

struct FWHash {
  size_t operator()(const FiniteWeight& w) const {
    uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < w.n; ++i) {
      h ^= static_cast<uint32_t>(w.c[i]);
      h *= 1099511628211ull;
    }
    h ^= static_cast<uint64_t>(w.n);
    h *= 1099511628211ull;
    return static_cast<size_t>(h);
  }
};

// Element of P = P' + Z*Lambda_0 + Z*(1/a0)*delta: the finite part,
// the level (Lambda_0 coefficient) and the delta coefficient stored as
// an integer numerator over the fixed denominator a0 of the ambient type.
struct AffineWeight {
  FiniteWeight finite;
  Int level = 0;
  Int delta_num = 0;  // delta coefficient = delta_num / a0

  bool operator==(const AffineWeight& o) const {
    return finite == o.finite && level == o.level && delta_num == o.delta_num;
  }
  std::string str(Int a0) const;
};

}  // namespace affchar
