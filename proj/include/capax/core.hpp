// Copyright 2026 The capax Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared vocabulary: value ranges, extended-real helpers, error types and
// the Subset bitset used to index every set function in the library.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace capax {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Absolute tolerance for equality-type structural checks.
inline constexpr double kStructuralTol = 1e-12;

/// The codomain Y of capacities, functions and operators.
enum class Range { Unit, ExtendedNonneg };

inline std::string_view to_string(Range r) {
  return r == Range::Unit ? "unit" : "extended";
}

// Unit is contained in ExtendedNonneg.
inline Range join(Range a, Range b) {
  return (a == Range::Unit && b == Range::Unit) ? Range::Unit : Range::ExtendedNonneg;
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated construction invariant (e.g. mu(X) = 0, non-monotone table).
class InvalidCapacity : public Error {
 public:
  using Error::Error;
};

/// Value outside the declared range, or incompatible ranges/spaces.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input on which a quantity is undefined (mu(A) = 0, zero normalizer).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// Extended-real product with 0 * inf = inf * 0 = 0.
inline double ext_mul(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

// Extended-real power for exponent > 0: 0^s = 0, inf^s = inf.
inline double ext_pow(double a, double s) {
  if (s == 1.0) return a;
  if (a == 0.0) return s > 0.0 ? 0.0 : kInf;
  if (std::isinf(a)) return s > 0.0 ? kInf : 0.0;
  return std::pow(a, s);
}

namespace detail {
// hi - lo with inf - inf read as 0.
inline double margin(double hi, double lo) {
  if (std::isinf(hi) && std::isinf(lo) && hi == lo) return 0.0;
  return hi - lo;
}
}  // namespace detail

inline bool in_range(double v, Range r) {
  if (std::isnan(v) || v < 0.0) return false;
  return r == Range::ExtendedNonneg || v <= 1.0;
}

/// Subset of the ground space {0, ..., n-1}, stored as a packed bitset.
///
/// Spaces of up to 64 points convert losslessly to and from an integer mask;
/// explicit capacity tables are indexed by that mask.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static Subset empty(std::size_t n) { return Subset(n); }

  static Subset full(std::size_t n) {
    Subset s(n);
    for (std::size_t i = 0; i < n; ++i) s.insert(i);
    return s;
  }

  static Subset from_mask(std::size_t n, std::uint64_t mask) {
    if (n > 64) throw DomainError("Subset::from_mask: n > 64");
    Subset s(n);
    if (n == 0) return s;
    const std::uint64_t keep = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    if (mask & ~keep) throw DomainError("Subset::from_mask: bits beyond n");
    s.words_[0] = mask;
    return s;
  }

  static Subset from_indices(std::size_t n, std::span<const std::size_t> idx) {
    Subset s(n);
    for (auto i : idx) {
      if (i >= n) throw DomainError("Subset index " + std::to_string(i) + " out of range");
      s.insert(i);
    }
    return s;
  }

  std::size_t universe() const { return n_; }

  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void erase(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  std::uint64_t mask() const {
    if (n_ > 64) throw DomainError("Subset::mask: n > 64");
    return words_.empty() ? 0 : words_[0];
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  bool subset_of(const Subset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  Subset& operator&=(const Subset& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Subset& operator|=(const Subset& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  void check_same(const Subset& o) const {
    if (o.n_ != n_) throw DomainError("Subset universes differ");
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace capax
