#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace coxcfg {

/// Largest ground set for which whole structures are materialized.
inline constexpr int kMaxGroundSize = 16;

/// A finite subset of the ground set {0, ..., n-1}, stored as a bit word.
///
/// Ordering is canonical: first by cardinality, then by the numeric value of
/// the bit word. Every built structure lists its points and blocks in this
/// order.
class Subset {
 public:
  using Bits = std::uint32_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Bits bits) : bits_(bits) {}

  /// Builds a subset from 0-based elements.
  static Subset of(std::initializer_list<int> elements);
  static Subset of(const std::vector<int>& elements);
  /// {0, ..., n-1}
  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~Bits{0} : ((Bits{1} << n) - 1));
  }
  static constexpr Subset singleton(int e) { return Subset(Bits{1} << e); }

  constexpr Bits bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool even() const { return size() % 2 == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  /// All set bits are below n.
  constexpr bool within(int n) const { return n >= 32 || (bits_ >> n) == 0; }

  constexpr Subset with(int e) const { return Subset(bits_ | (Bits{1} << e)); }
  constexpr Subset without(int e) const { return Subset(bits_ & ~(Bits{1} << e)); }
  /// Toggles membership of e.
  constexpr Subset flip(int e) const { return Subset(bits_ ^ (Bits{1} << e)); }

  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  /// Direct successor relation: this is a proper subset of `other` with one element fewer.
  constexpr bool directly_below(Subset other) const {
    return subset_of(other) && other.size() == size() + 1;
  }
  /// Covering in either direction (the Cox incidence).
  constexpr bool adjacent(Subset other) const { return std::popcount(bits_ ^ other.bits_) == 1; }

  /// Elements in increasing order.
  std::vector<int> elements() const;
  /// Smallest element; undefined on the empty set.
  constexpr int min_element() const { return std::countr_zero(bits_); }

  friend constexpr Subset operator^(Subset a, Subset b) { return Subset(a.bits_ ^ b.bits_); }
  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }

  friend constexpr bool operator==(Subset a, Subset b) = default;
  friend constexpr std::strong_ordering operator<=>(Subset a, Subset b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  Bits bits_ = 0;
};

/// Symmetric difference, the translation tau_A(Z) = A -: Z.
constexpr Subset symmetric_difference(Subset a, Subset b) { return a ^ b; }

/// 1-based text form: "{}" or "{1,3,4}".
std::string to_string(Subset s);
/// Inverse of to_string; throws std::invalid_argument on malformed input.
Subset parse_subset(std::string_view text);

/// All k-subsets of {0..n-1}, canonical order.
std::vector<Subset> subsets_of_size(int n, int k);
/// All subsets of {0..n-1} of the given parity (0 = even, 1 = odd), canonical order.
std::vector<Subset> subsets_of_parity(int n, int parity);
/// All subsets of `ground`, canonical order.
std::vector<Subset> subsets_of(Subset ground);

}  // namespace coxcfg

template <>
struct std::hash<coxcfg::Subset> {
  std::size_t operator()(coxcfg::Subset s) const noexcept { return std::hash<std::uint32_t>{}(s.bits()); }
};
