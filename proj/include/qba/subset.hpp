#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qba {

/// Largest supported number of variables.
inline constexpr unsigned kMaxDim = 16;

/// A subset of [n] = {1, ..., n}. Element i is stored in bit i-1, so the
/// integer index of a subset is the sum of 2^(i-1) over its elements.
///
/// Set operations follow the ring structure of Z_2^n: `^` is the symmetric
/// difference (the sum a + b), `&` the intersection (the product ab), `|` the
/// union and `-` the set difference.
struct Subset {
  std::uint32_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t b) : bits(b) {}

  static constexpr Subset full(unsigned n) { return Subset((std::uint32_t{1} << n) - 1); }
  static constexpr Subset singleton(unsigned i) { return Subset(std::uint32_t{1} << (i - 1)); }

  constexpr bool contains(unsigned i) const { return (bits >> (i - 1)) & 1u; }
  constexpr bool empty() const { return bits == 0; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits)); }
  constexpr bool subset_of(Subset other) const { return (bits & ~other.bits) == 0; }
  constexpr Subset complement(unsigned n) const { return Subset(~bits & full(n).bits); }
  constexpr std::size_t index() const { return bits; }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits | b.bits); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits & b.bits); }
  friend constexpr Subset operator^(Subset a, Subset b) { return Subset(a.bits ^ b.bits); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits & ~b.bits); }

  constexpr auto operator<=>(const Subset&) const = default;
};

/// The predicate O: true iff |a| is odd.
constexpr bool odd_parity(Subset a) { return (a.size() & 1u) != 0; }

constexpr bool valid_for(Subset a, unsigned n) { return (a.bits >> n) == 0; }

/// Throws DimensionError unless 1 <= n <= kMaxDim.
void check_dim(unsigned n);

/// Throws DimensionError unless `a` is a subset of [n].
void check_subset(Subset a, unsigned n);

/// Calls f(sub) for every sub of s, including the empty set and s itself.
template <typename F>
void for_each_subset_of(Subset s, F&& f) {
  std::uint32_t sub = s.bits;
  while (true) {
    f(Subset(sub));
    if (sub == 0) break;
    sub = (sub - 1) & s.bits;
  }
}

/// Calls f(sup) for every superset of s inside [n].
template <typename F>
void for_each_superset_of(Subset s, unsigned n, F&& f) {
  const Subset rest = s.complement(n);
  for_each_subset_of(rest, [&](Subset extra) { f(s | extra); });
}

/// Sorted 1-based elements of a.
std::vector<unsigned> elements(Subset a);

/// Set literal such as "{1,3}"; the empty set prints as "{}".
std::string to_string(Subset a);

/// Builds a subset from 1-based indices; throws DimensionError on index 0 or > kMaxDim.
Subset subset_from(const std::vector<unsigned>& elems);

/// Parses a literal of the form "{1,3}".
Subset parse_subset(std::string_view text);

}  // namespace qba
