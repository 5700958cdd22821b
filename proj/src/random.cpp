#include "qba/random.hpp"

namespace qba {

Subset random_subset(Rng& rng, unsigned n) {
  return Subset(static_cast<std::uint32_t>(rng() & Subset::full(n).bits));
}

BitVector random_bits(Rng& rng, std::size_t len) {
  BitVector v(len);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (i % 64 == 0) word = rng();
    if ((word >> (i % 64)) & 1u) v.set(i, true);
  }
  return v;
}

RingElem random_ring_elem(Rng& rng, unsigned n, RingBasis basis) {
  return RingElem(n, basis, random_bits(rng, std::size_t{1} << n));
}

OpCoeffs random_op(Rng& rng, unsigned n, OpBasis basis, double density) {
  std::bernoulli_distribution keep(density);
  const std::uint32_t side = std::uint32_t{1} << n;
  TermSet terms;
  for (std::uint32_t l = 0; l < side; ++l)
    for (std::uint32_t r = 0; r < side; ++r)
      if (keep(rng)) terms.insert({Subset(l), Subset(r)});
  return OpCoeffs(n, basis, std::move(terms));
}

Family random_family(Rng& rng, unsigned n, double density) {
  std::bernoulli_distribution keep(density);
  const std::uint32_t side = std::uint32_t{1} << n;
  Family out{n, {}};
  for (std::uint32_t p = 0; p < side; ++p)
    for (std::uint32_t t = 0; t < side; ++t)
      if (keep(rng)) out.members.insert({Subset(p), Subset(t)});
  return out;
}

FamilyN random_family_n(Rng& rng, unsigned n, double density) {
  std::bernoulli_distribution keep(density);
  FamilyN out{n, {}};
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << n); ++a)
    if (keep(rng)) out.members.insert(Subset(a));
  return out;
}

}  // namespace qba
