#pragma once

#include <cstdint>
#include <random>

#include "qba/bitvector.hpp"
#include "qba/opcoeffs.hpp"
#include "qba/ring.hpp"
#include "qba/setfam.hpp"

namespace qba {

using Rng = std::mt19937_64;

Subset random_subset(Rng& rng, unsigned n);
/// Each of the len bits is 1 with probability 1/2.
BitVector random_bits(Rng& rng, std::size_t len);
RingElem random_ring_elem(Rng& rng, unsigned n, RingBasis basis);
/// Each of the 4^n monomials present with probability `density`.
OpCoeffs random_op(Rng& rng, unsigned n, OpBasis basis, double density = 0.5);
Family random_family(Rng& rng, unsigned n, double density = 0.5);
FamilyN random_family_n(Rng& rng, unsigned n, double density = 0.5);

}  // namespace qba
