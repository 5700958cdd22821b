#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "qba/bitvector.hpp"
#include "qba/subset.hpp"

namespace qba {

/// The three bases of Z_2[A^n]: point indicators m^a, monomials x^a = prod x_i,
/// and complemented monomials w^a = prod (x_i + 1).
enum class RingBasis { M, X, W };

std::string_view to_string(RingBasis b);
RingBasis parse_ring_basis(std::string_view name);

/// An element of Z_2[A^n]: 2^n coefficients in one of the three bases.
class RingElem {
 public:
  /// The zero element.
  RingElem(unsigned n, RingBasis basis);
  /// Takes ownership of `coeffs`, which must have exactly 2^n entries.
  RingElem(unsigned n, RingBasis basis, BitVector coeffs);
  /// Builds the element whose coefficient is 1 exactly on `support`.
  static RingElem from_support(unsigned n, RingBasis basis, std::span<const Subset> support);

  unsigned dim() const noexcept { return n_; }
  RingBasis basis() const noexcept { return basis_; }
  const BitVector& coeffs() const noexcept { return coeffs_; }
  bool coeff(Subset a) const { return coeffs_.get(a.index()); }
  bool is_zero() const { return !coeffs_.any(); }
  /// Subsets with coefficient 1, ascending by integer index.
  std::vector<Subset> support() const;

  /// Coefficient-wise equality; both the basis tag and the coefficients must match.
  bool operator==(const RingElem&) const = default;

 private:
  unsigned n_;
  RingBasis basis_;
  BitVector coeffs_;
};

/// out(b) = XOR of in(a) over a subset of b. Throws ShapeError unless the length is a power of two.
BitVector subset_sum_transform(BitVector v);
/// out(a) = XOR of in(b) over b superset of a.
BitVector superset_sum_transform(BitVector v);
/// out(a) = in(complement of a); reverses the index order.
BitVector complement_reindex(const BitVector& v);

/// Re-expresses raw coefficients of length 2^n from one ring basis in another.
BitVector convert_coeffs(const BitVector& v, RingBasis from, RingBasis to);

RingElem convert(const RingElem& f, RingBasis target);

/// The basis element m^a, x^a or w^a, tagged with its own basis.
RingElem ring_monomial(RingBasis kind, Subset a, unsigned n);
RingElem ring_one(unsigned n, RingBasis basis = RingBasis::X);
/// The coordinate function x_i.
RingElem coordinate(unsigned i, unsigned n);

RingElem ring_add(const RingElem& f, const RingElem& g);
/// Product in the basis of `f`: pointwise in M, cover product in X and W.
RingElem ring_mul(const RingElem& f, const RingElem& g);
bool ring_eval(const RingElem& f, Subset point);
/// True iff the two elements define the same function.
bool same_function(const RingElem& f, const RingElem& g);

/// Parity of the number of ordered k-tuples (c_1..c_k) in C^k with c_1 u ... u c_k = a.
bool k_cover_parity(std::span<const Subset> family, Subset a, unsigned k);

}  // namespace qba
