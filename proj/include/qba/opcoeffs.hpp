#pragma once

#include <compare>
#include <set>
#include <string_view>

#include "qba/ring.hpp"
#include "qba/subset.hpp"

namespace qba {

/// Right-hand generator family: Boolean derivatives y_i or shifts s_i.
enum class RightKind { Y, S };

/// The six bases of the operator algebra: left factor m/x/w, right factor y/s.
enum class OpBasis { MY, XY, WY, MS, XS, WS };

inline constexpr OpBasis kAllOpBases[] = {OpBasis::MY, OpBasis::XY, OpBasis::WY,
                                          OpBasis::MS, OpBasis::XS, OpBasis::WS};

RingBasis left_kind(OpBasis b);
RightKind right_kind(OpBasis b);
OpBasis make_op_basis(RingBasis left, RightKind right);
std::string_view to_string(OpBasis b);
OpBasis parse_op_basis(std::string_view name);

/// One basis monomial L^left R^right.
struct Term {
  Subset left;
  Subset right;
  constexpr auto operator<=>(const Term&) const = default;
};

/// Sparse set of monomials with coefficient 1, ordered by (left, right) as integers.
using TermSet = std::set<Term>;

/// Adds `t` with coefficient 1 over GF(2): inserts it, or cancels an existing copy.
void toggle(TermSet& terms, Term t);

/// An element of the Boole-Weyl algebra in one of the six bases.
class OpCoeffs {
 public:
  /// The zero operator.
  OpCoeffs(unsigned n, OpBasis basis);
  /// Throws DimensionError if a mask does not fit n.
  OpCoeffs(unsigned n, OpBasis basis, TermSet terms);

  unsigned dim() const noexcept { return n_; }
  OpBasis basis() const noexcept { return basis_; }
  const TermSet& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool coeff(Subset left, Subset right) const { return terms_.contains({left, right}); }

  bool operator==(const OpCoeffs&) const = default;

 private:
  unsigned n_;
  OpBasis basis_;
  TermSet terms_;
};

}  // namespace qba
