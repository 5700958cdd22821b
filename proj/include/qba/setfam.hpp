#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>

#include "qba/opcoeffs.hpp"
#include "qba/ring.hpp"

namespace qba {

/// A subset a = a1 u ~a2 of [n] u [~n], stored as the pair (a1, a2).
struct PairedMask {
  Subset plain;
  Subset tilde;
  constexpr auto operator<=>(const PairedMask&) const = default;
};

/// A family of subsets of [n, ~n].
struct Family {
  unsigned n = 1;
  std::set<PairedMask> members;
  bool operator==(const Family&) const = default;
};

/// A family of subsets of [n].
struct FamilyN {
  unsigned n = 1;
  std::set<Subset> members;
  bool operator==(const FamilyN&) const = default;
};

/// Symmetric difference.
Family fam_add(const Family& a, const Family& b);

// The four products, each decided member by member by the parity of its
// defining tuple set, and the matching actions on families of subsets of [n].
// Under A -> sum over a in A of L^{a1} R^{a2} they realise operator composition:
//   circ   : m^{a1} d^{a2}    bullet : x^{a1} d^{a2}
//   star   : m^{a1} s^{a2}    ast    : x^{a1} s^{a2}
// and F -> sum of m^a (circ, star) or x^a (bullet, ast).

Family circ_prod(const Family& a, const Family& b);
FamilyN circ_act(const Family& a, const FamilyN& f);
Family bullet_prod(const Family& a, const Family& b);
FamilyN bullet_act(const Family& a, const FamilyN& f);
Family star_prod(const Family& a, const Family& b);
FamilyN star_act(const Family& a, const FamilyN& f);
Family ast_prod(const Family& a, const Family& b);
FamilyN ast_act(const Family& a, const FamilyN& f);

/// {a | a1 = a2 in A}.
Family hat_diagonal(const FamilyN& a);
/// {a | complement(a1) = a2 in A}.
Family tilde_antidiagonal(const FamilyN& a);

/// Family <-> coefficient bijection in a given operator basis.
OpCoeffs family_to_op(const Family& a, OpBasis basis);
Family op_to_family(const OpCoeffs& f);
RingElem family_to_ring(const FamilyN& f, RingBasis basis);
FamilyN ring_to_family(const RingElem& f);

/// Literal such as "{{1,2,~2,~3},{1}}"; the empty family is "{}".
std::string to_string(const Family& a);
std::string to_string(const FamilyN& f);
Family parse_family(std::string_view text, unsigned n);
FamilyN parse_family_n(std::string_view text, unsigned n);

}  // namespace qba
