#pragma once

#include <span>
#include <vector>

#include "qba/gf2.hpp"
#include "qba/opcoeffs.hpp"

namespace qba {

OpCoeffs op_zero(unsigned n, OpBasis basis);
OpCoeffs op_identity(unsigned n, OpBasis basis = OpBasis::XY);
OpCoeffs op_monomial(unsigned n, OpBasis basis, Subset left, Subset right);

/// Re-expresses f in `target`; the operator is unchanged.
OpCoeffs convert_op_basis(const OpCoeffs& f, OpBasis target);

/// The operator as a matrix on M-basis coordinates, assembled from generator
/// matrices (multiplication operators on the left, products of d_i or s_i on the right).
Gf2Matrix to_matrix(const OpCoeffs& f);

/// XY structure constant: parity of the chains k1 in k2 in b n c with
/// a u (c \ k2) = e and b \ k1 = h \ d.
bool structural_coeff_c(Subset a, Subset b, Subset c, Subset d, Subset e, Subset h);

OpCoeffs op_add(const OpCoeffs& f, const OpCoeffs& g);

/// Product fg (apply g first, then f). `g` is converted into f's basis and
/// the coefficients come from that basis' structure formula.
OpCoeffs op_mul(const OpCoeffs& f, const OpCoeffs& g);

/// f^k for k >= 1 by binary exponentiation.
OpCoeffs op_power(const OpCoeffs& f, unsigned k);

/// Letters accepted by normal_order. A letter carries a mask, so x{1,2} is x_1 x_2;
/// m{c} is the point indicator m^c.
enum class GenKind { X, W, M, Y, S };

struct Generator {
  GenKind kind;
  Subset mask;
};

/// Rewrites a word into left-factors-first canonical form using the
/// commutation rules. Returns XY if the word uses y letters (or none of y/s),
/// XS if it uses s letters; mixing y and s throws BasisError.
OpCoeffs normal_order(std::span<const Generator> word, unsigned n);

}  // namespace qba
