#pragma once

#include "qba/gf2.hpp"
#include "qba/opcoeffs.hpp"
#include "qba/ring.hpp"

namespace qba {

// Operator matrices act on M-basis coordinates (function values) unless noted.

/// Matrix of the Boolean derivative d_i f(x) = f(x + e_i) + f(x).
Gf2Matrix derivative_matrix(unsigned i, unsigned n);
/// Matrix of the shift s_i f(x) = f(x + e_i).
Gf2Matrix shift_matrix(unsigned i, unsigned n);
/// Diagonal matrix of multiplication by f.
Gf2Matrix multiplication_matrix(const RingElem& f);

/// Change of coordinates from X-basis to M-basis: entry (c, a) = [a subset of c].
/// It is an involution, so it also maps M-coordinates back to X-coordinates.
Gf2Matrix x_to_m_matrix(unsigned n);

/// Matrix of a single monomial operator read straight off its combinatorial rule:
///   (M, Y)  m^a d^b  on the m-basis:  1 iff c = a and d + a is a subset of b
///   (X, Y)  x^a d^b  on the x-basis:  1 iff c = a u (d \ b) and b is a subset of d
///   (M, S)  m^a s^b  on the m-basis:  1 iff c = a and d = a + b
///   (X, S)  x^a s^b  on the x-basis:  parity of { e in b n d : c = a u (d \ e) }
/// For left = X the result acts on X-basis coordinate vectors.
Gf2Matrix rep_matrix(RingBasis left, RightKind right, Subset a, Subset b, unsigned n);

/// Applies D to f by the closed-form coordinate formulas.
///
/// MY and MS use f's M-coordinates and return an M-basis element; XY and XS
/// use X-coordinates and return an X-basis element. WY and WS use the XY/XS
/// formulas on W-coordinates (substituting w_i for x_i) and return a W-basis
/// element. `f` is converted to the matching ring basis first.
RingElem apply_coeffs(const OpCoeffs& d, const RingElem& f);

}  // namespace qba
