#include "qba/diffops.hpp"

#include "qba/error.hpp"

namespace qba {

namespace {

void check_index(unsigned i, unsigned n) {
  check_dim(n);
  if (i < 1 || i > n)
    throw DimensionError("generator index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
}

std::size_t side(unsigned n) { return std::size_t{1} << n; }

}  // namespace

Gf2Matrix derivative_matrix(unsigned i, unsigned n) {
  check_index(i, n);
  const std::size_t e = Subset::singleton(i).index();
  Gf2Matrix m(side(n), side(n));
  for (std::size_t a = 0; a < side(n); ++a) {
    m.set(a, a, true);
    m.set(a, a ^ e, true);
  }
  return m;
}

Gf2Matrix shift_matrix(unsigned i, unsigned n) {
  check_index(i, n);
  const std::size_t e = Subset::singleton(i).index();
  Gf2Matrix m(side(n), side(n));
  for (std::size_t a = 0; a < side(n); ++a) m.set(a, a ^ e, true);
  return m;
}

Gf2Matrix multiplication_matrix(const RingElem& f) {
  const RingElem values = convert(f, RingBasis::M);
  Gf2Matrix m(side(f.dim()), side(f.dim()));
  for (Subset a : values.support()) m.set(a.index(), a.index(), true);
  return m;
}

Gf2Matrix x_to_m_matrix(unsigned n) {
  check_dim(n);
  Gf2Matrix m(side(n), side(n));
  for (std::size_t c = 0; c < side(n); ++c)
    for_each_subset_of(Subset(static_cast<std::uint32_t>(c)), [&](Subset a) { m.set(c, a.index(), true); });
  return m;
}

Gf2Matrix rep_matrix(RingBasis left, RightKind right, Subset a, Subset b, unsigned n) {
  check_dim(n);
  check_subset(a, n);
  check_subset(b, n);
  Gf2Matrix m(side(n), side(n));
  for (std::uint32_t ci = 0; ci < side(n); ++ci) {
    for (std::uint32_t di = 0; di < side(n); ++di) {
      const Subset c(ci), d(di);
      bool bit = false;
      if (left == RingBasis::M && right == RightKind::Y) {
        bit = c == a && (d ^ a).subset_of(b);
      } else if (left == RingBasis::X && right == RightKind::Y) {
        bit = c == (a | (d - b)) && b.subset_of(d);
      } else if (left == RingBasis::M && right == RightKind::S) {
        bit = c == a && d == (a ^ b);
      } else if (left == RingBasis::X && right == RightKind::S) {
        for_each_subset_of(b & d, [&](Subset e) {
          if (c == (a | (d - e))) bit = !bit;
        });
      } else {
        throw BasisError("rep_matrix: left factor must be M or X");
      }
      if (bit) m.set(ci, di, true);
    }
  }
  return m;
}

RingElem apply_coeffs(const OpCoeffs& d, const RingElem& f) {
  if (d.dim() != f.dim()) throw DimensionError("apply_coeffs: dimension mismatch");
  const unsigned n = d.dim();
  const RingBasis lk = left_kind(d.basis());
  const RightKind rk = right_kind(d.basis());
  const RingElem src = convert(f, lk);
  BitVector out(side(n));

  if (lk == RingBasis::M) {
    // Df(a) = sum_{e in b} D(a,b) f(a+e)   or   Df(a) = sum_b D(a,b) f(a+b)
    for (const Term& t : d.terms()) {
      bool acc = false;
      if (rk == RightKind::Y) {
        for_each_subset_of(t.right, [&](Subset e) { acc ^= src.coeff(t.left ^ e); });
      } else {
        acc = src.coeff(t.left ^ t.right);
      }
      if (acc) out.flip(t.left.index());
    }
    return RingElem(n, RingBasis::M, std::move(out));
  }

  // X-left formulas; with w-coordinates on both sides they describe the
  // W-left bases as well, since w_i obeys the same relations as x_i.
  const auto fsupp = src.support();
  for (const Term& t : d.terms()) {
    for (Subset c : fsupp) {
      if (rk == RightKind::Y) {
        // sum over b in c of x^{a u (c \ b)}
        if (t.right.subset_of(c)) out.flip((t.left | (c - t.right)).index());
      } else {
        // sum over e in b n c of x^{a u (c \ e)}
        for_each_subset_of(t.right & c, [&](Subset e) { out.flip((t.left | (c - e)).index()); });
      }
    }
  }
  return RingElem(n, lk, std::move(out));
}

}  // namespace qba
