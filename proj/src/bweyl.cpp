#include "qba/bweyl.hpp"

#include <map>
#include <string>
#include <vector>

#include "qba/diffops.hpp"
#include "qba/error.hpp"

namespace qba {

// --- bases and coefficient containers -------------------------------------

RingBasis left_kind(OpBasis b) {
  switch (b) {
    case OpBasis::MY:
    case OpBasis::MS: return RingBasis::M;
    case OpBasis::XY:
    case OpBasis::XS: return RingBasis::X;
    case OpBasis::WY:
    case OpBasis::WS: return RingBasis::W;
  }
  return RingBasis::X;
}

RightKind right_kind(OpBasis b) {
  switch (b) {
    case OpBasis::MY:
    case OpBasis::XY:
    case OpBasis::WY: return RightKind::Y;
    default: return RightKind::S;
  }
}

OpBasis make_op_basis(RingBasis left, RightKind right) {
  const bool y = right == RightKind::Y;
  switch (left) {
    case RingBasis::M: return y ? OpBasis::MY : OpBasis::MS;
    case RingBasis::X: return y ? OpBasis::XY : OpBasis::XS;
    case RingBasis::W: return y ? OpBasis::WY : OpBasis::WS;
  }
  return OpBasis::XY;
}

std::string_view to_string(OpBasis b) {
  switch (b) {
    case OpBasis::MY: return "MY";
    case OpBasis::XY: return "XY";
    case OpBasis::WY: return "WY";
    case OpBasis::MS: return "MS";
    case OpBasis::XS: return "XS";
    case OpBasis::WS: return "WS";
  }
  return "?";
}

OpBasis parse_op_basis(std::string_view name) {
  for (OpBasis b : kAllOpBases)
    if (name == to_string(b)) return b;
  throw BasisError("unknown operator basis '" + std::string(name) + "'");
}

void toggle(TermSet& terms, Term t) {
  auto [it, inserted] = terms.insert(t);
  if (!inserted) terms.erase(it);
}

OpCoeffs::OpCoeffs(unsigned n, OpBasis basis) : n_(n), basis_(basis) { check_dim(n); }

OpCoeffs::OpCoeffs(unsigned n, OpBasis basis, TermSet terms)
    : n_(n), basis_(basis), terms_(std::move(terms)) {
  check_dim(n);
  for (const Term& t : terms_) {
    check_subset(t.left, n);
    check_subset(t.right, n);
  }
}

OpCoeffs op_zero(unsigned n, OpBasis basis) { return OpCoeffs(n, basis); }

OpCoeffs op_identity(unsigned n, OpBasis basis) {
  return convert_op_basis(op_monomial(n, OpBasis::XY, Subset{}, Subset{}), basis);
}

OpCoeffs op_monomial(unsigned n, OpBasis basis, Subset left, Subset right) {
  return OpCoeffs(n, basis, TermSet{{left, right}});
}

// --- conversions ------------------------------------------------------------

OpCoeffs convert_op_basis(const OpCoeffs& f, OpBasis target) {
  if (f.basis() == target) return f;
  const unsigned n = f.dim();
  const std::size_t side = std::size_t{1} << n;

  // Dense grid: one left-index vector per right index.
  std::vector<BitVector> rows(side, BitVector(side));
  for (const Term& t : f.terms()) rows[t.right.index()].set(t.left.index(), true);

  const RingBasis from_left = left_kind(f.basis());
  const RingBasis to_left = left_kind(target);
  if (from_left != to_left)
    for (auto& r : rows) r = convert_coeffs(r, from_left, to_left);

  // y^b = sum_{a in b} s^a and s^b = sum_{a in b} y^a: superset sums on the right index.
  if (right_kind(f.basis()) != right_kind(target)) {
    for (unsigned i = 0; i < n; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      for (std::size_t r = 0; r < side; ++r)
        if (!(r & bit)) rows[r] ^= rows[r | bit];
    }
  }

  TermSet terms;
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t l = rows[r].find_next(0); l < side; l = rows[r].find_next(l + 1))
      terms.insert({Subset(static_cast<std::uint32_t>(l)), Subset(static_cast<std::uint32_t>(r))});
  return OpCoeffs(n, target, std::move(terms));
}

Gf2Matrix to_matrix(const OpCoeffs& f) {
  const unsigned n = f.dim();
  const std::size_t side = std::size_t{1} << n;
  const RingBasis lk = left_kind(f.basis());
  const RightKind rk = right_kind(f.basis());

  // sum_{a,b} L^a R^b = sum_b (sum_a L^a) R^b
  std::map<Subset, std::vector<Subset>> by_right;
  for (const Term& t : f.terms()) by_right[t.right].push_back(t.left);

  Gf2Matrix out(side, side);
  for (const auto& [b, lefts] : by_right) {
    Gf2Matrix right = Gf2Matrix::identity(side);
    for (unsigned i : elements(b))
      right = mat_mul(right, rk == RightKind::Y ? derivative_matrix(i, n) : shift_matrix(i, n));
    const RingElem left = RingElem::from_support(n, lk, lefts);
    out += mat_mul(multiplication_matrix(left), right);
  }
  return out;
}

// --- products ---------------------------------------------------------------

bool structural_coeff_c(Subset a, Subset b, Subset c, Subset d, Subset e, Subset h) {
  bool parity = false;
  for_each_subset_of(b & c, [&](Subset k2) {
    if ((a | (c - k2)) != e) return;
    for_each_subset_of(k2, [&](Subset k1) {
      if ((b - k1) == (h - d)) parity = !parity;
    });
  });
  return parity;
}

OpCoeffs op_add(const OpCoeffs& f, const OpCoeffs& g) {
  if (f.dim() != g.dim()) throw DimensionError("op_add: dimension mismatch");
  const OpCoeffs h = convert_op_basis(g, f.basis());
  TermSet terms = f.terms();
  for (const Term& t : h.terms()) toggle(terms, t);
  return OpCoeffs(f.dim(), f.basis(), std::move(terms));
}

namespace {

// (fg)_m(a,e) = sum f_m(a,b) g_m(c,d) over d in e, e \ d in a+c in b.
TermSet mul_my(const TermSet& f, const TermSet& g) {
  TermSet out;
  for (const Term& ft : f)
    for (const Term& gt : g) {
      const Subset sum = ft.left ^ gt.left;
      if (!sum.subset_of(ft.right)) continue;
      for_each_subset_of(sum - gt.right, [&](Subset t) { toggle(out, {ft.left, gt.right | t}); });
    }
  return out;
}

// (fg)_x(e,h) = sum c(a,b,c,d,e,h) f_x(a,b) g_x(c,d) over a in e, d in h.
TermSet mul_xy(const TermSet& f, const TermSet& g) {
  TermSet out;
  std::set<Term> candidates;
  for (const Term& ft : f)
    for (const Term& gt : g) {
      const Subset a = ft.left, b = ft.right, c = gt.left, d = gt.right;
      // Every (e, h) with a nonzero constant arises from some chain k1 in k2 in b n c.
      candidates.clear();
      for_each_subset_of(b & c, [&](Subset k2) {
        for_each_subset_of(k2, [&](Subset k1) {
          const Subset rest = b - k1;
          if (!(rest & d).empty()) return;  // y_i^2 = 0
          candidates.insert({a | (c - k2), rest | d});
        });
      });
      for (const Term& eh : candidates)
        if (d.subset_of(eh.right) && structural_coeff_c(a, b, c, d, eh.left, eh.right)) toggle(out, eh);
    }
  return out;
}

// (fg)_{m,s}(a,b) = sum_c f_{m,s}(a,c) g_{m,s}(a+c, b+c).
TermSet mul_ms(const TermSet& f, const TermSet& g) {
  std::map<Subset, std::vector<Subset>> g_by_left;
  for (const Term& t : g) g_by_left[t.left].push_back(t.right);
  TermSet out;
  for (const Term& ft : f) {
    auto it = g_by_left.find(ft.left ^ ft.right);
    if (it == g_by_left.end()) continue;
    for (Subset d : it->second) toggle(out, {ft.left, d ^ ft.right});
  }
  return out;
}

// (fg)_{x,s}(e,h) = sum O{k in b n c | a u c \ k = e} f_{x,s}(a,b) g_{x,s}(c, b+h).
TermSet mul_xs(const TermSet& f, const TermSet& g) {
  TermSet out;
  for (const Term& ft : f)
    for (const Term& gt : g) {
      const Subset h = ft.right ^ gt.right;
      for_each_subset_of(ft.right & gt.left, [&](Subset k) { toggle(out, {ft.left | (gt.left - k), h}); });
    }
  return out;
}

}  // namespace

OpCoeffs op_mul(const OpCoeffs& f, const OpCoeffs& g) {
  if (f.dim() != g.dim()) throw DimensionError("op_mul: dimension mismatch");
  const OpCoeffs h = convert_op_basis(g, f.basis());
  TermSet terms;
  switch (f.basis()) {
    case OpBasis::MY: terms = mul_my(f.terms(), h.terms()); break;
    // The W bases share the X structure constants: w_i = x_i + 1 satisfies
    // the same relations with y_i and s_i as x_i does.
    case OpBasis::XY:
    case OpBasis::WY: terms = mul_xy(f.terms(), h.terms()); break;
    case OpBasis::MS: terms = mul_ms(f.terms(), h.terms()); break;
    case OpBasis::XS:
    case OpBasis::WS: terms = mul_xs(f.terms(), h.terms()); break;
  }
  return OpCoeffs(f.dim(), f.basis(), std::move(terms));
}

OpCoeffs op_power(const OpCoeffs& f, unsigned k) {
  if (k == 0) throw Error("op_power: exponent must be positive");
  OpCoeffs result = f;
  OpCoeffs base = f;
  --k;
  while (k) {
    if (k & 1u) result = op_mul(result, base);
    k >>= 1;
    if (k) base = op_mul(base, base);
  }
  return result;
}

// --- normal ordering --------------------------------------------------------

namespace {

// Expands a left letter into x-monomials: w^c = sum_{d in c} x^d, m^c = sum_{c in d} x^d.
std::vector<Subset> x_expansion(const Generator& g, unsigned n) {
  std::vector<Subset> out;
  switch (g.kind) {
    case GenKind::X: out.push_back(g.mask); break;
    case GenKind::W: for_each_subset_of(g.mask, [&](Subset d) { out.push_back(d); }); break;
    case GenKind::M: for_each_superset_of(g.mask, n, [&](Subset d) { out.push_back(d); }); break;
    default: break;
  }
  return out;
}

}  // namespace

OpCoeffs normal_order(std::span<const Generator> word, unsigned n) {
  check_dim(n);
  bool has_y = false, has_s = false;
  for (const Generator& g : word) {
    check_subset(g.mask, n);
    has_y |= g.kind == GenKind::Y;
    has_s |= g.kind == GenKind::S;
  }
  if (has_y && has_s) throw BasisError("normal_order: word mixes y and s letters");
  const bool shifted = has_s;

  TermSet current{{Subset{}, Subset{}}};
  for (const Generator& g : word) {
    TermSet next;
    for (const Term& t : current) {
      const Subset a = t.left, b = t.right;
      if (g.kind == GenKind::Y) {
        if ((b & g.mask).empty()) toggle(next, {a, b | g.mask});
      } else if (g.kind == GenKind::S) {
        toggle(next, {a, b ^ g.mask});
      } else {
        for (Subset c : x_expansion(g, n)) {
          if (shifted) {
            // s^b x^c = sum_{k in b n c} x^{c \ k} s^b
            for_each_subset_of(b & c, [&](Subset k) { toggle(next, {a | (c - k), b}); });
          } else {
            // y^b x^c = sum_{k1 in k2 in b n c} x^{c \ k2} y^{b \ k1}
            for_each_subset_of(b & c, [&](Subset k2) {
              for_each_subset_of(k2, [&](Subset k1) { toggle(next, {a | (c - k2), b - k1}); });
            });
          }
        }
      }
    }
    current = std::move(next);
  }
  return OpCoeffs(n, shifted ? OpBasis::XS : OpBasis::XY, std::move(current));
}

}  // namespace qba
