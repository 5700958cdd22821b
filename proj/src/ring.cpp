#include "qba/ring.hpp"

#include <bit>
#include <string>

#include "qba/error.hpp"

namespace qba {

namespace {

// Masks selecting positions whose bit i (i < 6) is clear, within one word.
constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

unsigned log2_length(const BitVector& v) {
  const std::size_t len = v.size();
  if (len == 0 || !std::has_single_bit(len))
    throw ShapeError("vector length " + std::to_string(len) + " is not a power of two");
  return static_cast<unsigned>(std::countr_zero(len));
}

// Butterfly over each of the n axes. `up` adds lower neighbours into upper ones
// (subset sums); otherwise upper into lower (superset sums).
BitVector lattice_transform(BitVector v, bool up) {
  const unsigned n = log2_length(v);
  auto words = v.words();
  for (unsigned i = 0; i < n; ++i) {
    if (i < 6) {
      const unsigned shift = 1u << i;
      for (auto& w : words) {
        if (up)
          w ^= (w & kLowHalf[i]) << shift;
        else
          w ^= (w >> shift) & kLowHalf[i];
      }
    } else {
      const std::size_t stride = std::size_t{1} << (i - 6);
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (j & stride) continue;
        if (up)
          words[j | stride] ^= words[j];
        else
          words[j] ^= words[j | stride];
      }
    }
  }
  return v;
}

unsigned dim_of(const BitVector& v) { return log2_length(v); }

}  // namespace

std::string_view to_string(RingBasis b) {
  switch (b) {
    case RingBasis::M: return "M";
    case RingBasis::X: return "X";
    case RingBasis::W: return "W";
  }
  return "?";
}

RingBasis parse_ring_basis(std::string_view name) {
  if (name == "M" || name == "m") return RingBasis::M;
  if (name == "X" || name == "x") return RingBasis::X;
  if (name == "W" || name == "w") return RingBasis::W;
  throw BasisError("unknown ring basis '" + std::string(name) + "'");
}

RingElem::RingElem(unsigned n, RingBasis basis)
    : n_(n), basis_(basis), coeffs_(std::size_t{1} << n) {
  check_dim(n);
}

RingElem::RingElem(unsigned n, RingBasis basis, BitVector coeffs)
    : n_(n), basis_(basis), coeffs_(std::move(coeffs)) {
  check_dim(n);
  if (coeffs_.size() != (std::size_t{1} << n))
    throw ShapeError("ring element needs 2^n coefficients");
}

RingElem RingElem::from_support(unsigned n, RingBasis basis, std::span<const Subset> support) {
  check_dim(n);
  BitVector v(std::size_t{1} << n);
  for (Subset a : support) {
    check_subset(a, n);
    v.flip(a.index());
  }
  return RingElem(n, basis, std::move(v));
}

std::vector<Subset> RingElem::support() const {
  std::vector<Subset> out;
  for (std::size_t i = coeffs_.find_next(0); i < coeffs_.size(); i = coeffs_.find_next(i + 1))
    out.emplace_back(static_cast<std::uint32_t>(i));
  return out;
}

BitVector subset_sum_transform(BitVector v) { return lattice_transform(std::move(v), true); }

BitVector superset_sum_transform(BitVector v) { return lattice_transform(std::move(v), false); }

BitVector complement_reindex(const BitVector& v) {
  const std::size_t len = v.size();
  log2_length(v);
  BitVector out(len);
  for (std::size_t i = v.find_next(0); i < len; i = v.find_next(i + 1)) out.set(len - 1 - i, true);
  return out;
}

BitVector convert_coeffs(const BitVector& v, RingBasis from, RingBasis to) {
  dim_of(v);
  if (from == to) return v;
  using B = RingBasis;
  // f_x(b) = sum_{a in b} f(a) and back; f_w(b) = sum_{a in b} f(~a);
  // f(b) = sum_{a in ~b} f_w(a); x <-> w by superset sums.
  if (from == B::M && to == B::X) return subset_sum_transform(v);
  if (from == B::X && to == B::M) return subset_sum_transform(v);
  if (from == B::M && to == B::W) return subset_sum_transform(complement_reindex(v));
  if (from == B::W && to == B::M) return complement_reindex(subset_sum_transform(v));
  return superset_sum_transform(v);  // X <-> W
}

RingElem convert(const RingElem& f, RingBasis target) {
  if (f.basis() == target) return f;
  return RingElem(f.dim(), target, convert_coeffs(f.coeffs(), f.basis(), target));
}

RingElem ring_monomial(RingBasis kind, Subset a, unsigned n) {
  const Subset one[] = {a};
  return RingElem::from_support(n, kind, one);
}

RingElem ring_one(unsigned n, RingBasis basis) {
  return convert(ring_monomial(RingBasis::X, Subset{}, n), basis);
}

RingElem coordinate(unsigned i, unsigned n) {
  if (i < 1 || i > n) throw DimensionError("coordinate index out of range");
  return ring_monomial(RingBasis::X, Subset::singleton(i), n);
}

RingElem ring_add(const RingElem& f, const RingElem& g) {
  if (f.dim() != g.dim()) throw DimensionError("ring_add: dimension mismatch");
  const RingElem h = convert(g, f.basis());
  return RingElem(f.dim(), f.basis(), f.coeffs() ^ h.coeffs());
}

RingElem ring_mul(const RingElem& f, const RingElem& g) {
  if (f.dim() != g.dim()) throw DimensionError("ring_mul: dimension mismatch");
  const unsigned n = f.dim();
  const RingElem h = convert(g, f.basis());
  if (f.basis() == RingBasis::M) return RingElem(n, RingBasis::M, f.coeffs() & h.coeffs());

  // x^a x^b = x^{a u b}, likewise for w: the cover product over supports.
  const auto fs = f.support();
  const auto gs = h.support();
  if (fs.size() * gs.size() > (std::size_t{1} << 22)) {
    const RingElem fm = convert(f, RingBasis::M);
    const RingElem gm = convert(h, RingBasis::M);
    return convert(RingElem(n, RingBasis::M, fm.coeffs() & gm.coeffs()), f.basis());
  }
  BitVector out(std::size_t{1} << n);
  for (Subset a : fs)
    for (Subset b : gs) out.flip((a | b).index());
  return RingElem(n, f.basis(), std::move(out));
}

bool ring_eval(const RingElem& f, Subset point) {
  check_subset(point, f.dim());
  return convert(f, RingBasis::M).coeff(point);
}

bool same_function(const RingElem& f, const RingElem& g) {
  return f.dim() == g.dim() && convert(f, RingBasis::M) == convert(g, RingBasis::M);
}

bool k_cover_parity(std::span<const Subset> family, Subset a, unsigned k) {
  if (k == 0) throw Error("k_cover_parity: k must be positive");
  // Only members inside a can take part in a cover of a.
  std::vector<Subset> usable;
  for (Subset c : family)
    if (c.subset_of(a)) usable.push_back(c);

  // Dense parity table over subsets of a, indexed by the full mask value.
  const std::size_t span = std::size_t{1} << std::bit_width(a.bits);
  std::vector<unsigned char> parity(span, 0), next(span, 0);
  parity[0] = 1;  // the empty prefix
  for (unsigned step = 0; step < k; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for_each_subset_of(a, [&](Subset u) {
      if (!parity[u.index()]) return;
      for (Subset c : usable) next[(u | c).index()] ^= 1;
    });
    parity.swap(next);
  }
  return parity[a.index()] != 0;
}

}  // namespace qba
