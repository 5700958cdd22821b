#include "qba/crosscheck.hpp"

#include <functional>
#include <sstream>

#include "qba/bweyl.hpp"
#include "qba/diffops.hpp"
#include "qba/random.hpp"
#include "qba/setfam.hpp"

namespace qba {

bool CrosscheckReport::all_passed() const { return total_failed() == 0; }

unsigned CrosscheckReport::total_passed() const {
  unsigned t = 0;
  for (const auto& c : checks) t += c.passed;
  return t;
}

unsigned CrosscheckReport::total_failed() const {
  unsigned t = 0;
  for (const auto& c : checks) t += c.failed;
  return t;
}

namespace {

Gf2Matrix generator_matrix(const Generator& g, unsigned n) {
  const std::size_t side = std::size_t{1} << n;
  switch (g.kind) {
    case GenKind::X: return multiplication_matrix(ring_monomial(RingBasis::X, g.mask, n));
    case GenKind::W: return multiplication_matrix(ring_monomial(RingBasis::W, g.mask, n));
    case GenKind::M: return multiplication_matrix(ring_monomial(RingBasis::M, g.mask, n));
    case GenKind::Y:
    case GenKind::S: {
      Gf2Matrix out = Gf2Matrix::identity(side);
      for (unsigned i : elements(g.mask))
        out = mat_mul(out, g.kind == GenKind::Y ? derivative_matrix(i, n) : shift_matrix(i, n));
      return out;
    }
  }
  return Gf2Matrix::identity(side);
}

class Battery {
 public:
  Battery(const CrosscheckConfig& cfg, CrosscheckReport& report) : cfg_(cfg), report_(report), rng_(cfg.seed) {}

  void run(unsigned n) {
    for (OpBasis b : kAllOpBases) {
      check("op_mul " + std::string(to_string(b)), n, [&] {
        const OpCoeffs f = random_op(rng_, n, b), g = random_op(rng_, n, b);
        return to_matrix(op_mul(f, g)) == mat_mul(to_matrix(f), to_matrix(g));
      });
      check("convert_op_basis " + std::string(to_string(b)), n, [&] {
        const OpCoeffs f = random_op(rng_, n, OpBasis::XY);
        const OpCoeffs g = convert_op_basis(f, b);
        return to_matrix(g) == to_matrix(f) && convert_op_basis(g, OpBasis::XY) == f;
      });
      check("apply_coeffs " + std::string(to_string(b)), n, [&] {
        const OpCoeffs d = random_op(rng_, n, b);
        const RingElem f = random_ring_elem(rng_, n, RingBasis::X);
        const BitVector expect = mat_apply(to_matrix(d), convert(f, RingBasis::M).coeffs());
        return convert(apply_coeffs(d, f), RingBasis::M).coeffs() == expect;
      });
    }

    check("ring_mul is pointwise", n, [&] {
      const RingElem f = random_ring_elem(rng_, n, RingBasis::X);
      const RingElem g = random_ring_elem(rng_, n, RingBasis::W);
      BitVector expect = convert(f, RingBasis::M).coeffs();
      expect &= convert(g, RingBasis::M).coeffs();
      return convert(ring_mul(f, g), RingBasis::M).coeffs() == expect;
    });

    check("normal_order", n, [&] {
      const bool shifted = rng_() & 1u;
      std::vector<Generator> word;
      Gf2Matrix expect = Gf2Matrix::identity(std::size_t{1} << n);
      const unsigned len = 1 + rng_() % 5;
      for (unsigned i = 0; i < len; ++i) {
        GenKind kind;
        switch (rng_() % 4) {
          case 0: kind = GenKind::X; break;
          case 1: kind = GenKind::W; break;
          case 2: kind = GenKind::M; break;
          default: kind = shifted ? GenKind::S : GenKind::Y;
        }
        word.push_back({kind, random_subset(rng_, n)});
        expect = mat_mul(expect, generator_matrix(word.back(), n));
      }
      return to_matrix(normal_order(word, n)) == expect;
    });

    using Product = Family (*)(const Family&, const Family&);
    using Action = FamilyN (*)(const Family&, const FamilyN&);
    struct Face {
      const char* name;
      Product prod;
      Action act;
      OpBasis basis;
    };
    const Face faces[] = {{"circ", circ_prod, circ_act, OpBasis::MY},
                          {"bullet", bullet_prod, bullet_act, OpBasis::XY},
                          {"star", star_prod, star_act, OpBasis::MS},
                          {"ast", ast_prod, ast_act, OpBasis::XS}};
    for (const Face& face : faces) {
      check(std::string(face.name) + " product", n, [&] {
        const Family a = random_family(rng_, n), b = random_family(rng_, n);
        const OpCoeffs expect = op_mul(family_to_op(a, face.basis), family_to_op(b, face.basis));
        return op_to_family(expect) == face.prod(a, b);
      });
      check(std::string(face.name) + " action", n, [&] {
        const Family a = random_family(rng_, n);
        const FamilyN f = random_family_n(rng_, n);
        const RingBasis rb = left_kind(face.basis);
        const RingElem expect = apply_coeffs(family_to_op(a, face.basis), family_to_ring(f, rb));
        return ring_to_family(expect) == face.act(a, f);
      });
    }

    check("entailment witness", n, [&] {
      const Gf2Matrix t = to_matrix(random_op(rng_, n, OpBasis::XY));
      const Gf2Matrix s = mat_mul(t, to_matrix(random_op(rng_, n, OpBasis::XY)));
      const ColspaceResult r = colspace_contains(t, s, true);
      return r.contained && r.witness && mat_mul(t, *r.witness) == s;
    });
  }

 private:
  void check(const std::string& name, unsigned n, const std::function<bool()>& trial) {
    CheckOutcome outcome{name + " (n=" + std::to_string(n) + ")", 0, 0};
    for (unsigned i = 0; i < cfg_.samples; ++i) (trial() ? outcome.passed : outcome.failed)++;
    report_.checks.push_back(std::move(outcome));
  }

  const CrosscheckConfig& cfg_;
  CrosscheckReport& report_;
  Rng rng_;
};

}  // namespace

CrosscheckReport run_crosscheck(const CrosscheckConfig& config) {
  CrosscheckReport report;
  Battery battery(config, report);
  for (unsigned n = 1; n <= config.max_n; ++n) battery.run(n);
  return report;
}

std::string format_report(const CrosscheckReport& report) {
  std::ostringstream out;
  for (const CheckOutcome& c : report.checks)
    out << (c.failed ? "FAIL " : "ok   ") << c.name << ": " << c.passed << "/" << (c.passed + c.failed) << "\n";
  out << (report.all_passed() ? "all checks passed" : "some checks FAILED") << " (" << report.total_passed()
      << " passed, " << report.total_failed() << " failed)\n";
  return out.str();
}

}  // namespace qba
