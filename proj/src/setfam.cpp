#include "qba/setfam.hpp"

#include <cctype>
#include <string>

#include "qba/bweyl.hpp"
#include "qba/error.hpp"

namespace qba {

namespace {

void check_same(unsigned n1, unsigned n2, const char* what) {
  if (n1 != n2) throw DimensionError(std::string(what) + ": dimension mismatch");
}

void toggle_member(std::set<PairedMask>& s, PairedMask m) {
  auto [it, inserted] = s.insert(m);
  if (!inserted) s.erase(it);
}

void toggle_member(std::set<Subset>& s, Subset m) {
  auto [it, inserted] = s.insert(m);
  if (!inserted) s.erase(it);
}

}  // namespace

Family fam_add(const Family& a, const Family& b) {
  check_same(a.n, b.n, "fam_add");
  Family out{a.n, a.members};
  for (const PairedMask& m : b.members) toggle_member(out.members, m);
  return out;
}

// Each product below walks the tuples its membership condition quantifies
// over and toggles the member they certify, so a member survives exactly
// when its tuple count is odd.

// a in A o B  iff  O{ b, c in B | c2 in a2, a1 u ~b in A, a2 \ c2 in a1 + c1 in b }
Family circ_prod(const Family& a, const Family& b) {
  check_same(a.n, b.n, "circ_prod");
  Family out{a.n, {}};
  for (const PairedMask& am : a.members)
    for (const PairedMask& c : b.members) {
      const Subset a1 = am.plain, bb = am.tilde;
      const Subset sum = a1 ^ c.plain;
      if (!sum.subset_of(bb)) continue;
      // a2 ranges over c2 u t with t in (a1 + c1) \ c2.
      for_each_subset_of(sum - c.tilde, [&](Subset t) { toggle_member(out.members, {a1, c.tilde | t}); });
    }
  return out;
}

// a in A o F  iff  O{ b in c | a u ~c in A, a + b in F }
FamilyN circ_act(const Family& a, const FamilyN& f) {
  check_same(a.n, f.n, "circ_act");
  FamilyN out{a.n, {}};
  for (const PairedMask& m : a.members)
    for_each_subset_of(m.tilde, [&](Subset b) {
      if (f.members.contains(m.plain ^ b)) toggle_member(out.members, m.plain);
    });
  return out;
}

// a in A . B  iff  O{ b in A, c in B, k1 in k2 | c2 in a2, k2 in b2 n c1,
//                    b1 u (c1 \ k2) = a1, b2 \ k1 = a2 \ c2 }
Family bullet_prod(const Family& a, const Family& b) {
  check_same(a.n, b.n, "bullet_prod");
  Family out{a.n, {}};
  std::set<PairedMask> candidates;
  for (const PairedMask& bm : a.members)
    for (const PairedMask& cm : b.members) {
      // Only members reachable by some chain can have a nonzero count.
      candidates.clear();
      for_each_subset_of(bm.tilde & cm.plain, [&](Subset k2) {
        for_each_subset_of(k2, [&](Subset k1) {
          const Subset rest = bm.tilde - k1;
          if ((rest & cm.tilde).empty()) candidates.insert({bm.plain | (cm.plain - k2), rest | cm.tilde});
        });
      });
      for (const PairedMask& cand : candidates)
        if (cm.tilde.subset_of(cand.tilde) &&
            structural_coeff_c(bm.plain, bm.tilde, cm.plain, cm.tilde, cand.plain, cand.tilde))
          toggle_member(out.members, cand);
    }
  return out;
}

// a in A . F  iff  O{ b in A, c in F | b2 in c, b1 u (c \ b2) = a }
FamilyN bullet_act(const Family& a, const FamilyN& f) {
  check_same(a.n, f.n, "bullet_act");
  FamilyN out{a.n, {}};
  for (const PairedMask& b : a.members)
    for (Subset c : f.members)
      if (b.tilde.subset_of(c)) toggle_member(out.members, b.plain | (c - b.tilde));
  return out;
}

// a in A * B  iff  O{ b | a1 u ~b in A, (a1 + b) u ~(a2 + b) in B }
Family star_prod(const Family& a, const Family& b) {
  check_same(a.n, b.n, "star_prod");
  Family out{a.n, {}};
  for (const PairedMask& am : a.members)
    for (const PairedMask& bm : b.members)
      if (bm.plain == (am.plain ^ am.tilde)) toggle_member(out.members, {am.plain, bm.tilde ^ am.tilde});
  return out;
}

// a in A * F  iff  O{ b | a u ~b in A, a + b in F }
FamilyN star_act(const Family& a, const FamilyN& f) {
  check_same(a.n, f.n, "star_act");
  FamilyN out{a.n, {}};
  for (const PairedMask& m : a.members)
    if (f.members.contains(m.plain ^ m.tilde)) toggle_member(out.members, m.plain);
  return out;
}

// a in A x B  iff  O{ b, c, d, e | e in c n d, b u (d \ e) = a1, b u ~c in A, d u ~(c + a2) in B }
Family ast_prod(const Family& a, const Family& b) {
  check_same(a.n, b.n, "ast_prod");
  Family out{a.n, {}};
  for (const PairedMask& am : a.members)
    for (const PairedMask& bm : b.members) {
      const Subset a2 = am.tilde ^ bm.tilde;
      for_each_subset_of(am.tilde & bm.plain,
                         [&](Subset e) { toggle_member(out.members, {am.plain | (bm.plain - e), a2}); });
    }
  return out;
}

// a in A x F  iff  O{ b, c, d, e in F | c in d n e, b u (e \ c) = a, b u ~d in A }
FamilyN ast_act(const Family& a, const FamilyN& f) {
  check_same(a.n, f.n, "ast_act");
  FamilyN out{a.n, {}};
  for (const PairedMask& m : a.members)
    for (Subset e : f.members)
      for_each_subset_of(m.tilde & e, [&](Subset c) { toggle_member(out.members, m.plain | (e - c)); });
  return out;
}

Family hat_diagonal(const FamilyN& a) {
  Family out{a.n, {}};
  for (Subset s : a.members) out.members.insert({s, s});
  return out;
}

Family tilde_antidiagonal(const FamilyN& a) {
  Family out{a.n, {}};
  for (Subset s : a.members) out.members.insert({s.complement(a.n), s});
  return out;
}

OpCoeffs family_to_op(const Family& a, OpBasis basis) {
  TermSet terms;
  for (const PairedMask& m : a.members) terms.insert({m.plain, m.tilde});
  return OpCoeffs(a.n, basis, std::move(terms));
}

Family op_to_family(const OpCoeffs& f) {
  Family out{f.dim(), {}};
  for (const Term& t : f.terms()) out.members.insert({t.left, t.right});
  return out;
}

RingElem family_to_ring(const FamilyN& f, RingBasis basis) {
  const std::vector<Subset> support(f.members.begin(), f.members.end());
  return RingElem::from_support(f.n, basis, support);
}

FamilyN ring_to_family(const RingElem& f) {
  FamilyN out{f.dim(), {}};
  for (Subset s : f.support()) out.members.insert(s);
  return out;
}

// --- text form --------------------------------------------------------------

namespace {

std::string member_string(const PairedMask& m) {
  std::string out = "{";
  bool first = true;
  for (unsigned i : elements(m.plain)) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  for (unsigned i : elements(m.tilde)) {
    if (!first) out += ',';
    out += '~' + std::to_string(i);
    first = false;
  }
  return out + "}";
}

class FamilyParser {
 public:
  FamilyParser(std::string_view text, unsigned n) : text_(text), n_(n) { check_dim(n); }

  template <typename OnMember>
  void parse(bool allow_tilde, OnMember&& on_member) {
    expect('{');
    skip_ws();
    if (peek() == '}') {
      ++pos_;
    } else {
      while (true) {
        on_member(parse_member(allow_tilde));
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect('}');
        break;
      }
    }
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters after family literal");
  }

 private:
  PairedMask parse_member(bool allow_tilde) {
    expect('{');
    PairedMask m;
    skip_ws();
    if (peek() == '}') {
      ++pos_;
      return m;
    }
    while (true) {
      skip_ws();
      bool tilde = false;
      if (peek() == '~') {
        if (!allow_tilde) fail("tilde element in a family over [n]");
        tilde = true;
        ++pos_;
      }
      const unsigned i = parse_index();
      Subset& target = tilde ? m.tilde : m.plain;
      target = target | Subset::singleton(i);
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      return m;
    }
  }

  unsigned parse_index() {
    const std::size_t start = pos_;
    unsigned value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > kMaxDim) break;
      ++pos_;
    }
    if (pos_ == start) fail("expected an element index");
    if (value == 0 || value > n_) throw ParseError("element index out of range for n=" + std::to_string(n_), start);
    return value;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view text_;
  unsigned n_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Family& a) {
  std::string out = "{";
  bool first = true;
  for (const PairedMask& m : a.members) {
    if (!first) out += ',';
    out += member_string(m);
    first = false;
  }
  return out + "}";
}

std::string to_string(const FamilyN& f) {
  std::string out = "{";
  bool first = true;
  for (Subset s : f.members) {
    if (!first) out += ',';
    out += to_string(s);
    first = false;
  }
  return out + "}";
}

Family parse_family(std::string_view text, unsigned n) {
  Family out{n, {}};
  FamilyParser(text, n).parse(true, [&](PairedMask m) { out.members.insert(m); });
  return out;
}

FamilyN parse_family_n(std::string_view text, unsigned n) {
  FamilyN out{n, {}};
  FamilyParser(text, n).parse(false, [&](PairedMask m) { out.members.insert(m.plain); });
  return out;
}

}  // namespace qba
