#include "qba/io.hpp"

#include <string>
#include <vector>

#include "qba/error.hpp"

namespace qba {

using nlohmann::json;

namespace {

json subset_json(Subset a) { return json(elements(a)); }

Subset subset_from_json(const json& j, unsigned n) {
  if (!j.is_array()) throw ParseError("expected an array of indices", 0);
  Subset out;
  for (const json& e : j) {
    if (!e.is_number_unsigned()) throw ParseError("set elements must be positive integers", 0);
    const auto i = e.get<unsigned>();
    if (i == 0 || i > n) throw DimensionError("index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
    out = out | Subset::singleton(i);
  }
  return out;
}

unsigned dim_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned())
    throw ParseError("missing or invalid \"n\"", 0);
  const auto n = j["n"].get<unsigned>();
  check_dim(n);
  return n;
}

const json& array_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw ParseError(std::string("missing array \"") + key + "\"", 0);
  return j[key];
}

// Two-element [left, right] pair.
std::pair<Subset, Subset> pair_from_json(const json& j, unsigned n) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected a [left, right] pair", 0);
  return {subset_from_json(j[0], n), subset_from_json(j[1], n)};
}

}  // namespace

json to_json(const RingElem& f) {
  json support = json::array();
  for (Subset a : f.support()) support.push_back(subset_json(a));
  return json{{"n", f.dim()}, {"basis", std::string(to_string(f.basis()))}, {"support", support}};
}

json to_json(const OpCoeffs& f) {
  json terms = json::array();
  for (const Term& t : f.terms()) terms.push_back(json::array({subset_json(t.left), subset_json(t.right)}));
  return json{{"n", f.dim()}, {"basis", std::string(to_string(f.basis()))}, {"terms", terms}};
}

json to_json(const Family& a) {
  json members = json::array();
  for (const PairedMask& m : a.members) members.push_back(json::array({subset_json(m.plain), subset_json(m.tilde)}));
  return json{{"n", a.n}, {"members", members}};
}

RingElem ring_from_json(const json& j) {
  const unsigned n = dim_from_json(j);
  if (!j.contains("basis") || !j["basis"].is_string()) throw ParseError("missing \"basis\"", 0);
  const RingBasis basis = parse_ring_basis(j["basis"].get<std::string>());
  std::vector<Subset> support;
  for (const json& e : array_field(j, "support")) support.push_back(subset_from_json(e, n));
  return RingElem::from_support(n, basis, support);
}

OpCoeffs op_from_json(const json& j) {
  const unsigned n = dim_from_json(j);
  if (!j.contains("basis") || !j["basis"].is_string()) throw ParseError("missing \"basis\"", 0);
  const OpBasis basis = parse_op_basis(j["basis"].get<std::string>());
  TermSet terms;
  for (const json& e : array_field(j, "terms")) {
    const auto [l, r] = pair_from_json(e, n);
    toggle(terms, {l, r});
  }
  return OpCoeffs(n, basis, std::move(terms));
}

Family family_from_json(const json& j) {
  const unsigned n = dim_from_json(j);
  Family out{n, {}};
  for (const json& e : array_field(j, "members")) {
    const auto [p, t] = pair_from_json(e, n);
    out.members.insert({p, t});
  }
  return out;
}

namespace {

char ring_letter(RingBasis b) {
  switch (b) {
    case RingBasis::M: return 'm';
    case RingBasis::X: return 'x';
    case RingBasis::W: return 'w';
  }
  return '?';
}

}  // namespace

std::string to_text(const RingElem& f) {
  std::string out;
  for (Subset a : f.support()) {
    if (!out.empty()) out += " + ";
    out += ring_letter(f.basis()) + to_string(a);
  }
  return out.empty() ? "0" : out;
}

std::string to_text(const OpCoeffs& f) {
  const char left = ring_letter(left_kind(f.basis()));
  const char right = right_kind(f.basis()) == RightKind::Y ? 'y' : 's';
  std::string out;
  for (const Term& t : f.terms()) {
    if (!out.empty()) out += " + ";
    out += left + to_string(t.left) + right + to_string(t.right);
  }
  return out.empty() ? "0" : out;
}

}  // namespace qba
