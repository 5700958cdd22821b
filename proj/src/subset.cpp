#include "qba/subset.hpp"

#include <cctype>

#include "qba/error.hpp"

namespace qba {

void check_dim(unsigned n) {
  if (n < 1 || n > kMaxDim)
    throw DimensionError("dimension " + std::to_string(n) + " outside [1, " +
                         std::to_string(kMaxDim) + "]");
}

void check_subset(Subset a, unsigned n) {
  if (!valid_for(a, n)) throw DimensionError("subset " + to_string(a) + " is not inside [" +
                                             std::to_string(n) + "]");
}

std::vector<unsigned> elements(Subset a) {
  std::vector<unsigned> out;
  for (unsigned i = 1; i <= 32; ++i)
    if ((a.bits >> (i - 1)) & 1u) out.push_back(i);
  return out;
}

std::string to_string(Subset a) {
  std::string s = "{";
  bool first = true;
  for (unsigned i : elements(a)) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

Subset subset_from(const std::vector<unsigned>& elems) {
  Subset s;
  for (unsigned i : elems) {
    if (i == 0 || i > kMaxDim) throw DimensionError("index " + std::to_string(i) + " out of range");
    s = s | Subset::singleton(i);
  }
  return s;
}

Subset parse_subset(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '{') throw ParseError("expected '{'", pos);
  ++pos;
  std::vector<unsigned> elems;
  skip();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    while (true) {
      skip();
      const std::size_t start = pos;
      unsigned value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<unsigned>(text[pos] - '0');
        if (value > 1000) throw ParseError("index too large", start);
        ++pos;
      }
      if (pos == start) throw ParseError("expected index", pos);
      if (value == 0 || value > kMaxDim) throw ParseError("index out of range", start);
      elems.push_back(value);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or '}'", pos);
    }
  }
  skip();
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return subset_from(elems);
}

}  // namespace qba
