#include <doctest.h>

#include "oracle.hpp"
#include "qba/diffops.hpp"
#include "qba/error.hpp"
#include "qba/gf2.hpp"
#include "qba/random.hpp"

using namespace qba;

namespace {

Gf2Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<BitVector> r;
  for (std::size_t i = 0; i < rows; ++i) r.push_back(random_bits(rng, cols));
  return Gf2Matrix::from_rows(std::move(r));
}

Gf2Matrix grid(std::initializer_list<const char*> rows) {
  std::vector<BitVector> out;
  for (const char* row : rows) {
    const std::string s(row);
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) v.set(i, s[i] == '1');
    out.push_back(v);
  }
  return Gf2Matrix::from_rows(std::move(out));
}

// Rank by brute force: size of the row span.
std::size_t brute_rank(const Gf2Matrix& m) {
  std::vector<std::uint64_t> span{0};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint64_t row = 0;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) row |= std::uint64_t{1} << c;
    bool present = false;
    for (auto s : span) present |= s == row;
    if (present) continue;
    const std::size_t size = span.size();
    for (std::size_t i = 0; i < size; ++i) span.push_back(span[i] ^ row);
  }
  std::size_t rank = 0;
  while ((std::size_t{1} << rank) < span.size()) ++rank;
  return rank;
}

}  // namespace

TEST_CASE("products agree with the schoolbook oracle") {
  Rng rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const Gf2Matrix a = random_matrix(rng, 1 + trial % 7, 70), b = random_matrix(rng, 70, 1 + trial % 5);
    CHECK(oracle::same(mat_mul(a, b), oracle::mul(oracle::from_gf2(a), oracle::from_gf2(b))));
  }
  const Gf2Matrix a = random_matrix(rng, 8, 8), b = random_matrix(rng, 8, 8), c = random_matrix(rng, 8, 8);
  CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
  CHECK(mat_mul(a, Gf2Matrix::identity(8)) == a);
  CHECK(mat_mul(Gf2Matrix::identity(8), a) == a);
  CHECK_THROWS_AS(mat_mul(a, Gf2Matrix(3, 3)), ShapeError);
}

TEST_CASE("generator matrix identities") {
  CHECK(mat_mul(derivative_matrix(1, 1), derivative_matrix(1, 1)).is_zero());
  CHECK(mat_mul(shift_matrix(1, 1), shift_matrix(1, 1)) == Gf2Matrix::identity(2));
}

TEST_CASE("matrix-vector application") {
  BitVector m1(2);
  m1.set(1, true);
  const BitVector out = mat_apply(derivative_matrix(1, 1), m1);
  CHECK(out.get(0));
  CHECK(out.get(1));
  CHECK(mat_apply(Gf2Matrix::identity(2), m1) == m1);
  CHECK_FALSE(mat_apply(Gf2Matrix(2, 2), m1).any());
  CHECK_THROWS_AS(mat_apply(Gf2Matrix(2, 3), m1), ShapeError);
}

TEST_CASE("rank") {
  CHECK(rank(Gf2Matrix::identity(4)) == 4);
  CHECK(rank(grid({"11", "11"})) == 1);
  CHECK(rank(derivative_matrix(1, 1)) == 1);
  CHECK(rank(Gf2Matrix(5, 9)) == 0);
  Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const Gf2Matrix a = random_matrix(rng, 1 + trial % 9, 1 + trial % 11);
    CHECK(rank(a) == brute_rank(a));
    CHECK(rank(transpose(a)) == rank(a));
    const Gf2Matrix sq = random_matrix(rng, 6, 6), sq2 = random_matrix(rng, 6, 6);
    CHECK(rank(mat_mul(sq, sq2)) <= std::min(rank(sq), rank(sq2)));
  }
}

TEST_CASE("column space containment") {
  CHECK(colspace_contains(Gf2Matrix::identity(2), grid({"10", "11"})).contained);
  CHECK_FALSE(colspace_contains(Gf2Matrix(2, 2), Gf2Matrix::identity(2)).contained);

  // All 2x2 (S, T): compare against the 16 candidates R.
  for (std::uint32_t t = 0; t < 16; ++t)
    for (std::uint32_t s = 0; s < 16; ++s) {
      auto mk = [](std::uint32_t w) {
        Gf2Matrix m(2, 2);
        for (unsigned i = 0; i < 4; ++i) m.set(i / 2, i % 2, (w >> i) & 1u);
        return m;
      };
      const Gf2Matrix tm = mk(t), sm = mk(s);
      bool exists = false;
      for (std::uint32_t r = 0; r < 16 && !exists; ++r) exists = mat_mul(tm, mk(r)) == sm;
      const ColspaceResult res = colspace_contains(tm, sm, true);
      CHECK(res.contained == exists);
      if (res.contained) {
        REQUIRE(res.witness);
        CHECK(mat_mul(tm, *res.witness) == sm);
      }
    }

  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Gf2Matrix t = random_matrix(rng, 16, 16);
    const Gf2Matrix s = mat_mul(t, random_matrix(rng, 16, 16));
    const ColspaceResult res = colspace_contains(t, s, true);
    CHECK(res.contained);
    REQUIRE(res.witness);
    CHECK(mat_mul(t, *res.witness) == s);
    CHECK(colspace_contains(s, s).contained);
  }
}

TEST_CASE("text and graph views") {
  CHECK(to_grid(grid({"10", "01"})) == "10\n01");
  const std::string dot = to_dot(grid({"10", "11"}), 1);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"{}\" -> \"{1}\"") != std::string::npos);
  CHECK(dot.find("\"{1}\" -> \"{}\"") == std::string::npos);
}
