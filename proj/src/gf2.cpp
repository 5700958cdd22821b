#include "qba/gf2.hpp"

#include <sstream>

#include "qba/error.hpp"
#include "qba/subset.hpp"

namespace qba {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

Gf2Matrix Gf2Matrix::identity(std::size_t size) {
  Gf2Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::vector<BitVector> rows) {
  Gf2Matrix m;
  if (!rows.empty()) m.cols_ = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != m.cols_) throw ShapeError("rows of unequal length");
  m.rows_ = std::move(rows);
  return m;
}

bool Gf2Matrix::is_zero() const {
  for (const auto& r : rows_)
    if (r.any()) return false;
  return true;
}

Gf2Matrix& Gf2Matrix::operator+=(const Gf2Matrix& other) {
  if (other.rows() != rows() || other.cols() != cols()) throw ShapeError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] ^= other.rows_[i];
  return *this;
}

Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("mat_mul: shape mismatch");
  Gf2Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const BitVector& row = a.row(r);
    BitVector& dst = out.row(r);
    for (std::size_t k = row.find_next(0); k < row.size(); k = row.find_next(k + 1)) dst ^= b.row(k);
  }
  return out;
}

BitVector mat_apply(const Gf2Matrix& a, const BitVector& v) {
  if (a.cols() != v.size()) throw ShapeError("mat_apply: shape mismatch");
  BitVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (a.row(r).dot(v)) out.set(r, true);
  return out;
}

Gf2Matrix transpose(const Gf2Matrix& a) {
  Gf2Matrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const BitVector& row = a.row(r);
    for (std::size_t c = row.find_next(0); c < row.size(); c = row.find_next(c + 1)) out.set(c, r, true);
  }
  return out;
}

namespace {

// Gauss-Jordan on `rows` restricted to the first `ncols` columns. Returns the
// pivot column of each of the leading rank rows.
std::vector<std::size_t> reduce(std::vector<BitVector>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t p = next;
    while (p < rows.size() && !rows[p].get(col)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != next && rows[r].get(col)) rows[r] ^= rows[next];
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Gf2Matrix& a) {
  std::vector<BitVector> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  return reduce(rows, a.cols()).size();
}

ColspaceResult colspace_contains(const Gf2Matrix& t, const Gf2Matrix& s, bool want_witness) {
  if (t.rows() != s.rows()) throw ShapeError("colspace_contains: row counts differ");
  const std::size_t tc = t.cols();
  const std::size_t sc = s.cols();

  // Augmented rows [T | S]; reduce on the T part only.
  std::vector<BitVector> rows;
  rows.reserve(t.rows());
  for (std::size_t r = 0; r < t.rows(); ++r) {
    BitVector aug(tc + sc);
    const BitVector& tr = t.row(r);
    for (std::size_t c = tr.find_next(0); c < tc; c = tr.find_next(c + 1)) aug.set(c, true);
    const BitVector& sr = s.row(r);
    for (std::size_t c = sr.find_next(0); c < sc; c = sr.find_next(c + 1)) aug.set(tc + c, true);
    rows.push_back(std::move(aug));
  }
  const auto pivots = reduce(rows, tc);

  ColspaceResult result;
  for (std::size_t r = pivots.size(); r < rows.size(); ++r)
    if (rows[r].find_next(tc) < rows[r].size()) return result;
  result.contained = true;

  if (want_witness) {
    // Free variables set to zero; each pivot variable reads its row's right-hand side.
    Gf2Matrix w(tc, sc);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const BitVector& row = rows[r];
      for (std::size_t c = row.find_next(tc); c < row.size(); c = row.find_next(c + 1))
        w.set(pivots[r], c - tc, true);
    }
    result.witness = std::move(w);
  }
  return result;
}

std::string to_grid(const Gf2Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += '\n';
    for (std::size_t c = 0; c < m.cols(); ++c) out += m.get(r, c) ? '1' : '0';
  }
  return out;
}

std::string to_dot(const Gf2Matrix& m, unsigned n, const std::string& name) {
  const std::size_t side = std::size_t{1} << n;
  if (m.rows() != side || m.cols() != side) throw ShapeError("to_dot: matrix side must be 2^n");
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < side; ++v)
    os << "  \"" << to_string(Subset(static_cast<std::uint32_t>(v))) << "\";\n";
  for (std::size_t a = 0; a < side; ++a) {
    const BitVector& row = m.row(a);
    for (std::size_t b = row.find_next(0); b < side; b = row.find_next(b + 1))
      os << "  \"" << to_string(Subset(static_cast<std::uint32_t>(b))) << "\" -> \""
         << to_string(Subset(static_cast<std::uint32_t>(a))) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qba
