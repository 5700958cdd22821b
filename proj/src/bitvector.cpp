#include "qba/bitvector.hpp"

#include <bit>

#include "qba/error.hpp"

namespace qba {

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw ShapeError("bit vector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.size_ != size_) throw ShapeError("bit vector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool BitVector::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) throw ShapeError("bit vector length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return (std::popcount(acc) & 1) != 0;
}

std::size_t BitVector::find_next(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t w = from >> 6;
  std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (cur) {
      const std::size_t pos = (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
      return pos < size_ ? pos : size_;
    }
    if (++w == words_.size()) return size_;
    cur = words_[w];
  }
}

}  // namespace qba
