#include "f2hopf/f2_matrix.hpp"

#include <bit>
#include <limits>
#include <sstream>

namespace f2hopf {

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.size_ != size_) throw PreconditionError("BitVec size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVec::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVec::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVec::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return size_;
}

std::vector<std::size_t> BitVec::set_bits() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto word = words_[w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

std::size_t BitMatrix::rank() const {
  std::vector<BitVec> work = rows_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < work.size(); ++c) {
    std::size_t p = rank;
    while (p < work.size() && !work[p].get(c)) ++p;
    if (p == work.size()) continue;
    std::swap(work[rank], work[p]);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r != rank && work[r].get(c)) work[r] ^= work[rank];
    }
    ++rank;
  }
  return rank;
}

bool BitMatrix::is_zero() const {
  for (const auto& r : rows_) {
    if (r.any()) return false;
  }
  return true;
}

BitVec BitMatrix::apply(const BitVec& v) const {
  if (v.size() != rows()) throw PreconditionError("vector length does not match matrix rows");
  BitVec out(cols_);
  for (auto i : v.set_bits()) out ^= rows_[i];
  return out;
}

BitMatrix BitMatrix::then(const BitMatrix& other) const {
  if (cols_ != other.rows()) throw PreconditionError("matrix shapes do not compose");
  BitMatrix out(rows(), other.cols());
  for (std::size_t r = 0; r < rows(); ++r) out.rows_[r] = other.apply(rows_[r]);
  return out;
}

std::string BitMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) os << (get(r, c) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

namespace {

void gl_rows(std::size_t n, std::vector<std::uint64_t>& chosen, std::vector<std::uint64_t>& span,
             std::vector<BitMatrix>& out) {
  if (chosen.size() == n) {
    BitMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, (chosen[r] >> c) & 1U);
    }
    out.push_back(std::move(m));
    return;
  }
  // span holds a 0/1 flag per mask: 1 iff the mask lies in the current span.
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t v = 1; v < limit; ++v) {
    if (span[v]) continue;
    std::vector<std::uint64_t> added;
    for (std::uint64_t s = 0; s < limit; ++s) {
      if (span[s] && !span[s ^ v]) added.push_back(s ^ v);
    }
    for (auto a : added) span[a] = 1;
    chosen.push_back(v);
    gl_rows(n, chosen, span, out);
    chosen.pop_back();
    for (auto a : added) span[a] = 0;
  }
}

}  // namespace

std::vector<BitMatrix> general_linear_group(std::size_t n) {
  if (n > 20) throw BoundError("GL(n, F2) enumeration is limited to n <= 20");
  std::vector<BitMatrix> out;
  if (n == 0) {
    out.emplace_back(0, 0);
    return out;
  }
  std::vector<std::uint64_t> chosen;
  std::vector<std::uint64_t> span(std::size_t{1} << n, 0);
  span[0] = 1;
  gl_rows(n, chosen, span, out);
  return out;
}

std::uint64_t general_linear_order(std::size_t n) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (n >= 64) return kMax;
  std::uint64_t order = 1;
  const std::uint64_t full = std::uint64_t{1} << n;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t factor = full - (std::uint64_t{1} << i);
    if (order > kMax / factor) return kMax;
    order *= factor;
  }
  return order;
}

}  // namespace f2hopf
