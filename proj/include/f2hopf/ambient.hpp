#pragma once

// Exact arithmetic in F2[g, g^-1] (x) F2[Qg, Q^2g, ...], the mod-2 homology
// ring of the double loop space of S^2.  Elements are finite sets of
// monomials; a repeated monomial cancels.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace f2hopf {

inline constexpr int kDefaultMaxGen = 32;
// Hard ceiling on generator indices; keeps 2^i representable in int64.
inline constexpr int kHardMaxGen = 61;

struct Bigrade {
  std::int64_t weight = 0;
  std::int64_t dim = 0;

  friend auto operator<=>(const Bigrade&, const Bigrade&) = default;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// g^a * prod_i (Q^i g)^{e_i}.  The exponent list is sorted by generator
// index and never holds a zero exponent.
class AmbientMonomial {
 public:
  using Factor = std::pair<int, std::int64_t>;  // (generator index i >= 1, e_i > 0)

  AmbientMonomial() = default;
  AmbientMonomial(std::int64_t g_exp, std::vector<Factor> q_exps);

  static AmbientMonomial one() { return {}; }
  static AmbientMonomial g_power(std::int64_t a);
  // (Q^i g)^e
  static AmbientMonomial q_generator(int index, std::int64_t exponent = 1);

  std::int64_t g_exp() const { return g_exp_; }
  std::span<const Factor> q_exps() const { return q_; }
  std::int64_t q_exp(int index) const;
  bool is_pure_g() const { return q_.empty(); }
  int max_index() const { return q_.empty() ? 0 : q_.back().first; }

  std::int64_t weight() const;
  std::int64_t dim() const;
  Bigrade bigrade() const { return {weight(), dim()}; }

  AmbientMonomial operator*(const AmbientMonomial& other) const;
  AmbientMonomial pow(std::int64_t n) const;
  // Divides out one copy of Q^i g; the factor must be present.
  AmbientMonomial without_one(int index) const;

  std::string to_string() const;

  friend auto operator<=>(const AmbientMonomial&, const AmbientMonomial&) = default;
  friend bool operator==(const AmbientMonomial&, const AmbientMonomial&) = default;

 private:
  std::int64_t g_exp_ = 0;
  std::vector<Factor> q_;
};

// F2 sum of distinct monomials, stored sorted.
class AmbientElement {
 public:
  AmbientElement() = default;
  AmbientElement(const AmbientMonomial& m) : terms_{m} {}  // NOLINT(google-explicit-constructor)
  // Canonicalizes: sorts and cancels repeated monomials pairwise.
  explicit AmbientElement(std::vector<AmbientMonomial> terms);

  static AmbientElement zero() { return {}; }
  static AmbientElement one() { return AmbientElement(AmbientMonomial::one()); }

  const std::vector<AmbientMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  AmbientElement operator+(const AmbientElement& other) const;
  AmbientElement& operator+=(const AmbientElement& other);
  AmbientElement operator*(const AmbientElement& other) const;
  // Frobenius: squaring is additive in characteristic 2.
  AmbientElement square() const;
  AmbientElement pow(std::int64_t n) const;

  std::string to_string() const;

  friend bool operator==(const AmbientElement&, const AmbientElement&) = default;

 private:
  std::vector<AmbientMonomial> terms_;
};

AmbientElement mul(const AmbientElement& a, const AmbientElement& b);
AmbientElement add(const AmbientElement& a, const AmbientElement& b);

using MonomialPair = std::pair<AmbientMonomial, AmbientMonomial>;

// F2 sum of distinct pairs left (x) right.
class TensorElement {
 public:
  TensorElement() = default;
  explicit TensorElement(std::vector<MonomialPair> terms);

  const std::vector<MonomialPair>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  TensorElement operator+(const TensorElement& other) const;
  TensorElement& operator+=(const TensorElement& other);
  TensorElement operator*(const TensorElement& other) const;
  TensorElement swapped() const;

  std::string to_string() const;

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  std::vector<MonomialPair> terms_;
};

TensorElement tensor(const AmbientElement& left, const AmbientElement& right);

// Partition of the terms of e by (weight, dim).  No empty entries.
std::map<Bigrade, AmbientElement> bigrade_components(const AmbientElement& e);

// Partition of the pairs of t by left dimension.  Every pair must have
// dim_left + dim_right == total_dim, otherwise PreconditionError.
std::map<std::int64_t, TensorElement> tensor_components(const TensorElement& t,
                                                       std::int64_t total_dim);

// Sort and drop pairs of equal entries; used by every canonicalizing path.
template <class T>
void cancel_in_place(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  std::size_t out = 0;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i + 1;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 == 1) {
      if (out != i) v[out] = std::move(v[i]);
      ++out;
    }
    i = j;
  }
  v.resize(out);
}

}  // namespace f2hopf
