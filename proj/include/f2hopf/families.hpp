#pragma once

// The three generator families and their weight-graded bases:
//
//   Braid  gamma_i = Q^i g (i >= 0, gamma_0 = g)   weight 2^i, dim 2^i - 1
//   Rat    g (label -1), rho_i = Q^i(g^-1 Qg)      weight 2^i, dim 2^{i+1} - 1
//   Conf   c_i = Q^i(g^-2 Qg)                      weight 2^i, dim 2^{i+1} - 1
//
// Braid and Rat monomials embed with ambient weight equal to their family
// weight.  Conf monomials live in the weight-0 component of the ambient
// algebra; their family weight is the configuration length.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "f2hopf/ambient.hpp"

namespace f2hopf {

enum class Family { Braid, Rat, Conf };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct Limits {
  int max_gen = kDefaultMaxGen;
  std::int64_t basis_k_bound = 1024;
  std::size_t max_basis_size = std::size_t{1} << 20;
};

// Generator label conventions: Braid 0 = g, i = gamma_i; Rat -1 = g,
// i = rho_i; Conf i = c_i.
int min_label(Family f);
std::string generator_name(Family f, int label);
std::optional<int> parse_generator_name(Family f, std::string_view name);
Bigrade generator_bigrade(Family f, int label);

class FamilyMonomial {
 public:
  using Factor = std::pair<int, std::int64_t>;  // (label, exponent > 0)

  explicit FamilyMonomial(Family family) : family_(family) {}
  FamilyMonomial(Family family, std::vector<Factor> exps);

  static FamilyMonomial generator(Family family, int label, std::int64_t exponent = 1) {
    return FamilyMonomial(family, {{label, exponent}});
  }

  Family family() const { return family_; }
  const std::vector<Factor>& exps() const { return exps_; }
  std::int64_t exponent(int label) const;
  bool is_unit() const { return exps_.empty(); }

  std::int64_t weight() const;
  std::int64_t dim() const;
  Bigrade bigrade() const { return {weight(), dim()}; }

  FamilyMonomial operator*(const FamilyMonomial& other) const;

  // e.g. "g^2*rho_1", "1" for the unit.
  std::string to_string() const;

  friend auto operator<=>(const FamilyMonomial&, const FamilyMonomial&) = default;
  friend bool operator==(const FamilyMonomial&, const FamilyMonomial&) = default;

 private:
  Family family_;
  std::vector<Factor> exps_;
};

AmbientElement embed_generator(Family family, int label, int max_gen = kDefaultMaxGen);
// Multiplicative; homogeneous with the monomial's dimension.
AmbientElement embed(const FamilyMonomial& fm, int max_gen = kDefaultMaxGen);

// Canonical basis order: dimension ascending, then exponent vectors (in
// label order) descending lexicographically.
bool basis_order_less(const FamilyMonomial& a, const FamilyMonomial& b);

// Braid, Rat: monomials of weight exactly k.  Conf: weight <= k, unit included.
std::vector<FamilyMonomial> basis(Family family, std::int64_t k, const Limits& limits = {});

// Top class for Rat_k (prod_{j in J} rho_j) or for B beta_{2k}
// (prod_{j in J} gamma_{j+1}), where k = sum_{j in J} 2^j.
FamilyMonomial top_class(Family family, std::int64_t k);

// Entry d counts basis monomials of dimension d.
std::vector<std::size_t> poincare_vector(Family family, std::int64_t k, const Limits& limits = {});

// Binary expansion set J of k.
std::vector<int> binary_support(std::int64_t k);

}  // namespace f2hopf
