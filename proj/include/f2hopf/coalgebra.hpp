#pragma once

// Finite graded coalgebras over F2 extracted from the family bases, the
// S-set of a class, isomorphism invariants and isomorphism search, and the
// matrices of the dual Steenrod operations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "f2hopf/ambient.hpp"
#include "f2hopf/f2_matrix.hpp"
#include "f2hopf/families.hpp"

namespace f2hopf {

// Structure constants: split(d, s).row(x) holds the coefficients of
// Delta(x)|_{H_s (x) H_{d-s}} on the pairs (i, j), at column i * dim(d - s) + j.
class GradedCoalgebra {
 public:
  GradedCoalgebra() = default;
  // Validates shapes, a one-dimensional degree 0, and coassociativity;
  // throws AlgebraError otherwise.
  GradedCoalgebra(std::string name, std::vector<std::vector<std::string>> labels,
                  std::vector<std::vector<BitMatrix>> delta);

  const std::string& name() const { return name_; }
  std::size_t degree_count() const { return labels_.size(); }
  std::size_t top_degree() const { return labels_.empty() ? 0 : labels_.size() - 1; }
  std::size_t dim(std::size_t d) const { return d < labels_.size() ? labels_[d].size() : 0; }
  std::vector<std::size_t> dims() const;
  const std::vector<std::vector<std::string>>& labels() const { return labels_; }
  const BitMatrix& split(std::size_t d, std::size_t s) const { return delta_[d][s]; }
  bool coefficient(std::size_t d, std::size_t s, std::size_t x, std::size_t i, std::size_t j) const {
    return delta_[d][s].get(x, i * dim(d - s) + j);
  }

  bool is_coassociative() const;

 private:
  std::string name_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<BitMatrix>> delta_;
};

struct FamilyCoalgebra {
  Family family;
  std::int64_t k;
  std::vector<std::vector<FamilyMonomial>> basis;  // by degree, canonical order
  GradedCoalgebra coalgebra;
};

// Basis of (family, k) grouped by dimension.
std::vector<std::vector<FamilyMonomial>> basis_by_degree(Family family, std::int64_t k,
                                                         const Limits& limits = {});

// psi(embed(b)) re-expressed in the basis {embed(b_i) (x) embed(b_j)} by F2
// elimination.  Throws SpanError if a term falls outside the span.
FamilyCoalgebra extract_coalgebra(Family family, std::int64_t k, const Limits& limits = {});

struct SSet {
  std::vector<std::int64_t> elements;  // ascending
  bool contains(std::int64_t s) const;
  friend bool operator==(const SSet&, const SSet&) = default;
};

// {s : psi(x)|_{H_s (x) H_{d-s}} != 0} for x = embed(fm), d = dim(fm).
// The coproduct is built factor by factor, cancelling inside each
// left-dimension bucket.
SSet s_set(const FamilyMonomial& fm, int max_gen = kDefaultMaxGen);
SSet s_set(const AmbientElement& x, std::int64_t dim);
// S-set of the basis element x of degree d, read from the structure constants.
SSet s_set(const GradedCoalgebra& c, std::size_t d, std::size_t x);

// Subset sums of {2^{j+1} - 1 : j in J}, the S-set of prod_{j in J} Q^{j+1} g.
SSet braid_top_s_set_closed_form(std::int64_t k);

struct CoalgebraInvariants {
  std::vector<std::size_t> dims;
  // split_ranks[d][s] = rank of H_d -> H_s (x) H_{d-s}
  std::vector<std::vector<std::size_t>> split_ranks;
  std::optional<SSet> top_s_set;  // only when the top degree is one-dimensional

  friend bool operator==(const CoalgebraInvariants&, const CoalgebraInvariants&) = default;
};

CoalgebraInvariants coalgebra_invariants(const GradedCoalgebra& c);

enum class IsoOutcome { No, Yes, Inconclusive };
std::string_view iso_outcome_name(IsoOutcome o);

struct IsoVerdict {
  IsoOutcome outcome = IsoOutcome::Inconclusive;
  std::string invariant;  // for No: "dims", "top_s_set", "split_ranks" or "search"
  std::string detail;
  // For Yes: witness[d] maps degree d of a to degree d of b (row x = image of x).
  std::vector<BitMatrix> witness;
  std::uint64_t search_space = 0;  // product over degrees of |GL(dim_d, F2)|, saturating
  std::uint64_t examined = 0;      // per-degree candidate matrices tried
};

inline constexpr std::uint64_t kDefaultIsoBudget = 1'000'000;

// Compares invariants, then searches per-degree invertible maps degree by
// degree (depth-first, pruning on every split whose degrees are all fixed).
// The first witness in enumeration order is returned.
IsoVerdict coalgebras_isomorphic(const GradedCoalgebra& a, const GradedCoalgebra& b,
                                 std::uint64_t budget = kDefaultIsoBudget);

// A degree-lowering operation given on both sides (on_x[d] maps degree d to
// d - shift) that an isomorphism is additionally required to intertwine.
struct OperationPair {
  std::vector<BitMatrix> on_a;
  std::vector<BitMatrix> on_b;
  int shift = 1;
};

// Same search restricted to coalgebra isomorphisms f with
// f . op_a == op_b . f for every pair.
IsoVerdict coalgebras_isomorphic(const GradedCoalgebra& a, const GradedCoalgebra& b, std::uint64_t budget,
                                 const std::vector<OperationPair>& operations);

std::uint64_t iso_search_space(const GradedCoalgebra& a);

// Delta_b . f == (f (x) f) . Delta_a on every degree and split.
bool is_coalgebra_map(const GradedCoalgebra& a, const GradedCoalgebra& b,
                      const std::vector<BitMatrix>& maps);
bool is_invertible(const std::vector<BitMatrix>& maps);

// matrices[d] maps degree d to degree d - j (rows: degree d basis); entries
// for d < j have zero columns.  Throws SpanError if Sq_j^* leaves the span.
std::vector<BitMatrix> steenrod_matrix(const FamilyCoalgebra& c, int j = 1,
                                       int max_gen = kDefaultMaxGen);
std::vector<BitMatrix> steenrod_matrix(Family family, std::int64_t k, const Limits& limits = {},
                                       int j = 1);

// f_{d-j} . Sq_a == Sq_b . f_d in every degree.
bool intertwines(const std::vector<BitMatrix>& maps, const std::vector<BitMatrix>& sq_a,
                 const std::vector<BitMatrix>& sq_b, int j = 1);

}  // namespace f2hopf
