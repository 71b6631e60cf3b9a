#pragma once

// Executable checks: multiplication by g between consecutive braid
// components, the braid/configuration coalgebra correspondence, and the
// S-set comparison of top classes of Rat_k and B beta_{2k}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "f2hopf/coalgebra.hpp"

namespace f2hopf {

struct LemmaBraidResult {
  std::int64_t k = 0;
  std::size_t basis_size = 0;
  bool bijection = false;         // m -> g*m maps basis(2k) onto basis(2k+1)
  bool coproducts_match = false;  // psi(g*m) == (g (x) g) psi(m)
  bool coalgebra_map = false;     // extracted structure constants agree under m -> g*m
  std::string failure;            // first failing element, empty when ok

  bool ok() const { return bijection && coproducts_match && coalgebra_map; }
};

LemmaBraidResult check_lemma_braid(std::int64_t k, const Limits& limits = {});
// Same check on explicitly supplied bases of B beta_{2k} and B beta_{2k+1},
// in any order.
LemmaBraidResult check_lemma_braid_on(std::int64_t k, const std::vector<FamilyMonomial>& even,
                                      const std::vector<FamilyMonomial>& odd,
                                      const Limits& limits = {});

// prod c_i^{e_i} (family weight w) -> g^{2(k - w)} prod gamma_{i+1}^{e_i}
FamilyMonomial conf_to_braid_candidate(const FamilyMonomial& conf, std::int64_t k);

struct BraidConfResult {
  std::int64_t k = 0;
  std::string route;  // "candidate", "search", or "none"
  bool isomorphic = false;
  bool candidate_bijective = false;
  bool candidate_is_coalgebra_map = false;
  std::optional<IsoVerdict> search;
  CoalgebraInvariants conf_invariants;
};

BraidConfResult check_braid_conf(std::int64_t k, std::uint64_t budget = kDefaultIsoBudget,
                                 const Limits& limits = {});

enum class TheoremBranch { NotPowerOfTwo, PowerOfTwo };
std::string_view branch_name(TheoremBranch b);

struct TheoremReport {
  std::int64_t k = 0;
  std::vector<int> j_set;
  std::int64_t top_dim = 0;
  FamilyMonomial x{Family::Rat};
  FamilyMonomial y{Family::Braid};
  SSet s_x;
  SSet s_y;
  bool distinct = false;
  TheoremBranch branch = TheoremBranch::NotPowerOfTwo;
  bool closed_form_agrees = false;  // S(y) equals the subset-sum closed form

  // k + 1 not a power of 2: smallest r >= 1 with r in J, r - 1 not in J.
  std::optional<int> r;
  std::optional<std::int64_t> witness;  // 2^r - 1
  bool witness_holds = false;           // witness in S(x) \ S(y)

  // k + 1 = 2^{r+1}, k > 3: 5 in S(x) \ S(y) and 2 in neither.
  bool power_branch_holds = false;

  // Run when the S-sets agree (k = 1, 3 expected).
  std::optional<IsoVerdict> isomorphism;

  // The outcome predicted for this k: distinct with its branch witness for
  // k not in {1, 3}; equal S-sets and an explicit isomorphism for k in {1, 3}.
  bool consistent() const;
};

TheoremReport theorem_main(std::int64_t k, std::uint64_t budget = kDefaultIsoBudget,
                           const Limits& limits = {});

}  // namespace f2hopf
