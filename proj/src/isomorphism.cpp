#include <limits>
#include <map>
#include <sstream>

#include "f2hopf/coalgebra.hpp"
#include "f2hopf/errors.hpp"

namespace f2hopf {

std::string_view iso_outcome_name(IsoOutcome o) {
  switch (o) {
    case IsoOutcome::No: return "no";
    case IsoOutcome::Yes: return "yes";
    case IsoOutcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::string join(const SSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.elements.size(); ++i) os << (i ? "," : "") << s.elements[i];
  os << '}';
  return os.str();
}

// Checks Delta_b(f_d(x)) == (f_s (x) f_{d-s})(Delta_a(x)) for every split of
// degree d; maps[0..d] must be set.
bool degree_condition(const GradedCoalgebra& a, const GradedCoalgebra& b,
                      const std::vector<BitMatrix>& maps, std::size_t d) {
  for (std::size_t s = 0; s <= d; ++s) {
    const std::size_t r = d - s;
    const std::size_t nr = a.dim(r);
    const std::size_t mr = b.dim(r);
    for (std::size_t x = 0; x < a.dim(d); ++x) {
      const BitVec lhs = b.split(d, s).apply(maps[d].row(x));
      BitVec rhs(b.dim(s) * mr);
      for (auto col : a.split(d, s).row(x).set_bits()) {
        const BitVec& fi = maps[s].row(col / nr);
        const BitVec& fj = maps[r].row(col % nr);
        for (auto p : fi.set_bits()) {
          for (auto q : fj.set_bits()) rhs.flip(p * mr + q);
        }
      }
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_coalgebra_map(const GradedCoalgebra& a, const GradedCoalgebra& b,
                      const std::vector<BitMatrix>& maps) {
  if (a.degree_count() != b.degree_count() || maps.size() != a.degree_count()) return false;
  for (std::size_t d = 0; d < maps.size(); ++d) {
    if (maps[d].rows() != a.dim(d) || maps[d].cols() != b.dim(d)) return false;
  }
  for (std::size_t d = 0; d < maps.size(); ++d) {
    if (!degree_condition(a, b, maps, d)) return false;
  }
  return true;
}

bool is_invertible(const std::vector<BitMatrix>& maps) {
  for (const auto& m : maps) {
    if (m.rows() != m.cols() || m.rank() != m.rows()) return false;
  }
  return true;
}

std::uint64_t iso_search_space(const GradedCoalgebra& a) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (auto n : a.dims()) {
    const std::uint64_t order = general_linear_order(n);
    if (order != 0 && total > kMax / order) return kMax;
    total *= order;
  }
  return total;
}

namespace {

struct Search {
  const GradedCoalgebra& a;
  const GradedCoalgebra& b;
  const std::vector<OperationPair>& operations;
  std::uint64_t budget;
  std::map<std::size_t, std::vector<BitMatrix>> groups;
  std::vector<BitMatrix> maps;
  std::uint64_t examined = 0;
  bool exhausted_budget = false;

  bool operations_commute(std::size_t d) const {
    for (const auto& op : operations) {
      const auto shift = static_cast<std::size_t>(op.shift);
      if (d < shift) continue;
      if (!(op.on_a[d].then(maps[d - shift]) == maps[d].then(op.on_b[d]))) return false;
    }
    return true;
  }

  bool run(std::size_t d) {
    if (d == a.degree_count()) return true;
    for (const auto& candidate : groups.at(a.dim(d))) {
      if (++examined > budget) {
        exhausted_budget = true;
        return false;
      }
      maps[d] = candidate;
      if (degree_condition(a, b, maps, d) && operations_commute(d) && run(d + 1)) return true;
      if (exhausted_budget) return false;
    }
    return false;
  }
};

}  // namespace

IsoVerdict coalgebras_isomorphic(const GradedCoalgebra& a, const GradedCoalgebra& b,
                                 std::uint64_t budget) {
  return coalgebras_isomorphic(a, b, budget, {});
}

IsoVerdict coalgebras_isomorphic(const GradedCoalgebra& a, const GradedCoalgebra& b, std::uint64_t budget,
                                 const std::vector<OperationPair>& operations) {
  IsoVerdict v;
  const auto ia = coalgebra_invariants(a);
  const auto ib = coalgebra_invariants(b);
  v.search_space = iso_search_space(a);
  if (ia.dims != ib.dims) {
    v.outcome = IsoOutcome::No;
    v.invariant = "dims";
    v.detail = a.name() + " has degree dimensions " + join(ia.dims) + ", " + b.name() + " has " +
               join(ib.dims);
    return v;
  }
  if (ia.top_s_set != ib.top_s_set) {
    v.outcome = IsoOutcome::No;
    v.invariant = "top_s_set";
    v.detail = "top class S-sets differ: " + (ia.top_s_set ? join(*ia.top_s_set) : "n/a") + " vs " +
               (ib.top_s_set ? join(*ib.top_s_set) : "n/a");
    return v;
  }
  if (ia.split_ranks != ib.split_ranks) {
    v.outcome = IsoOutcome::No;
    v.invariant = "split_ranks";
    for (std::size_t d = 0; d < ia.split_ranks.size(); ++d) {
      for (std::size_t s = 0; s <= d; ++s) {
        if (ia.split_ranks[d][s] != ib.split_ranks[d][s]) {
          v.detail = "rank of H_" + std::to_string(d) + " -> H_" + std::to_string(s) + " (x) H_" +
                     std::to_string(d - s) + " is " + std::to_string(ia.split_ranks[d][s]) +
                     " vs " + std::to_string(ib.split_ranks[d][s]);
          return v;
        }
      }
    }
    return v;
  }

  for (const auto& op : operations) {
    if (op.shift < 1 || op.on_a.size() != a.degree_count() || op.on_b.size() != b.degree_count()) {
      throw PreconditionError("operation matrices do not match the coalgebra degrees");
    }
  }
  Search search{a, b, operations, budget, {}, std::vector<BitMatrix>(a.degree_count()), 0, false};
  for (auto n : ia.dims) {
    if (search.groups.count(n)) continue;
    if (general_linear_order(n) > budget) {
      v.outcome = IsoOutcome::Inconclusive;
      v.detail = "|GL(" + std::to_string(n) + ", F2)| exceeds the search budget " + std::to_string(budget);
      return v;
    }
    search.groups.emplace(n, general_linear_group(n));
  }
  const bool found = search.run(0);
  v.examined = std::min(search.examined, budget);
  if (found) {
    v.outcome = IsoOutcome::Yes;
    v.witness = std::move(search.maps);
    v.detail = "coalgebra isomorphism found after " + std::to_string(v.examined) + " candidate matrices";
  } else if (search.exhausted_budget) {
    v.outcome = IsoOutcome::Inconclusive;
    v.detail = "search budget " + std::to_string(budget) + " exhausted";
  } else {
    v.outcome = IsoOutcome::No;
    v.invariant = "search";
    v.detail = operations.empty() ? "exhaustive search found no coalgebra isomorphism"
                                  : "exhaustive search found no coalgebra isomorphism intertwining the operations";
  }
  return v;
}

}  // namespace f2hopf
