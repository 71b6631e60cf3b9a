#include "f2hopf/verification.hpp"

#include <map>
#include <set>

#include "f2hopf/dyer_lashof.hpp"
#include "f2hopf/errors.hpp"

namespace f2hopf {

namespace {

using Position = std::pair<std::size_t, std::size_t>;  // (degree, index)

std::map<FamilyMonomial, Position> positions(const FamilyCoalgebra& c) {
  std::map<FamilyMonomial, Position> out;
  for (std::size_t d = 0; d < c.basis.size(); ++d) {
    for (std::size_t i = 0; i < c.basis[d].size(); ++i) out.emplace(c.basis[d][i], Position{d, i});
  }
  return out;
}

// Per-degree matrices of a basis-to-basis map; nullopt unless it is a
// degree-preserving bijection.
template <class F>
std::optional<std::vector<BitMatrix>> basis_map(const FamilyCoalgebra& from, const FamilyCoalgebra& to,
                                                F&& image) {
  if (from.basis.size() != to.basis.size()) return std::nullopt;
  const auto target = positions(to);
  std::vector<BitMatrix> maps;
  std::set<Position> hit;
  for (std::size_t d = 0; d < from.basis.size(); ++d) {
    if (from.basis[d].size() != to.basis[d].size()) return std::nullopt;
    BitMatrix m(from.basis[d].size(), to.basis[d].size());
    for (std::size_t i = 0; i < from.basis[d].size(); ++i) {
      auto it = target.find(image(from.basis[d][i]));
      if (it == target.end() || it->second.first != d || !hit.insert(it->second).second) {
        return std::nullopt;
      }
      m.set(i, it->second.second);
    }
    maps.push_back(std::move(m));
  }
  return maps;
}

const FamilyMonomial kBraidG = FamilyMonomial::generator(Family::Braid, 0);

}  // namespace

LemmaBraidResult check_lemma_braid_on(std::int64_t k, const std::vector<FamilyMonomial>& even,
                                      const std::vector<FamilyMonomial>& odd, const Limits& limits) {
  LemmaBraidResult res;
  res.k = k;
  res.basis_size = even.size();

  const std::set<FamilyMonomial> odd_set(odd.begin(), odd.end());
  std::set<FamilyMonomial> images;
  res.bijection = odd_set.size() == odd.size() && even.size() == odd.size();
  for (const auto& m : even) {
    const FamilyMonomial gm = kBraidG * m;
    if (!odd_set.count(gm) || !images.insert(gm).second) {
      res.bijection = false;
      if (res.failure.empty()) res.failure = "g*" + m.to_string() + " is not a distinct basis element";
    }
  }
  res.bijection = res.bijection && images.size() == odd_set.size();

  res.coproducts_match = true;
  const TensorElement gg = tensor(AmbientMonomial::g_power(1), AmbientMonomial::g_power(1));
  for (const auto& m : even) {
    const AmbientElement e = embed(m, limits.max_gen);
    const AmbientElement ge = embed(kBraidG * m, limits.max_gen);
    if (!(coproduct(ge) == gg * coproduct(e))) {
      res.coproducts_match = false;
      if (res.failure.empty()) res.failure = "psi(g*" + m.to_string() + ") != (g (x) g) psi(" + m.to_string() + ")";
    }
  }

  const auto ce = extract_coalgebra(Family::Braid, 2 * k, limits);
  const auto co = extract_coalgebra(Family::Braid, 2 * k + 1, limits);
  const auto maps = basis_map(ce, co, [](const FamilyMonomial& m) { return kBraidG * m; });
  res.coalgebra_map = maps && is_invertible(*maps) && is_coalgebra_map(ce.coalgebra, co.coalgebra, *maps);
  if (!res.coalgebra_map && res.failure.empty()) res.failure = "structure constants differ under m -> g*m";
  return res;
}

LemmaBraidResult check_lemma_braid(std::int64_t k, const Limits& limits) {
  if (k < 1) throw PreconditionError("lemma-braid requires k >= 1");
  return check_lemma_braid_on(k, basis(Family::Braid, 2 * k, limits),
                              basis(Family::Braid, 2 * k + 1, limits), limits);
}

FamilyMonomial conf_to_braid_candidate(const FamilyMonomial& conf, std::int64_t k) {
  if (conf.family() != Family::Conf) throw PreconditionError("expected a conf monomial");
  const std::int64_t w = conf.weight();
  if (w > k) throw PreconditionError("conf monomial weight exceeds k");
  std::vector<FamilyMonomial::Factor> exps{{0, 2 * (k - w)}};
  for (const auto& [label, e] : conf.exps()) exps.emplace_back(label + 1, e);
  return FamilyMonomial(Family::Braid, std::move(exps));
}

BraidConfResult check_braid_conf(std::int64_t k, std::uint64_t budget, const Limits& limits) {
  if (k < 1) throw PreconditionError("braid-conf requires k >= 1");
  BraidConfResult res;
  res.k = k;
  const auto conf = extract_coalgebra(Family::Conf, k, limits);
  const auto braid = extract_coalgebra(Family::Braid, 2 * k, limits);
  res.conf_invariants = coalgebra_invariants(conf.coalgebra);

  const auto maps =
      basis_map(conf, braid, [k](const FamilyMonomial& m) { return conf_to_braid_candidate(m, k); });
  res.candidate_bijective = maps.has_value();
  res.candidate_is_coalgebra_map = maps && is_coalgebra_map(conf.coalgebra, braid.coalgebra, *maps);
  if (res.candidate_bijective && res.candidate_is_coalgebra_map) {
    res.route = "candidate";
    res.isomorphic = true;
    return res;
  }
  res.search = coalgebras_isomorphic(conf.coalgebra, braid.coalgebra, budget);
  res.isomorphic = res.search->outcome == IsoOutcome::Yes;
  res.route = res.isomorphic ? "search" : "none";
  return res;
}

std::string_view branch_name(TheoremBranch b) {
  return b == TheoremBranch::PowerOfTwo ? "k+1 power of 2" : "k+1 not a power of 2";
}

bool TheoremReport::consistent() const {
  if (!closed_form_agrees) return false;
  if (k == 1 || k == 3) {
    return !distinct && isomorphism && isomorphism->outcome == IsoOutcome::Yes;
  }
  if (!distinct) return false;
  return branch == TheoremBranch::NotPowerOfTwo ? witness_holds : power_branch_holds;
}

TheoremReport theorem_main(std::int64_t k, std::uint64_t budget, const Limits& limits) {
  if (k < 1) throw PreconditionError("theorem-main requires k >= 1");
  TheoremReport rep;
  rep.k = k;
  rep.j_set = binary_support(k);
  rep.x = top_class(Family::Rat, k);
  rep.y = top_class(Family::Braid, k);
  rep.top_dim = rep.x.dim();
  if (rep.y.dim() != rep.top_dim) throw AlgebraError("top classes have different dimensions");
  rep.s_x = s_set(rep.x, limits.max_gen);
  rep.s_y = s_set(rep.y, limits.max_gen);
  rep.distinct = !(rep.s_x == rep.s_y);
  rep.closed_form_agrees = rep.s_y == braid_top_s_set_closed_form(k);

  const bool power = ((k + 1) & k) == 0;
  rep.branch = power ? TheoremBranch::PowerOfTwo : TheoremBranch::NotPowerOfTwo;
  if (!power) {
    const std::set<int> j(rep.j_set.begin(), rep.j_set.end());
    for (int r : rep.j_set) {
      if (r >= 1 && !j.count(r - 1)) {
        rep.r = r;
        break;
      }
    }
    if (rep.r) {
      rep.witness = (std::int64_t{1} << *rep.r) - 1;
      rep.witness_holds = rep.s_x.contains(*rep.witness) && !rep.s_y.contains(*rep.witness);
    }
  } else if (k > 3) {
    rep.power_branch_holds = rep.s_x.contains(5) && !rep.s_y.contains(5) && !rep.s_x.contains(2) &&
                             !rep.s_y.contains(2);
  }

  if (!rep.distinct) {
    const auto braid = extract_coalgebra(Family::Braid, 2 * k, limits);
    const auto rat = extract_coalgebra(Family::Rat, k, limits);
    rep.isomorphism = coalgebras_isomorphic(braid.coalgebra, rat.coalgebra, budget);
  }
  return rep;
}

}  // namespace f2hopf
