#include "f2hopf/coalgebra.hpp"

#include <map>

#include "f2hopf/dyer_lashof.hpp"
#include "f2hopf/errors.hpp"

namespace f2hopf {

GradedCoalgebra::GradedCoalgebra(std::string name, std::vector<std::vector<std::string>> labels,
                                 std::vector<std::vector<BitMatrix>> delta)
    : name_(std::move(name)), labels_(std::move(labels)), delta_(std::move(delta)) {
  if (labels_.empty() || labels_[0].size() != 1) {
    throw AlgebraError(name_ + ": degree 0 must be one-dimensional");
  }
  if (delta_.size() != labels_.size()) throw AlgebraError(name_ + ": structure constants missing degrees");
  for (std::size_t d = 0; d < labels_.size(); ++d) {
    if (delta_[d].size() != d + 1) throw AlgebraError(name_ + ": wrong number of splits");
    for (std::size_t s = 0; s <= d; ++s) {
      const auto& m = delta_[d][s];
      if (m.rows() != dim(d) || m.cols() != dim(s) * dim(d - s)) {
        throw AlgebraError(name_ + ": structure constant shape mismatch at degree " +
                           std::to_string(d) + ", split " + std::to_string(s));
      }
    }
  }
  if (!is_coassociative()) throw AlgebraError(name_ + ": structure constants are not coassociative");
}

std::vector<std::size_t> GradedCoalgebra::dims() const {
  std::vector<std::size_t> out;
  out.reserve(labels_.size());
  for (const auto& l : labels_) out.push_back(l.size());
  return out;
}

bool GradedCoalgebra::is_coassociative() const {
  for (std::size_t d = 0; d < labels_.size(); ++d) {
    for (std::size_t x = 0; x < dim(d); ++x) {
      for (std::size_t a = 0; a <= d; ++a) {
        for (std::size_t b = 0; a + b <= d; ++b) {
          const std::size_t c = d - a - b;
          const std::size_t na = dim(a), nb = dim(b), nc = dim(c);
          if (na * nb * nc == 0) continue;
          BitVec lhs(na * nb * nc);
          BitVec rhs(na * nb * nc);
          // (Delta (x) id) Delta: split d -> (a+b, c), then a+b -> (a, b).
          for (auto col : delta_[d][a + b].row(x).set_bits()) {
            const std::size_t p = col / nc, l = col % nc;
            for (auto inner : delta_[a + b][a].row(p).set_bits()) {
              const std::size_t i = inner / nb, j = inner % nb;
              lhs.flip((i * nb + j) * nc + l);
            }
          }
          // (id (x) Delta) Delta: split d -> (a, b+c), then b+c -> (b, c).
          const std::size_t nbc = dim(b + c);
          for (auto col : delta_[d][a].row(x).set_bits()) {
            const std::size_t i = col / nbc, q = col % nbc;
            for (auto inner : delta_[b + c][b].row(q).set_bits()) {
              const std::size_t j = inner / nc, l = inner % nc;
              rhs.flip((i * nb + j) * nc + l);
            }
          }
          if (!(lhs == rhs)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<FamilyMonomial>> basis_by_degree(Family family, std::int64_t k,
                                                         const Limits& limits) {
  std::vector<std::vector<FamilyMonomial>> out;
  for (auto& m : basis(family, k, limits)) {
    const auto d = static_cast<std::size_t>(m.dim());
    if (out.size() <= d) out.resize(d + 1);
    out[d].push_back(std::move(m));
  }
  return out;
}

namespace {

std::vector<std::vector<AmbientElement>> embed_all(
    const std::vector<std::vector<FamilyMonomial>>& by_degree, int max_gen) {
  std::vector<std::vector<AmbientElement>> out(by_degree.size());
  for (std::size_t d = 0; d < by_degree.size(); ++d) {
    for (const auto& m : by_degree[d]) out[d].push_back(embed(m, max_gen));
    SpanSolver<AmbientMonomial> check([&] {
      std::vector<std::vector<AmbientMonomial>> gens;
      for (const auto& e : out[d]) gens.push_back(e.terms());
      return gens;
    }());
    if (!check.independent()) {
      throw SpanError("embedded basis of degree " + std::to_string(d) + " is linearly dependent");
    }
  }
  return out;
}

std::string coalgebra_name(Family family, std::int64_t k) {
  return std::string(family_name(family)) + ":" + std::to_string(k);
}

}  // namespace

FamilyCoalgebra extract_coalgebra(Family family, std::int64_t k, const Limits& limits) {
  auto by_degree = basis_by_degree(family, k, limits);
  const auto emb = embed_all(by_degree, limits.max_gen);
  const std::size_t degrees = by_degree.size();

  std::vector<std::vector<std::string>> labels(degrees);
  for (std::size_t d = 0; d < degrees; ++d) {
    for (const auto& m : by_degree[d]) labels[d].push_back(m.to_string());
  }

  // Coproduct of every basis element, bucketed by left dimension.
  std::vector<std::vector<std::map<std::int64_t, TensorElement>>> parts(degrees);
  for (std::size_t d = 0; d < degrees; ++d) {
    for (const auto& e : emb[d]) {
      parts[d].push_back(tensor_components(coproduct(e), static_cast<std::int64_t>(d)));
    }
  }

  std::vector<std::vector<BitMatrix>> delta(degrees);
  for (std::size_t d = 0; d < degrees; ++d) {
    for (std::size_t s = 0; s <= d; ++s) {
      const std::size_t ns = emb[s].size(), nr = emb[d - s].size();
      std::vector<std::vector<MonomialPair>> gens;
      gens.reserve(ns * nr);
      for (std::size_t i = 0; i < ns; ++i) {
        for (std::size_t j = 0; j < nr; ++j) gens.push_back(tensor(emb[s][i], emb[d - s][j]).terms());
      }
      SpanSolver<MonomialPair> solver(gens);
      BitMatrix m(emb[d].size(), ns * nr);
      for (std::size_t x = 0; x < emb[d].size(); ++x) {
        auto it = parts[d][x].find(static_cast<std::int64_t>(s));
        if (it == parts[d][x].end()) continue;
        auto coords = solver.coordinates(it->second.terms());
        if (!coords) {
          throw SpanError(coalgebra_name(family, k) + ": coproduct of " + labels[d][x] +
                          " leaves the span of basis tensors in split (" + std::to_string(s) +
                          ", " + std::to_string(d - s) + ")");
        }
        m.row(x) = std::move(*coords);
      }
      delta[d].push_back(std::move(m));
    }
  }
  return FamilyCoalgebra{family, k, std::move(by_degree),
                         GradedCoalgebra(coalgebra_name(family, k), std::move(labels), std::move(delta))};
}

bool SSet::contains(std::int64_t s) const {
  return std::binary_search(elements.begin(), elements.end(), s);
}

namespace {

using Buckets = std::map<std::int64_t, std::vector<MonomialPair>>;

Buckets bucket(const TensorElement& t) {
  Buckets out;
  for (const auto& p : t.terms()) out[p.first.dim()].push_back(p);
  return out;
}

SSet keys_of(const Buckets& b) {
  SSet out;
  for (const auto& [s, terms] : b) {
    if (!terms.empty()) out.elements.push_back(s);
  }
  return out;
}

}  // namespace

SSet s_set(const FamilyMonomial& fm, int max_gen) {
  Buckets acc;
  acc[0].emplace_back(AmbientMonomial::one(), AmbientMonomial::one());
  for (const auto& [label, e] : fm.exps()) {
    const Buckets factor = bucket(coproduct(embed_generator(fm.family(), label, max_gen).pow(e)));
    Buckets next;
    for (const auto& [s1, left_terms] : acc) {
      for (const auto& [s2, right_terms] : factor) {
        auto& out = next[s1 + s2];
        for (const auto& [al, ar] : left_terms) {
          for (const auto& [bl, br] : right_terms) out.emplace_back(al * bl, ar * br);
        }
      }
    }
    for (auto& [s, terms] : next) cancel_in_place(terms);
    acc = std::move(next);
  }
  return keys_of(acc);
}

SSet s_set(const AmbientElement& x, std::int64_t dim) {
  SSet out;
  for (const auto& [s, part] : tensor_components(coproduct(x), dim)) out.elements.push_back(s);
  return out;
}

SSet s_set(const GradedCoalgebra& c, std::size_t d, std::size_t x) {
  SSet out;
  for (std::size_t s = 0; s <= d; ++s) {
    if (c.split(d, s).row(x).any()) out.elements.push_back(static_cast<std::int64_t>(s));
  }
  return out;
}

SSet braid_top_s_set_closed_form(std::int64_t k) {
  std::vector<std::int64_t> sums{0};
  for (int j : binary_support(k)) {
    const std::int64_t part = (std::int64_t{1} << (j + 1)) - 1;
    const std::size_t n = sums.size();
    for (std::size_t t = 0; t < n; ++t) sums.push_back(sums[t] + part);
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return SSet{std::move(sums)};
}

CoalgebraInvariants coalgebra_invariants(const GradedCoalgebra& c) {
  CoalgebraInvariants inv;
  inv.dims = c.dims();
  inv.split_ranks.resize(c.degree_count());
  for (std::size_t d = 0; d < c.degree_count(); ++d) {
    for (std::size_t s = 0; s <= d; ++s) inv.split_ranks[d].push_back(c.split(d, s).rank());
  }
  const std::size_t top = c.top_degree();
  if (c.dim(top) == 1) inv.top_s_set = s_set(c, top, 0);
  return inv;
}

std::vector<BitMatrix> steenrod_matrix(const FamilyCoalgebra& c, int j, int max_gen) {
  if (j < 1) throw PreconditionError("Sq_j^* requires j >= 1");
  const auto emb = embed_all(c.basis, max_gen);
  const auto ju = static_cast<std::size_t>(j);
  std::vector<BitMatrix> out;
  for (std::size_t d = 0; d < emb.size(); ++d) {
    if (d < ju) {
      out.emplace_back(emb[d].size(), 0);
      continue;
    }
    std::vector<std::vector<AmbientMonomial>> gens;
    for (const auto& e : emb[d - ju]) gens.push_back(e.terms());
    SpanSolver<AmbientMonomial> solver(gens);
    BitMatrix m(emb[d].size(), emb[d - ju].size());
    for (std::size_t x = 0; x < emb[d].size(); ++x) {
      const AmbientElement image = sqj_dual(emb[d][x], j);
      auto coords = solver.coordinates(image.terms());
      if (!coords) {
        throw SpanError(c.coalgebra.name() + ": Sq_" + std::to_string(j) + "^*(" +
                        c.coalgebra.labels()[d][x] + ") leaves the span of degree " +
                        std::to_string(d - ju));
      }
      m.row(x) = std::move(*coords);
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<BitMatrix> steenrod_matrix(Family family, std::int64_t k, const Limits& limits, int j) {
  return steenrod_matrix(extract_coalgebra(family, k, limits), j, limits.max_gen);
}

bool intertwines(const std::vector<BitMatrix>& maps, const std::vector<BitMatrix>& sq_a,
                 const std::vector<BitMatrix>& sq_b, int j) {
  if (maps.size() != sq_a.size() || maps.size() != sq_b.size() || j < 1) return false;
  const auto ju = static_cast<std::size_t>(j);
  for (std::size_t d = ju; d < maps.size(); ++d) {
    if (!(sq_a[d].then(maps[d - ju]) == maps[d].then(sq_b[d]))) return false;
  }
  return true;
}

}  // namespace f2hopf
