#pragma once

// Test-only helpers: seeded random generators for ambient and family data,
// triple tensors for coassociativity, and a brute-force coproduct oracle
// that works directly with family generators (no ambient expansion, no
// elimination).

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "f2hopf/coalgebra.hpp"
#include "f2hopf/dyer_lashof.hpp"
#include "f2hopf/families.hpp"

namespace f2hopf::testing {

inline constexpr int kCases = 1000;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

// g^a with |a| <= 6 times up to three Q^i g powers, i <= 4, e <= 3.
inline AmbientMonomial random_monomial(Rng& rng, int max_index = 4) {
  std::map<int, std::int64_t> q;
  const auto factors = rng.uniform(0, 3);
  for (std::int64_t f = 0; f < factors; ++f) q[static_cast<int>(rng.uniform(1, max_index))] += rng.uniform(1, 3);
  return AmbientMonomial(rng.uniform(-6, 6), {q.begin(), q.end()});
}

inline AmbientElement random_element(Rng& rng, int max_terms = 4, int max_index = 4) {
  std::vector<AmbientMonomial> terms;
  const auto n = rng.uniform(0, max_terms);
  for (std::int64_t t = 0; t < n; ++t) terms.push_back(random_monomial(rng, max_index));
  return AmbientElement(std::move(terms));
}

// seed * (nonempty subset of {a^2, ab, b^2}) with a = g^2 Q^2 g and
// b = (Qg)^3, which share bigrade (6, 3).
inline AmbientElement random_homogeneous(Rng& rng, int max_index = 4) {
  const AmbientMonomial seed = random_monomial(rng, max_index);
  const AmbientMonomial a(2, {{2, 1}});
  const AmbientMonomial b(0, {{1, 3}});
  const AmbientMonomial choices[] = {a * a, a * b, b * b};
  const auto mask = rng.uniform(1, 7);
  std::vector<AmbientMonomial> terms;
  for (int i = 0; i < 3; ++i) {
    if ((mask >> i) & 1) terms.push_back(seed * choices[i]);
  }
  return AmbientElement(std::move(terms));
}

using Triple = std::tuple<AmbientMonomial, AmbientMonomial, AmbientMonomial>;

inline void toggle(std::set<Triple>& s, Triple t) {
  if (!s.insert(t).second) s.erase(t);
}

// (psi (x) id) psi
inline std::set<Triple> coassoc_left(const AmbientElement& x) {
  std::set<Triple> out;
  const TensorElement psi = coproduct(x);
  for (const auto& [l, r] : psi.terms()) {
    const TensorElement inner = coproduct(l);
    for (const auto& [ll, lr] : inner.terms()) toggle(out, {ll, lr, r});
  }
  return out;
}

// (id (x) psi) psi
inline std::set<Triple> coassoc_right(const AmbientElement& x) {
  std::set<Triple> out;
  const TensorElement psi = coproduct(x);
  for (const auto& [l, r] : psi.terms()) {
    const TensorElement inner = coproduct(r);
    for (const auto& [rl, rr] : inner.terms()) toggle(out, {l, rl, rr});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Family-level oracle.

using FamilyPair = std::pair<FamilyMonomial, FamilyMonomial>;
using FamilyTensor = std::set<FamilyPair>;  // terms with coefficient 1

inline void toggle(FamilyTensor& t, const FamilyPair& p) {
  if (!t.insert(p).second) t.erase(p);
}

inline FamilyTensor tensor_mul(const FamilyTensor& a, const FamilyTensor& b) {
  FamilyTensor out;
  for (const auto& [al, ar] : a) {
    for (const auto& [bl, br] : b) toggle(out, {al * bl, ar * br});
  }
  return out;
}

// Family polynomials as sets of monomials.
using FamilyPoly = std::set<FamilyMonomial>;

inline FamilyPoly poly_mul(const FamilyPoly& a, const FamilyPoly& b) {
  FamilyPoly out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      const FamilyMonomial p = x * y;
      if (!out.insert(p).second) out.erase(p);
    }
  }
  return out;
}

inline FamilyPoly poly_add(FamilyPoly a, const FamilyPoly& b) {
  for (const auto& m : b) {
    if (!a.insert(m).second) a.erase(m);
  }
  return a;
}

// Q^i g written in the Rat generators:
//   Q g = g rho_0,   Q^{i+1} g = g^{2^i} rho_i + rho_0^{2^i} Q^i g.
inline FamilyPoly rat_q_generator(int i) {
  const auto gen = [](int label, std::int64_t e) { return FamilyMonomial::generator(Family::Rat, label, e); };
  FamilyPoly q{gen(-1, 1) * gen(0, 1)};
  for (int j = 1; j < i; ++j) {
    const std::int64_t p = std::int64_t{1} << j;
    q = poly_add({gen(-1, p) * gen(j, 1)}, poly_mul({gen(0, p)}, q));
  }
  return q;
}

inline FamilyTensor generator_coproduct(Family family, int label) {
  const auto gen = [family](int l, std::int64_t e) { return FamilyMonomial::generator(family, l, e); };
  const FamilyMonomial one(family);
  switch (family) {
    case Family::Conf:
      return {{one, gen(label, 1)}, {gen(label, 1), one}};
    case Family::Braid: {
      if (label == 0) return {{gen(0, 1), gen(0, 1)}};
      const FamilyMonomial gw = gen(0, std::int64_t{1} << label);
      return {{gw, gen(label, 1)}, {gen(label, 1), gw}};
    }
    case Family::Rat: {
      if (label == -1) return {{gen(-1, 1), gen(-1, 1)}};
      const std::int64_t w = std::int64_t{1} << label;
      const FamilyMonomial gw = gen(-1, w);
      FamilyTensor t{{gw, gen(label, 1)}, {gen(label, 1), gw}};
      if (label >= 1) {
        const FamilyMonomial r0 = gen(0, w);
        for (const auto& q : rat_q_generator(label)) {
          toggle(t, {q, r0});
          toggle(t, {r0, q});
        }
      }
      return t;
    }
  }
  return {};
}

inline FamilyTensor brute_coproduct(const FamilyMonomial& m) {
  FamilyTensor acc{{FamilyMonomial(m.family()), FamilyMonomial(m.family())}};
  for (const auto& [label, e] : m.exps()) {
    const FamilyTensor g = generator_coproduct(m.family(), label);
    for (std::int64_t t = 0; t < e; ++t) acc = tensor_mul(acc, g);
  }
  return acc;
}

// Coproduct of a basis element read back from extracted structure constants.
inline FamilyTensor extracted_coproduct(const FamilyCoalgebra& c, std::size_t d, std::size_t x) {
  FamilyTensor out;
  for (std::size_t s = 0; s <= d; ++s) {
    const std::size_t nr = c.basis[d - s].size();
    for (auto col : c.coalgebra.split(d, s).row(x).set_bits()) {
      out.insert({c.basis[s][col / nr], c.basis[d - s][col % nr]});
    }
  }
  return out;
}

}  // namespace f2hopf::testing
