#include "f2hopf/dyer_lashof.hpp"

#include <string>

#include "f2hopf/errors.hpp"

namespace f2hopf {

namespace {

using Factor = AmbientMonomial::Factor;

void require_index(int index, int max_gen) {
  if (index > max_gen) {
    throw GeneratorIndexError("Q^" + std::to_string(index) + "g exceeds max generator index " +
                              std::to_string(max_gen));
  }
}

// Q(g^a)
AmbientElement q_of_g_power(std::int64_t a, int max_gen) {
  if (a % 2 == 0) return {};
  require_index(1, max_gen);
  return AmbientMonomial(checked_mul(2, checked_add(a, -1)), {{1, 1}});
}

// Q((Q^i g)^e)
AmbientElement q_of_generator_power(int index, std::int64_t e, int max_gen) {
  if (e % 2 == 0) return {};
  require_index(index + 1, max_gen);
  return AmbientMonomial(0, {{index, checked_add(checked_mul(2, e), -2)}, {index + 1, 1}});
}

// Q on g^{g_exp} * prod(factors); the leading factor is split off.
AmbientElement q_recursive(std::int64_t g_exp, std::span<const Factor> factors, int max_gen) {
  if (factors.empty()) return q_of_g_power(g_exp, max_gen);
  if (g_exp != 0) {
    // x = g^{g_exp}, y = rest.
    const AmbientMonomial x = AmbientMonomial::g_power(g_exp);
    const AmbientMonomial y(0, {factors.begin(), factors.end()});
    AmbientElement out = AmbientElement(x.pow(2)) * q_recursive(0, factors, max_gen);
    out += q_of_g_power(g_exp, max_gen) * AmbientElement(y.pow(2));
    return out;
  }
  const auto& [index, e] = factors.front();
  const AmbientMonomial x = AmbientMonomial::q_generator(index, e);
  const auto rest = factors.subspan(1);
  if (rest.empty()) return q_of_generator_power(index, e, max_gen);
  const AmbientMonomial y(0, {rest.begin(), rest.end()});
  AmbientElement out = AmbientElement(x.pow(2)) * q_recursive(0, rest, max_gen);
  out += q_of_generator_power(index, e, max_gen) * AmbientElement(y.pow(2));
  return out;
}

}  // namespace

AmbientElement araki_kudo_q(const AmbientMonomial& m, int max_gen) {
  if (max_gen < 1 || max_gen > kHardMaxGen) {
    throw PreconditionError("max_gen must lie in [1, " + std::to_string(kHardMaxGen) + "]");
  }
  return q_recursive(m.g_exp(), m.q_exps(), max_gen);
}

AmbientElement araki_kudo_q(const AmbientElement& e, int max_gen) {
  std::vector<AmbientMonomial> terms;
  for (const auto& m : e.terms()) {
    const AmbientElement image = araki_kudo_q(m, max_gen);
    terms.insert(terms.end(), image.terms().begin(), image.terms().end());
  }
  return AmbientElement(std::move(terms));
}

AmbientElement araki_kudo_iterate(const AmbientElement& e, int times, int max_gen) {
  if (times < 0) throw PreconditionError("negative iteration count for Q");
  AmbientElement out = e;
  for (int t = 0; t < times; ++t) out = araki_kudo_q(out, max_gen);
  return out;
}

TensorElement coproduct(const AmbientMonomial& m) {
  // psi((Q^i g)^e) = sum over submasks j of e (Lucas: C(e, j) odd) of
  //   (Q^i g)^j g^{2^i (e - j)} (x) (Q^i g)^{e - j} g^{2^i j}.
  const AmbientMonomial g_part = AmbientMonomial::g_power(m.g_exp());
  std::vector<MonomialPair> acc{{g_part, g_part}};
  for (const auto& [index, e] : m.q_exps()) {
    const std::int64_t step = std::int64_t{1} << index;
    std::vector<MonomialPair> next;
    for (std::int64_t j = e;; j = (j - 1) & e) {
      const AmbientMonomial left(checked_mul(step, e - j), {{index, j}});
      const AmbientMonomial right(checked_mul(step, j), {{index, e - j}});
      for (const auto& [l, r] : acc) next.emplace_back(l * left, r * right);
      if (j == 0) break;
    }
    acc = std::move(next);
  }
  return TensorElement(std::move(acc));
}

TensorElement coproduct(const AmbientElement& e) {
  std::vector<MonomialPair> terms;
  for (const auto& m : e.terms()) {
    const TensorElement image = coproduct(m);
    terms.insert(terms.end(), image.terms().begin(), image.terms().end());
  }
  return TensorElement(std::move(terms));
}

AmbientElement sq1_dual(const AmbientMonomial& m) {
  std::vector<AmbientMonomial> terms;
  for (const auto& [index, e] : m.q_exps()) {
    // e copies each contribute; only odd e survives mod 2.
    if (index < 2 || e % 2 == 0) continue;
    terms.push_back(m.without_one(index) * AmbientMonomial::q_generator(index - 1, 2));
  }
  return AmbientElement(std::move(terms));
}

AmbientElement sq1_dual(const AmbientElement& e) {
  std::vector<AmbientMonomial> terms;
  for (const auto& m : e.terms()) {
    const AmbientElement image = sq1_dual(m);
    terms.insert(terms.end(), image.terms().begin(), image.terms().end());
  }
  return AmbientElement(std::move(terms));
}

namespace {

// Choose how many of the e_i copies of each Q^i g (i >= 2) are hit by Sq_1^*;
// the multiplicity of a choice h is C(e_i, h) mod 2.
void sqj_hits(std::span<const Factor> factors, std::int64_t remaining, AmbientMonomial current,
              std::vector<AmbientMonomial>& out) {
  if (factors.empty()) {
    if (remaining == 0) out.push_back(std::move(current));
    return;
  }
  const auto& [index, e] = factors.front();
  const auto rest = factors.subspan(1);
  if (index < 2) {
    sqj_hits(rest, remaining, current * AmbientMonomial::q_generator(index, e), out);
    return;
  }
  for (std::int64_t h = 0; h <= std::min(e, remaining); ++h) {
    if ((h & e) != h) continue;
    AmbientMonomial piece(0, {{index, e - h}, {index - 1, checked_mul(2, h)}});
    sqj_hits(rest, remaining - h, current * piece, out);
  }
}

}  // namespace

AmbientElement sqj_dual(const AmbientElement& e, int j) {
  if (j < 1) throw PreconditionError("Sq_j^* requires j >= 1");
  if (j == 1) return sq1_dual(e);
  std::vector<AmbientMonomial> terms;
  for (const auto& m : e.terms()) {
    if (m.dim() < j) continue;
    sqj_hits(m.q_exps(), j, AmbientMonomial::g_power(m.g_exp()), terms);
  }
  return AmbientElement(std::move(terms));
}

}  // namespace f2hopf
