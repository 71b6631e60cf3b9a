#include "doctest.h"

#include "f2hopf/dyer_lashof.hpp"
#include "f2hopf/errors.hpp"

using namespace f2hopf;

namespace {

AmbientMonomial g(std::int64_t a) { return AmbientMonomial::g_power(a); }
AmbientMonomial q(int i, std::int64_t e = 1) { return AmbientMonomial::q_generator(i, e); }

// Q(g^a) by repeated Cartan splitting g^a = g^{a-s} * g^s, s = sign(a),
// with only Q(g^{+-1}) taken as known.
AmbientElement q_of_g_power_by_splitting(std::int64_t a) {
  if (a == 0) return AmbientElement::zero();
  if (a == 1) return AmbientElement(q(1));
  if (a == -1) return AmbientElement(g(-4) * q(1));
  const std::int64_t s = a > 0 ? 1 : -1;
  const AmbientElement x = g(a - s);
  const AmbientElement y = g(s);
  return x.square() * q_of_g_power_by_splitting(s) + q_of_g_power_by_splitting(a - s) * y.square();
}

}  // namespace

TEST_CASE("Q on g powers") {
  CHECK(araki_kudo_q(g(-1)) == AmbientElement(g(-4) * q(1)));
  CHECK(araki_kudo_q(g(2)).is_zero());
  CHECK(araki_kudo_q(g(1)) == AmbientElement(q(1)));
  CHECK(araki_kudo_q(AmbientMonomial::one()).is_zero());
  for (std::int64_t a = -16; a <= 16; ++a) {
    CAPTURE(a);
    const AmbientElement closed = (a % 2 != 0) ? AmbientElement(g(2 * (a - 1)) * q(1)) : AmbientElement::zero();
    CHECK(araki_kudo_q(g(a)) == closed);
    CHECK(araki_kudo_q(g(a)) == q_of_g_power_by_splitting(a));
  }
}

TEST_CASE("Q(g^-1 Qg) expands to two terms") {
  const AmbientElement expected = AmbientElement(g(-2) * q(2)) + g(-4) * q(1, 3);
  CHECK(araki_kudo_q(g(-1) * q(1)) == expected);
  CHECK(araki_kudo_q(g(-2) * q(1)) == AmbientElement(g(-4) * q(2)));
}

TEST_CASE("Q on generator powers") {
  CHECK(araki_kudo_q(q(3)) == AmbientElement(q(4)));
  CHECK(araki_kudo_q(q(1, 3)) == AmbientElement(q(1, 4) * q(2)));
  CHECK(araki_kudo_q(q(2, 2)).is_zero());
  CHECK(araki_kudo_iterate(AmbientElement(g(1)), 5) == AmbientElement(q(5)));
  CHECK(araki_kudo_iterate(AmbientElement(g(1)), 0) == AmbientElement(g(1)));
}

TEST_CASE("Q respects the generator limit") {
  CHECK_THROWS_AS(araki_kudo_q(q(4), 4), GeneratorIndexError);
  CHECK_NOTHROW(araki_kudo_q(q(4), 5));
  CHECK_THROWS_AS(araki_kudo_iterate(AmbientElement(g(1)), 9, 8), GeneratorIndexError);
}

TEST_CASE("coproduct on generators") {
  CHECK(coproduct(g(1)) == tensor(g(1), g(1)));
  CHECK(coproduct(g(-1)) == tensor(g(-1), g(-1)));
  for (int i = 1; i <= 8; ++i) {
    CAPTURE(i);
    const AmbientMonomial gw = g(std::int64_t{1} << i);
    CHECK(coproduct(q(i)) == tensor(gw, q(i)) + tensor(q(i), gw));
  }
  const AmbientElement rho0 = g(-1) * q(1);
  CHECK(coproduct(rho0) == tensor(g(1), rho0) + tensor(rho0, g(1)));
}

TEST_CASE("coproduct of rho_i matches the four-term formula") {
  const AmbientElement rho0 = g(-1) * q(1);
  for (int i = 1; i <= 6; ++i) {
    CAPTURE(i);
    const std::int64_t w = std::int64_t{1} << i;
    const AmbientElement rho_i = araki_kudo_iterate(rho0, i);
    const AmbientElement gw = g(w);
    const AmbientElement qi = q(i);
    const AmbientElement r0w = rho0.pow(w);
    const TensorElement expected = tensor(gw, rho_i) + tensor(qi, r0w) + tensor(r0w, qi) + tensor(rho_i, gw);
    CHECK(coproduct(rho_i) == expected);
  }
}

TEST_CASE("c_i is primitive") {
  const AmbientElement c0 = g(-2) * q(1);
  for (int i = 0; i <= 6; ++i) {
    const AmbientElement ci = araki_kudo_iterate(c0, i);
    CHECK(ci == AmbientElement(g(-(std::int64_t{2} << i)) * q(i + 1)));
    CHECK(coproduct(ci) == tensor(AmbientElement::one(), ci) + tensor(ci, AmbientElement::one()));
  }
}

TEST_CASE("Sq_1^*") {
  CHECK(sq1_dual(g(2) * q(2)) == AmbientElement(g(2) * q(1, 2)));
  const AmbientElement g_rho1 = AmbientElement(g(-1) * q(2)) + g(-3) * q(1, 3);
  CHECK(sq1_dual(AmbientElement(g(1)) * araki_kudo_q(g(-1) * q(1))) == AmbientElement(g(-1) * q(1, 2)));
  CHECK(sq1_dual(g_rho1) == AmbientElement(g(-1) * q(1, 2)));
  CHECK(sq1_dual(g(3)).is_zero());
  CHECK(sq1_dual(q(1)).is_zero());
  CHECK(sq1_dual(q(3)) == AmbientElement(q(2, 2)));
  CHECK(sq1_dual(q(3, 2)).is_zero());
}

TEST_CASE("Sq_j^* for j >= 2") {
  CHECK(sqj_dual(q(2), 2).is_zero());
  CHECK(sqj_dual(q(2, 2), 2) == AmbientElement(q(1, 4)));
  CHECK(sqj_dual(q(2, 2), 2) == sq1_dual(q(2)).square());
  CHECK(sqj_dual(q(2) * q(3), 2) == AmbientElement(q(1, 2) * q(2, 2)));
  CHECK(sqj_dual(q(3), 8).is_zero());
  CHECK(sqj_dual(q(2), 1) == sq1_dual(q(2)));
}
