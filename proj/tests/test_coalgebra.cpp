#include "doctest.h"

#include "f2hopf/coalgebra.hpp"
#include "f2hopf/errors.hpp"
#include "f2hopf/serialize.hpp"
#include "support.hpp"

using namespace f2hopf;

namespace {

std::size_t index_of(const FamilyCoalgebra& c, std::size_t d, const std::string& label) {
  const auto& labels = c.coalgebra.labels()[d];
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  FAIL("missing label " << label);
  return 0;
}

SSet sset(std::vector<std::int64_t> v) { return SSet{std::move(v)}; }

}  // namespace

TEST_CASE("extracted coalgebras of small cases") {
  const auto b2 = extract_coalgebra(Family::Braid, 2);
  CHECK(b2.coalgebra.dims() == std::vector<std::size_t>{1, 1});
  CHECK(b2.coalgebra.labels()[1][0] == "gamma_1");
  CHECK(b2.coalgebra.coefficient(1, 0, 0, 0, 0));
  CHECK(b2.coalgebra.coefficient(1, 1, 0, 0, 0));

  const auto r1 = extract_coalgebra(Family::Rat, 1);
  CHECK(r1.coalgebra.labels()[0][0] == "g");
  CHECK(r1.coalgebra.labels()[1][0] == "rho_0");
  CHECK(s_set(r1.coalgebra, 1, 0) == sset({0, 1}));

  const auto r2 = extract_coalgebra(Family::Rat, 2);
  const std::size_t rho1 = index_of(r2, 3, "rho_1");
  CHECK(s_set(r2.coalgebra, 3, rho1) == sset({0, 1, 2, 3}));
}

TEST_CASE("structure constants match the brute-force oracle") {
  for (Family f : {Family::Braid, Family::Rat, Family::Conf}) {
    for (std::int64_t k = 1; k <= 6; ++k) {
      CAPTURE(k);
      const auto c = extract_coalgebra(f, k);
      for (std::size_t d = 0; d < c.basis.size(); ++d) {
        for (std::size_t x = 0; x < c.basis[d].size(); ++x) {
          CHECK(testing::extracted_coproduct(c, d, x) == testing::brute_coproduct(c.basis[d][x]));
        }
      }
    }
  }
}

TEST_CASE("coalgebra validation") {
  std::vector<std::vector<std::string>> labels{{"1"}, {"x"}};
  std::vector<std::vector<BitMatrix>> delta{{BitMatrix(1, 1)}, {BitMatrix(1, 1), BitMatrix(1, 1)}};
  delta[0][0].set(0, 0);
  delta[1][0].set(0, 0);
  delta[1][1].set(0, 0);
  CHECK_NOTHROW(GradedCoalgebra("ok", labels, delta));
  auto bad_shape = delta;
  bad_shape[1][1] = BitMatrix(1, 2);
  CHECK_THROWS_AS(GradedCoalgebra("bad", labels, bad_shape), AlgebraError);
  CHECK_THROWS_AS(GradedCoalgebra("bad", {{"1", "2"}}, {{BitMatrix(2, 4)}}), AlgebraError);
}

TEST_CASE("non-coassociative constants are rejected") {
  // Degrees 0, 1, 2 with Delta(z) = 1 (x) z + z (x) 1 + x (x) x but
  // Delta(x) missing its counit terms.
  std::vector<std::vector<std::string>> labels{{"1"}, {"x"}, {"z"}};
  std::vector<std::vector<BitMatrix>> delta(3);
  delta[0] = {BitMatrix(1, 1)};
  delta[0][0].set(0, 0);
  delta[1] = {BitMatrix(1, 1), BitMatrix(1, 1)};
  delta[2] = {BitMatrix(1, 1), BitMatrix(1, 1), BitMatrix(1, 1)};
  delta[2][0].set(0, 0);
  delta[2][1].set(0, 0);
  delta[2][2].set(0, 0);
  CHECK_THROWS_AS(GradedCoalgebra("bad", labels, delta), AlgebraError);
}

TEST_CASE("s-sets of top classes") {
  CHECK(s_set(top_class(Family::Rat, 1)) == sset({0, 1}));
  CHECK(s_set(top_class(Family::Braid, 1)) == sset({0, 1}));
  CHECK(s_set(top_class(Family::Rat, 2)) == sset({0, 1, 2, 3}));
  CHECK(s_set(top_class(Family::Braid, 2)) == sset({0, 3}));
  CHECK(s_set(top_class(Family::Rat, 3)) == sset({0, 1, 3, 4}));
  CHECK(s_set(top_class(Family::Braid, 3)) == sset({0, 1, 3, 4}));

  const SSet x7 = s_set(top_class(Family::Rat, 7));
  const SSet y7 = s_set(top_class(Family::Braid, 7));
  CHECK_FALSE(x7.contains(2));
  CHECK(x7.contains(5));
  CHECK_FALSE(y7.contains(2));
  CHECK_FALSE(y7.contains(5));

  // The k = 7 top class restricted to left dimension 2 vanishes.
  const auto x = top_class(Family::Rat, 7);
  const auto parts = tensor_components(coproduct(embed(x)), x.dim());
  CHECK(parts.count(2) == 0);
}

TEST_CASE("streaming s-set agrees with the full coproduct") {
  for (Family f : {Family::Braid, Family::Rat}) {
    for (std::int64_t k = 1; k <= 20; ++k) {
      const auto x = top_class(f, k);
      CHECK(s_set(x) == s_set(embed(x), x.dim()));
    }
  }
}

TEST_CASE("braid closed form") {
  for (std::int64_t k = 1; k <= 127; ++k) {
    CAPTURE(k);
    CHECK(s_set(top_class(Family::Braid, k)) == braid_top_s_set_closed_form(k));
  }
}

TEST_CASE("invariants") {
  const auto b6 = extract_coalgebra(Family::Braid, 6);
  const auto r3 = extract_coalgebra(Family::Rat, 3);
  const auto ib = coalgebra_invariants(b6.coalgebra);
  const auto ir = coalgebra_invariants(r3.coalgebra);
  CHECK(ib.dims == std::vector<std::size_t>{1, 1, 1, 2, 1});
  CHECK(ib.dims == ir.dims);
  CHECK(ib == ir);
  CHECK(coalgebra_invariants(extract_coalgebra(Family::Braid, 14).coalgebra) !=
        coalgebra_invariants(extract_coalgebra(Family::Rat, 7).coalgebra));
  const auto b1 = coalgebra_invariants(extract_coalgebra(Family::Braid, 1).coalgebra);
  CHECK(b1.dims == std::vector<std::size_t>{1});
  for (const auto& row : b1.split_ranks) {
    for (auto r : row) CHECK(r <= 1);
  }
}

TEST_CASE("isomorphism search") {
  const auto b6 = extract_coalgebra(Family::Braid, 6);
  const auto r3 = extract_coalgebra(Family::Rat, 3);
  const auto v = coalgebras_isomorphic(b6.coalgebra, r3.coalgebra);
  REQUIRE(v.outcome == IsoOutcome::Yes);
  CHECK(v.search_space == 6);
  CHECK(is_invertible(v.witness));
  CHECK(is_coalgebra_map(b6.coalgebra, r3.coalgebra, v.witness));

  const auto self = coalgebras_isomorphic(r3.coalgebra, r3.coalgebra);
  REQUIRE(self.outcome == IsoOutcome::Yes);
  for (const auto& m : self.witness) CHECK(m == BitMatrix::identity(m.rows()));

  const auto no = coalgebras_isomorphic(extract_coalgebra(Family::Braid, 4).coalgebra,
                                        extract_coalgebra(Family::Rat, 2).coalgebra);
  CHECK(no.outcome == IsoOutcome::No);
  CHECK(no.invariant == "top_s_set");

  const auto dims = coalgebras_isomorphic(b6.coalgebra, extract_coalgebra(Family::Rat, 4).coalgebra);
  CHECK(dims.outcome == IsoOutcome::No);
  CHECK(dims.invariant == "dims");

  const auto starved = coalgebras_isomorphic(b6.coalgebra, r3.coalgebra, 1);
  CHECK(starved.outcome == IsoOutcome::Inconclusive);
}

TEST_CASE("isomorphism verdicts are sound") {
  for (std::int64_t k = 1; k <= 8; ++k) {
    CAPTURE(k);
    const auto a = extract_coalgebra(Family::Braid, 2 * k);
    const auto b = extract_coalgebra(Family::Rat, k);
    const auto v = coalgebras_isomorphic(a.coalgebra, b.coalgebra);
    const auto ia = coalgebra_invariants(a.coalgebra);
    const auto ib = coalgebra_invariants(b.coalgebra);
    if (v.outcome == IsoOutcome::Yes) {
      CHECK(is_invertible(v.witness));
      CHECK(is_coalgebra_map(a.coalgebra, b.coalgebra, v.witness));
    } else if (v.outcome == IsoOutcome::No) {
      if (v.invariant == "dims") CHECK(ia.dims != ib.dims);
      if (v.invariant == "top_s_set") CHECK(ia.top_s_set != ib.top_s_set);
      if (v.invariant == "split_ranks") CHECK(ia.split_ranks != ib.split_ranks);
    }
    CHECK((v.outcome == IsoOutcome::Yes) == (k == 1 || k == 3));
  }
}

TEST_CASE("Steenrod matrices") {
  const auto b6 = extract_coalgebra(Family::Braid, 6);
  const auto sb = steenrod_matrix(b6);
  const std::size_t g2q2 = index_of(b6, 3, "g^2*gamma_2");
  const std::size_t g2q1sq = index_of(b6, 2, "g^2*gamma_1^2");
  CHECK(sb[3].row(g2q2).set_bits() == std::vector<std::size_t>{g2q1sq});

  const auto r3 = extract_coalgebra(Family::Rat, 3);
  const auto sr = steenrod_matrix(r3);
  const std::size_t grho1 = index_of(r3, 3, "g*rho_1");
  REQUIRE(sr[3].row(grho1).count() == 1);
  const std::size_t target = sr[3].row(grho1).first_set();
  CHECK(embed(r3.basis[2][target]) ==
        AmbientElement(AmbientMonomial::g_power(-1) * AmbientMonomial::q_generator(1, 2)));

  for (const auto& m : steenrod_matrix(Family::Rat, 1)) CHECK(m.is_zero());

  // Exactly two coalgebra isomorphisms exist; the first found sends
  // gamma_1^3 to g*rho_1 and does not commute with Sq_1^*, the other does.
  const auto v = coalgebras_isomorphic(b6.coalgebra, r3.coalgebra);
  REQUIRE(v.outcome == IsoOutcome::Yes);
  CHECK_FALSE(intertwines(v.witness, sb, sr));
  const auto w = coalgebras_isomorphic(b6.coalgebra, r3.coalgebra, kDefaultIsoBudget, {OperationPair{sb, sr, 1}});
  REQUIRE(w.outcome == IsoOutcome::Yes);
  CHECK(intertwines(w.witness, sb, sr));
  CHECK(is_coalgebra_map(b6.coalgebra, r3.coalgebra, w.witness));
  CHECK(w.witness[3].row(index_of(b6, 3, "gamma_1^3")).set_bits() ==
        std::vector<std::size_t>{index_of(r3, 3, "rho_0^3")});
  std::size_t count = 0;
  for (const auto& m : general_linear_group(2)) {
    std::vector<BitMatrix> maps{BitMatrix::identity(1), BitMatrix::identity(1), BitMatrix::identity(1), m,
                                BitMatrix::identity(1)};
    count += is_coalgebra_map(b6.coalgebra, r3.coalgebra, maps) ? 1 : 0;
  }
  CHECK(count == 2);
  CHECK_THROWS_AS(steenrod_matrix(b6, 0), PreconditionError);
}

TEST_CASE("Sq_1^* preserves every family span") {
  for (Family f : {Family::Braid, Family::Rat, Family::Conf}) {
    for (std::int64_t k = 1; k <= 10; ++k) CHECK_NOTHROW(steenrod_matrix(f, k));
  }
}

TEST_CASE("coalgebra json") {
  const auto b2 = extract_coalgebra(Family::Braid, 2);
  const Json j = to_json(b2.coalgebra);
  CHECK(j["name"] == "braid:2");
  CHECK(j["degrees"] == Json::parse(R"([["g^2"],["gamma_1"]])"));
  CHECK(j["delta"].size() == 3);
}
