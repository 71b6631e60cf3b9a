#pragma once

// Homology operations on the ambient algebra: the Araki-Kudo operation Q,
// the coproduct psi, and the duals Sq_j^* of the Steenrod squares.

#include <cstdint>

#include "f2hopf/ambient.hpp"

namespace f2hopf {

// Q on a monomial, by Cartan splitting (first generator power) x (rest):
//   Q(xy) = x^2 Q(y) + Q(x) y^2,
// with Q(g^a) = g^{2(a-1)} Qg for odd a, 0 for even a, and
// Q((Q^i g)^e) = (Q^i g)^{2e-2} Q^{i+1} g for odd e, 0 for even e.
// Throws GeneratorIndexError if the result needs Q^i g with i > max_gen.
AmbientElement araki_kudo_q(const AmbientMonomial& m, int max_gen = kDefaultMaxGen);
AmbientElement araki_kudo_q(const AmbientElement& e, int max_gen = kDefaultMaxGen);
// Q applied `times` times.
AmbientElement araki_kudo_iterate(const AmbientElement& e, int times, int max_gen = kDefaultMaxGen);

// psi(g^{+-1}) = g^{+-1} (x) g^{+-1}, psi(Q^i g) = g^{2^i} (x) Q^i g + Q^i g (x) g^{2^i},
// extended multiplicatively and linearly.
TensorElement coproduct(const AmbientMonomial& m);
TensorElement coproduct(const AmbientElement& e);

// Sq_1^* is a derivation with Sq_1^*(g^{+-1}) = Sq_1^*(Qg) = 0 and
// Sq_1^*(Q^i g) = (Q^{i-1} g)^2 for i >= 2.
AmbientElement sq1_dual(const AmbientMonomial& m);
AmbientElement sq1_dual(const AmbientElement& e);

// Sq_j^* extended to products by Sq_j^*(xy) = sum_{a+b=j} Sq_a^*(x) Sq_b^*(y).
// Generator values vanish for j >= 2, so only Sq_1^* hits survive.  The
// product rule is not part of the verified surface (see README).
AmbientElement sqj_dual(const AmbientElement& e, int j);

}  // namespace f2hopf
