#pragma once

#include <string>
#include <vector>

#include "nlomni/nlie.hpp"

namespace nlomni::fixtures {

NLieAlgebra abelian(int arity, int dim);
/// n = 2, dim 3: [e1, e2] = e3.
NLieAlgebra heisenberg();
/// n = 2, basis (h, e, f): [h, e] = 2e, [h, f] = −2f, [e, f] = h.
NLieAlgebra sl2();
/// n = 3, dim 4: [e1, e2, e3] = e4, everything else zero.
NLieAlgebra fix_b();
/// n = 3, dim 4 simple algebra; coincides with euclidean(3).
NLieAlgebra fix_c();
/// FIX-C with [e2, e3, e4] = −e1 + e2; violates the Fundamental Identity.
/// Flipping the sign of a single FIX-C constant does not: that only changes
/// the signature of the invariant metric.
NLieAlgebra fix_c_corrupted();
/// n = 3, dim 7: [e1, e2, e3] = [e4, e5, e6] = e7. Satisfies the Fundamental
/// Identity, but y7 (∂1∧∂2∧∂3 + ∂4∧∂5∧∂6) is not decomposable, so its linear
/// 3-vector field is not Nambu-Poisson.
NLieAlgebra two_block();
/// (n+1)-dimensional simple algebra:
/// [e_1, ..., ê_i, ..., e_{n+1}] = (−1)^{n+1−i} e_i.
NLieAlgebra euclidean(int arity);

struct Named {
  std::string name;
  NLieAlgebra algebra;
};

/// Shipped corpus, in canonical order.
std::vector<Named> corpus();

}  // namespace nlomni::fixtures
