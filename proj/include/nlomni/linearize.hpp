#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "nlomni/check.hpp"
#include "nlomni/nlie.hpp"
#include "nlomni/omni.hpp"
#include "nlomni/polycalc.hpp"

namespace nlomni {

// Coordinates y_i = l_{x^i} on V*; a vector v ∈ V is the linear function
// l_v = Σ v_k y_k.

/// Â = Σ_i l_{A x^i} ∂_i
PolyVecField hat_endo(const Endo& a);
/// Constant (n−1)-form with the coefficients of u.
PolyForm hat_wedge(const WedgeVector& u);
/// bar(v ⊗ u) = l_v û
PolyForm bar_tensor(const TensorPairValue& w);

/// Φ(A + u) = Â + û
GenSection phi(const OmniElement& x);
/// Inverse of Φ on linear vector fields plus constant forms; nullopt for
/// any other section.
std::optional<OmniElement> phi_inverse(const GenSection& s);

/// π_g = Σ_{i_1<...<i_n} l_{[x^{i_1},...,x^{i_n}]} ∂_{i_1} ∧ ... ∧ ∂_{i_n}.
/// Requires the Fundamental Identity.
PolyMultiVec linear_np(const NLieAlgebra& g);

using HatEndoFn = std::function<PolyVecField(const Endo&)>;
using SectionBracketFn = std::function<GenSection(const GenSection&, const GenSection&)>;

/// Hat identities on basis inputs: pairing of hats is the bar of the
/// algebraic pairing, its differential and L_Â û are the hat of L_A u, and
/// [Â, B̂] is the hat of [A, B]. Exhaustive for dim ≤ 4 and arity ≤ 3,
/// config.samples random basis draws otherwise.
std::vector<Check> standard_hat_identities(int dim, int arity, const SuiteConfig& config = {},
                                           const HatEndoFn& hat = hat_endo);

/// Φ intertwines the omni pairing, bracket and anchor with the standard
/// higher Courant structure; Φ round-trips on the basis.
std::vector<Check> standard_linearization_suite(int dim, int arity, const SuiteConfig& config = {},
                                                const SectionBracketFn& bracket = {});

/// Linear Nambu-Poisson identities on basis inputs: π_g♯(û) = (ad_u)^,
/// [û, v̂]_π = (u∘v)^ and π♯(L_Â û) = (ad_{L_A u})^. Every check is SKIP
/// with a reason when π_g fails the Nambu-Poisson check.
std::vector<Check> linear_np_identities(const NLieAlgebra& g, const SuiteConfig& config = {});

using OmniBracketOnG = std::function<OmniElement(const NonabelianOmni&, const OmniElement&, const OmniElement&)>;

/// Φ intertwines the nonabelian omni structure with the twisted bracket of
/// π_g, exhaustively on basis elements; gated like linear_np_identities.
std::vector<Check> nambu_linearization_suite(const NLieAlgebra& g, const SuiteConfig& config = {},
                                             const OmniBracketOnG& bracket = {});

}  // namespace nlomni
