#ifndef CHARHYP_ADMISSIBILITY_HPP
#define CHARHYP_ADMISSIBILITY_HPP

#include <optional>
#include <string>

#include "charhyp/induce_restrict.hpp"

namespace charhyp {

enum class AdmissibilityMethod { Direct, Abelian, Fusion, NormalCoadjoint, Chain };

std::string method_name(AdmissibilityMethod m);

/// Failure evidence: ch(tau)(s g s^-1) != ch(tau)(g). Indices: tau into the
/// subgroup table, g and s are parent-group elements with g in G0 and s in X(g).
struct AdmissibilityWitness {
  int tau = 0;
  int g = 0;
  int s = 0;
};

struct AdmissibilityReport {
  bool admissible = false;
  AdmissibilityMethod method = AdmissibilityMethod::Direct;
  std::optional<AdmissibilityWitness> witness;  // present iff not admissible
};

/// Exhaustive check of the defining invariance condition over all tau, all
/// G0-classes of g and all s in X(g). Returns the first counterexample.
AdmissibilityReport is_admissible_direct(const PairContext& ctx);

/// As above but quantifying over every g in G0 rather than class
/// representatives (test aid for validating the representative reduction).
AdmissibilityReport is_admissible_direct_unreduced(const PairContext& ctx);

/// True iff the parent group is abelian (sufficient for admissibility).
bool check_abelian(const PairContext& ctx);

/// True iff every conjugation of g in G0 that lands in G0 is realized by a
/// G0-conjugation (sufficient for admissibility).
bool check_fusion_condition(const PairContext& ctx);

/// For normal G0: true iff the coadjoint action of G on the dual of G0 is
/// trivial, which is equivalent to admissibility. Throws NotNormal.
bool check_normal_coadjoint(const PairContext& ctx);

/// For nested G0 <= G1 <= G given as (G, G1) and (G1, G0) contexts: true iff
/// both sub-pairs are admissible (sufficient). Throws NotNested when the
/// inner parent is not the outer subgroup.
bool check_chain(const PairContext& outer, const PairContext& inner);

/// Public entry point: cheap sufficient conditions first (abelian, fusion,
/// coadjoint for normal subgroups), falling back to the direct check. Always
/// reports which criterion decided.
AdmissibilityReport decide_admissible(const PairContext& ctx);

/// Re-evaluates ch(tau) at g and s g s^-1; true when the witness indeed
/// violates invariance.
bool verify_witness(const PairContext& ctx, const AdmissibilityWitness& w);

}  // namespace charhyp

#endif
