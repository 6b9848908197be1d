#ifndef CHARHYP_INDUCE_RESTRICT_HPP
#define CHARHYP_INDUCE_RESTRICT_HPP

#include <vector>

#include "charhyp/character_table.hpp"
#include "charhyp/group.hpp"

namespace charhyp {

/// A nested pair (G, G0) with both character tables computed in the common
/// field Q(zeta_exponent(G)).
struct PairContext {
  FiniteGroup group;        // G
  Subgroup sub;             // G0 inside G
  FiniteGroup subgroup;     // G0 as a group on 0..|G0|-1 in member order
  CharacterTable table_g;   // irreducibles of G
  CharacterTable table_h;   // irreducibles of G0
  std::vector<int> class_map;   // G0-class -> containing G-class
  std::vector<int> member_pos;  // G element -> index in members, or -1
  unsigned field_order = 1;

  int index() const { return sub.index; }
};

PairContext make_pair_context(const FiniteGroup& g, const Subgroup& s);
PairContext make_pair_context(const FiniteGroup& g, const std::vector<int>& seed);

/// res f: value on each G0-class is f at the containing G-class.
ClassFunction restrict_to_subgroup(const PairContext& ctx, const ClassFunction& f);

/// Trace-character induction (ind chi)(g) = (1/|G0|) sum_{s in G} chi0(s g s^-1)
/// with chi0 = chi on G0 and 0 outside.
ClassFunction induce_trace(const PairContext& ctx, const ClassFunction& f);

/// Normalized-character induction (1/|G|) sum_{s in G} f0(s g s^-1); agrees
/// with ch(ind tau) when f = ch(tau).
ClassFunction induce_normalized(const PairContext& ctx, const ClassFunction& f);

/// Multiplicity [ind tau : pi] = [tau : res pi]. Computes both sides, asserts
/// the reciprocity equality (ReciprocityViolation otherwise) and integrality.
long frobenius_multiplicity(const PairContext& ctx, int tau, int pi);

/// Multiplicities of ind tau over the irreducibles of G.
std::vector<long> ind_decomposition(const PairContext& ctx, int tau);

/// Multiplicities of res pi over the irreducibles of G0.
std::vector<long> res_decomposition(const PairContext& ctx, int pi);

}  // namespace charhyp

#endif
