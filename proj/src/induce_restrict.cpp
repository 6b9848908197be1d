#include "charhyp/induce_restrict.hpp"

#include "charhyp/errors.hpp"

namespace charhyp {

PairContext make_pair_context(const FiniteGroup& g, const Subgroup& s) {
  FiniteGroup h = subgroup_as_group(g, s);
  unsigned m = g.exponent();
  CharacterTable tg(g, m);
  CharacterTable th(h, m);

  std::vector<int> member_pos(g.n, -1);
  for (size_t i = 0; i < s.members.size(); ++i) member_pos[s.members[i]] = static_cast<int>(i);

  std::vector<int> class_map(th.classes().count());
  for (int c = 0; c < th.classes().count(); ++c) {
    int rep_in_g = s.members[th.classes().rep[static_cast<size_t>(c)]];
    class_map[static_cast<size_t>(c)] = tg.classes().class_of[rep_in_g];
  }
  return PairContext{g, s, std::move(h), std::move(tg), std::move(th),
                     std::move(class_map), std::move(member_pos), m};
}

PairContext make_pair_context(const FiniteGroup& g, const std::vector<int>& seed) {
  return make_pair_context(g, subgroup_generated(g, seed));
}

ClassFunction restrict_to_subgroup(const PairContext& ctx, const ClassFunction& f) {
  if (f.values.size() != static_cast<size_t>(ctx.table_g.classes().count()))
    throw Error("restrict: class function length mismatch");
  ClassFunction out;
  out.values.reserve(ctx.class_map.size());
  for (int gc : ctx.class_map) out.values.push_back(f.values[static_cast<size_t>(gc)]);
  return out;
}

namespace {

// sum over all s in G of f0(s g s^-1) per G-class representative g
ClassFunction conjugation_sum(const PairContext& ctx, const ClassFunction& f) {
  if (f.values.size() != static_cast<size_t>(ctx.table_h.classes().count()))
    throw Error("induce: class function length mismatch");
  const FiniteGroup& g = ctx.group;
  ClassFunction out;
  out.values.reserve(static_cast<size_t>(ctx.table_g.classes().count()));
  for (int c = 0; c < ctx.table_g.classes().count(); ++c) {
    int rep = ctx.table_g.classes().rep[static_cast<size_t>(c)];
    Cyclotomic sum(ctx.field_order);
    for (int s = 0; s < g.n; ++s) {
      int conj = g.conjugate(s, rep);
      int pos = ctx.member_pos[conj];
      if (pos < 0) continue;
      sum += f.values[static_cast<size_t>(ctx.table_h.classes().class_of[pos])];
    }
    out.values.push_back(std::move(sum));
  }
  return out;
}

}  // namespace

ClassFunction induce_trace(const PairContext& ctx, const ClassFunction& f) {
  ClassFunction out = conjugation_sum(ctx, f);
  Rational scale(1, static_cast<long>(ctx.sub.members.size()));
  for (auto& v : out.values) v *= scale;
  return out;
}

ClassFunction induce_normalized(const PairContext& ctx, const ClassFunction& f) {
  ClassFunction out = conjugation_sum(ctx, f);
  Rational scale(1, ctx.group.n);
  for (auto& v : out.values) v *= scale;
  return out;
}

long frobenius_multiplicity(const PairContext& ctx, int tau, int pi) {
  const Character& t = ctx.table_h.irr(tau);
  const Character& p = ctx.table_g.irr(pi);

  Cyclotomic lhs = inner_product(ctx.table_g, induce_trace(ctx, t.chi), p.chi);
  Cyclotomic rhs = inner_product(ctx.table_h, t.chi, restrict_to_subgroup(ctx, p.chi));
  if (lhs != rhs)
    throw ReciprocityViolationError("reciprocity sides differ: " + lhs.str() + " vs " + rhs.str());
  if (!lhs.is_rational() || !lhs.to_rational().is_integer())
    throw NonIntegralMultiplicityError("multiplicity is not an integer: " + lhs.str());
  long m = lhs.to_rational().to_long();
  if (m < 0) throw NonIntegralMultiplicityError("negative multiplicity");
  return m;
}

std::vector<long> ind_decomposition(const PairContext& ctx, int tau) {
  return decompose_integral(ctx.table_g, induce_trace(ctx, ctx.table_h.irr(tau).chi));
}

std::vector<long> res_decomposition(const PairContext& ctx, int pi) {
  return decompose_integral(ctx.table_h, restrict_to_subgroup(ctx, ctx.table_g.irr(pi).chi));
}

}  // namespace charhyp
