#ifndef CHARHYP_CHARACTER_TABLE_HPP
#define CHARHYP_CHARACTER_TABLE_HPP

#include <vector>

#include "charhyp/cyclotomic.hpp"
#include "charhyp/group.hpp"

namespace charhyp {

/// Function constant on conjugacy classes, one exact value per class in the
/// canonical class order.
struct ClassFunction {
  std::vector<Cyclotomic> values;
};

struct Character {
  int dim = 1;
  ClassFunction chi;  // unnormalized trace character
  int index = 0;      // position in the canonical ordering
};

/// Exact irreducible character table. Computed by Dixon's method (class
/// matrices modulo a prime p ≡ 1 mod field_order, p > 2*isqrt(|G|); values
/// lifted to Q(zeta_field_order) by inverse DFT over element powers) and
/// self-verified before use: row/column orthogonality, sum of squared
/// dimensions, class/irreducible counts. Verification failure throws
/// LiftFailure.
///
/// Canonical ordering: trivial character first, then by (dim, lexicographic
/// order of the numeric embeddings of the values).
class CharacterTable {
 public:
  /// field_order 0 means exponent(g); otherwise it must be a positive
  /// multiple of exponent(g) (used to place two tables in a common field).
  explicit CharacterTable(FiniteGroup g, unsigned field_order = 0);

  const FiniteGroup& group() const { return group_; }
  const ConjugacyClasses& classes() const { return classes_; }
  unsigned field_order() const { return m_; }
  int identity_class() const { return identity_class_; }

  int count() const { return static_cast<int>(irr_.size()); }
  const Character& irr(int i) const { return irr_[static_cast<size_t>(i)]; }
  const std::vector<Character>& irreducibles() const { return irr_; }
  const Cyclotomic& value(int i, int cls) const {
    return irr_[static_cast<size_t>(i)].chi.values[static_cast<size_t>(cls)];
  }
  /// Index of the complex-conjugate character of irreducible i.
  int conjugate_index(int i) const { return conj_index_[static_cast<size_t>(i)]; }

 private:
  FiniteGroup group_;
  ConjugacyClasses classes_;
  unsigned m_ = 1;
  int identity_class_ = 0;
  std::vector<Character> irr_;
  std::vector<int> conj_index_;

  void compute();
  void verify() const;
};

/// chi scaled by 1/dim; value 1 at the identity class.
ClassFunction normalized_character(const Character& c);

/// (1/|G|) sum over classes of size * f * conj(h).
Cyclotomic inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& h);

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& h);

/// Coefficient of each irreducible in f.
std::vector<Cyclotomic> decompose(const CharacterTable& t, const ClassFunction& f);

/// As decompose, asserting every coefficient is a (rational) integer;
/// throws NonIntegralMultiplicity otherwise.
std::vector<long> decompose_integral(const CharacterTable& t, const ClassFunction& f);

}  // namespace charhyp

#endif
