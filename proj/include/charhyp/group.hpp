#ifndef CHARHYP_GROUP_HPP
#define CHARHYP_GROUP_HPP

#include <string>
#include <vector>

namespace charhyp {

inline constexpr int kDefaultSizeCap = 5000;

/// Finite group on dense element indices 0..n-1 with a full multiplication
/// table. Immutable after construction; all operations on it are pure.
struct FiniteGroup {
  int n = 1;
  std::vector<int> table;  // n*n row-major: table[a*n+b] = a*b
  int identity = 0;
  std::vector<int> inverse;
  std::vector<std::string> labels;
  /// Underlying permutations when the group was built from permutations
  /// (empty otherwise). Subgroup views inherit the relevant subset.
  std::vector<std::vector<int>> perms;
  /// Indices of the elements used as generators by the construction
  /// (empty when no distinguished generating set exists).
  std::vector<int> generators;

  int mul(int a, int b) const { return table[static_cast<size_t>(a) * n + b]; }
  int inv(int a) const { return inverse[static_cast<size_t>(a)]; }
  int conjugate(int s, int g) const { return mul(mul(s, g), inv(s)); }
  const std::string& label(int a) const { return labels[static_cast<size_t>(a)]; }

  int element_order(int a) const;
  unsigned exponent() const;
  bool is_abelian() const;
};

struct Subgroup {
  std::vector<int> members;  // strictly increasing element indices
  int index = 1;             // [G : G0]

  bool contains(int g) const;
};

struct ConjugacyClasses {
  std::vector<std::vector<int>> partition;  // canonical order: (size, smallest member)
  std::vector<int> rep;                     // smallest member of each class
  std::vector<int> sizes;
  std::vector<int> class_of;  // element index -> class index

  int count() const { return static_cast<int>(partition.size()); }
};

struct ConjugatorSet {
  int g = 0;                 // element of G0
  std::vector<int> members;  // all s in G with s g s^-1 in G0, ascending
};

FiniteGroup group_from_cayley(const std::vector<std::vector<int>>& cayley,
                              std::vector<std::string> labels = {},
                              int size_cap = kDefaultSizeCap);

FiniteGroup group_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                    int size_cap = kDefaultSizeCap);

FiniteGroup cyclic_group(int n, int size_cap = kDefaultSizeCap);
FiniteGroup symmetric_group(int n, int size_cap = kDefaultSizeCap);
FiniteGroup alternating_group(int n, int size_cap = kDefaultSizeCap);
FiniteGroup dihedral_group(int n, int size_cap = kDefaultSizeCap);  // order 2n
FiniteGroup quaternion_group();                                     // Q8 via its Cayley table

/// Dispatch on names like "Z6", "C6", "S4", "A5", "D4", "Q8".
FiniteGroup named_group(const std::string& name, int size_cap = kDefaultSizeCap);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           int size_cap = kDefaultSizeCap);

/// action[q] is the automorphism of H applied by the Q-element q, as an image
/// table on H's indices. Verified exhaustively to be a homomorphism
/// Q -> Aut(H); throws NotAnAction otherwise.
FiniteGroup semidirect_product(const FiniteGroup& h, const FiniteGroup& q,
                               const std::vector<std::vector<int>>& action,
                               int size_cap = kDefaultSizeCap);

/// Extends automorphism images of Q's generators to all of Q by breadth-first
/// closure; throws NotAnAction on inconsistency.
std::vector<std::vector<int>> extend_action_from_generators(
    const FiniteGroup& h, const FiniteGroup& q, const std::vector<int>& gen_indices,
    const std::vector<std::vector<int>>& gen_images);

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& seed);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);

/// The subgroup as a group in its own right, on indices 0..|members|-1 in
/// member order. Labels and permutations carry over from the parent.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s);

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

/// X(g) = { s in G : s g s^-1 in G0 }; requires g in G0.
ConjugatorSet x_set(const FiniteGroup& g, const Subgroup& g0, int elem);

bool is_normal(const FiniteGroup& g, const Subgroup& g0);

std::vector<int> centralizer(const FiniteGroup& g, int elem);

/// Index of the element with the given permutation; -1 if absent or the
/// group carries no permutation data.
int find_permutation(const FiniteGroup& g, const std::vector<int>& perm);

std::string cycle_notation(const std::vector<int>& perm);

}  // namespace charhyp

#endif
