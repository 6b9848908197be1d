#include "charhyp/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "charhyp/errors.hpp"

namespace charhyp {

namespace {

void check_cap(long order, int cap) {
  if (order > cap)
    throw SizeLimitExceededError("group order " + std::to_string(order) +
                                 " exceeds size cap " + std::to_string(cap));
}

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

bool is_permutation_of_degree(const std::vector<int>& p, int degree) {
  if (static_cast<int>(p.size()) != degree) return false;
  std::vector<char> seen(degree, 0);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = "g" + std::to_string(i);
  return out;
}

// Light's associativity test. Pick a set S such that every element is a
// right-bracketed product of S-elements; then (x*s)*y = x*(s*y) for all
// x, y and s in S implies full associativity.
void check_associativity(const std::vector<int>& tab, int n) {
  auto at = [&](int a, int b) { return tab[static_cast<size_t>(a) * n + b]; };
  std::vector<int> gens;
  std::vector<char> reached(n, 0);
  while (true) {
    int next = -1;
    for (int x = 0; x < n; ++x)
      if (!reached[x]) {
        next = x;
        break;
      }
    if (next < 0) break;
    gens.push_back(next);
    // redo the closure: products ((s1*s2)*...)*sk over the current generators
    std::fill(reached.begin(), reached.end(), 0);
    std::vector<int> frontier;
    for (int s : gens)
      if (!reached[s]) {
        reached[s] = 1;
        frontier.push_back(s);
      }
    while (!frontier.empty()) {
      int x = frontier.back();
      frontier.pop_back();
      for (int s : gens) {
        int y = at(x, s);
        if (!reached[y]) {
          reached[y] = 1;
          frontier.push_back(y);
        }
      }
    }
  }
  for (int s : gens) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (at(at(x, s), y) != at(x, at(s, y)))
          throw NotAGroupError("associativity fails at (" + std::to_string(x) + ", " +
                               std::to_string(s) + ", " + std::to_string(y) + ")");
      }
    }
  }
}

FiniteGroup finish_group(int n, std::vector<int> tab, std::vector<std::string> labels) {
  FiniteGroup g;
  g.n = n;
  g.table = std::move(tab);
  auto at = [&](int a, int b) { return g.table[static_cast<size_t>(a) * n + b]; };

  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      int r = at(a, b), c = at(b, a);
      if (r < 0 || r >= n || c < 0 || c >= n) throw NotAGroupError("table entry out of range");
      if (row[r]++) throw NotAGroupError("row " + std::to_string(a) + " is not a permutation");
      if (col[c]++) throw NotAGroupError("column " + std::to_string(a) + " is not a permutation");
    }
  }

  check_associativity(g.table, n);

  int e = -1;
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = at(a, b) == b && at(b, a) == b;
    if (ok) {
      e = a;
      break;
    }
  }
  if (e < 0) throw NotAGroupError("no two-sided identity");
  g.identity = e;

  g.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (at(a, b) == e && at(b, a) == e) {
        g.inverse[a] = b;
        break;
      }
    }
    if (g.inverse[a] < 0) throw NotAGroupError("element " + std::to_string(a) + " has no inverse");
  }

  g.labels = labels.empty() ? default_labels(n) : std::move(labels);
  if (static_cast<int>(g.labels.size()) != n) throw NotAGroupError("label count mismatch");
  return g;
}

}  // namespace

int FiniteGroup::element_order(int a) const {
  int o = 1;
  int x = a;
  while (x != identity) {
    x = mul(x, a);
    ++o;
  }
  return o;
}

unsigned FiniteGroup::exponent() const {
  unsigned m = 1;
  for (int a = 0; a < n; ++a) m = std::lcm(m, static_cast<unsigned>(element_order(a)));
  return m;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

FiniteGroup group_from_cayley(const std::vector<std::vector<int>>& cayley,
                              std::vector<std::string> labels, int size_cap) {
  const int n = static_cast<int>(cayley.size());
  if (n == 0) throw NotAGroupError("empty table");
  check_cap(n, size_cap);
  std::vector<int> tab;
  tab.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : cayley) {
    if (static_cast<int>(row.size()) != n) throw NotAGroupError("table is not square");
    tab.insert(tab.end(), row.begin(), row.end());
  }
  return finish_group(n, std::move(tab), std::move(labels));
}

FiniteGroup group_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                    int size_cap) {
  if (degree < 1) throw InputError("degree must be positive");
  for (const auto& p : generators)
    if (!is_permutation_of_degree(p, degree))
      throw InputError("generator is not a permutation of 0.." + std::to_string(degree - 1));

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);

  std::vector<std::vector<int>> elems{id};
  std::set<std::vector<int>> seen{id};
  // breadth-first closure in deterministic generator order; element 0 = identity
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gen : generators) {
      auto next = compose(elems[i], gen);
      if (seen.insert(next).second) {
        check_cap(static_cast<long>(elems.size()) + 1, size_cap);
        elems.push_back(std::move(next));
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<int> tab(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  std::vector<std::pair<std::vector<int>, int>> sorted;
  sorted.reserve(n);
  for (int i = 0; i < n; ++i) sorted.emplace_back(elems[i], i);
  std::sort(sorted.begin(), sorted.end());
  auto index_of = [&](const std::vector<int>& p) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), std::make_pair(p, 0),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    return it->second;
  };
  for (int a = 0; a < n; ++a) {
    labels[a] = cycle_notation(elems[a]);
    for (int b = 0; b < n; ++b) tab[static_cast<size_t>(a) * n + b] = index_of(compose(elems[a], elems[b]));
  }

  FiniteGroup g = finish_group(n, std::move(tab), std::move(labels));
  g.perms = std::move(elems);
  for (const auto& gen : generators) {
    int idx = find_permutation(g, gen);
    if (std::find(g.generators.begin(), g.generators.end(), idx) == g.generators.end())
      g.generators.push_back(idx);
  }
  return g;
}

FiniteGroup cyclic_group(int n, int size_cap) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  check_cap(n, size_cap);
  std::vector<int> tab(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) tab[static_cast<size_t>(a) * n + b] = (a + b) % n;
  }
  FiniteGroup g = finish_group(n, std::move(tab), std::move(labels));
  if (n > 1) g.generators = {1};
  return g;
}

FiniteGroup symmetric_group(int n, int size_cap) {
  if (n < 1) throw InputError("symmetric group degree must be positive");
  if (n == 1) return group_from_permutations(1, {}, size_cap);
  std::vector<std::vector<int>> gens;
  std::vector<int> t(n);
  std::iota(t.begin(), t.end(), 0);
  std::swap(t[0], t[1]);
  gens.push_back(t);
  if (n > 2) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.push_back(c);
  }
  return group_from_permutations(n, gens, size_cap);
}

FiniteGroup alternating_group(int n, int size_cap) {
  if (n < 1) throw InputError("alternating group degree must be positive");
  if (n <= 2) return group_from_permutations(std::max(n, 1), {}, size_cap);
  std::vector<std::vector<int>> gens;
  for (int k = 2; k < n; ++k) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;  // the 3-cycle (0 1 k)
    gens.push_back(std::move(p));
  }
  return group_from_permutations(n, gens, size_cap);
}

FiniteGroup dihedral_group(int n, int size_cap) {
  if (n < 1) throw InputError("dihedral parameter must be positive");
  const int order = 2 * n;
  check_cap(order, size_cap);
  // element (k, e) at index k + n*e; (k1,e1)(k2,e2) = (k1 +- k2, e1^e2)
  auto idx = [&](int k, int e) { return k + n * e; };
  std::vector<int> tab(static_cast<size_t>(order) * order);
  std::vector<std::string> labels(order);
  for (int e = 0; e < 2; ++e) {
    for (int k = 0; k < n; ++k) {
      std::ostringstream os;
      if (k == 0 && e == 0) {
        os << "e";
      } else {
        if (k > 0) os << "r" << (k > 1 ? "^" + std::to_string(k) : "");
        if (e) os << (k > 0 ? "*f" : "f");
      }
      labels[idx(k, e)] = os.str();
    }
  }
  for (int e1 = 0; e1 < 2; ++e1)
    for (int k1 = 0; k1 < n; ++k1)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int k2 = 0; k2 < n; ++k2) {
          int k = e1 ? (k1 - k2 + n) % n : (k1 + k2) % n;
          tab[static_cast<size_t>(idx(k1, e1)) * order + idx(k2, e2)] = idx(k, e1 ^ e2);
        }
  FiniteGroup g = finish_group(order, std::move(tab), std::move(labels));
  g.generators = n >= 2 ? std::vector<int>{idx(1, 0), idx(0, 1)} : std::vector<int>{idx(0, 1)};
  return g;
}

FiniteGroup quaternion_group() {
  // units {1,-1,i,-i,j,-j,k,-k} as (axis a in 0..3, sign s): index 2a+s
  auto mul_unit = [](int a, int b) -> std::pair<int, int> {
    if (a == 0) return {b, 0};
    if (b == 0) return {a, 0};
    if (a == b) return {0, 1};  // i*i = -1
    static const int third[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}};
    return {third[a][b], sign[a][b]};
  };
  std::vector<std::vector<int>> tab(8, std::vector<int>(8));
  const char* names[4] = {"1", "i", "j", "k"};
  std::vector<std::string> labels(8);
  for (int a = 0; a < 4; ++a)
    for (int s = 0; s < 2; ++s) labels[2 * a + s] = std::string(s ? "-" : "") + names[a];
  for (int a = 0; a < 4; ++a)
    for (int s = 0; s < 2; ++s)
      for (int b = 0; b < 4; ++b)
        for (int t = 0; t < 2; ++t) {
          auto [c, u] = mul_unit(a, b);
          tab[2 * a + s][2 * b + t] = 2 * c + ((s + t + u) % 2);
        }
  FiniteGroup g = group_from_cayley(tab, labels);
  g.generators = {2, 4};  // i, j
  return g;
}

FiniteGroup named_group(const std::string& name, int size_cap) {
  if (name == "Q8") return quaternion_group();
  if (name.size() >= 2) {
    char kind = name[0];
    int n = 0;
    try {
      size_t pos = 0;
      n = std::stoi(name.substr(1), &pos);
      if (pos + 1 != name.size()) n = -1;
    } catch (...) {
      n = -1;
    }
    if (n >= 1) {
      switch (kind) {
        case 'Z':
        case 'C':
          return cyclic_group(n, size_cap);
        case 'S':
          return symmetric_group(n, size_cap);
        case 'A':
          return alternating_group(n, size_cap);
        case 'D':
          return dihedral_group(n, size_cap);
        default:
          break;
      }
    }
  }
  throw InputError("unknown group name \"" + name + "\" (expected Zn, Cn, Sn, An, Dn or Q8)");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, int size_cap) {
  const long n = static_cast<long>(a.n) * b.n;
  check_cap(n, size_cap);
  const int nn = static_cast<int>(n);
  auto idx = [&](int x, int y) { return x * b.n + y; };
  std::vector<int> tab(static_cast<size_t>(nn) * nn);
  std::vector<std::string> labels(nn);
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < b.n; ++y) {
      labels[idx(x, y)] = "(" + a.label(x) + "," + b.label(y) + ")";
      for (int u = 0; u < a.n; ++u)
        for (int v = 0; v < b.n; ++v)
          tab[static_cast<size_t>(idx(x, y)) * nn + idx(u, v)] = idx(a.mul(x, u), b.mul(y, v));
    }
  FiniteGroup g = finish_group(nn, std::move(tab), std::move(labels));
  for (int ga : a.generators) g.generators.push_back(idx(ga, b.identity));
  for (int gb : b.generators) g.generators.push_back(idx(a.identity, gb));
  return g;
}

namespace {

bool is_automorphism(const FiniteGroup& h, const std::vector<int>& alpha) {
  if (!is_permutation_of_degree(alpha, h.n)) return false;
  for (int x = 0; x < h.n; ++x)
    for (int y = 0; y < h.n; ++y)
      if (alpha[h.mul(x, y)] != h.mul(alpha[x], alpha[y])) return false;
  return true;
}

}  // namespace

std::vector<std::vector<int>> extend_action_from_generators(
    const FiniteGroup& h, const FiniteGroup& q, const std::vector<int>& gen_indices,
    const std::vector<std::vector<int>>& gen_images) {
  if (gen_indices.size() != gen_images.size())
    throw NotAnActionError("one automorphism per generator required");
  std::vector<std::vector<int>> action(q.n);
  std::vector<int> id(h.n);
  std::iota(id.begin(), id.end(), 0);
  action[q.identity] = id;
  std::vector<char> known(q.n, 0);
  known[q.identity] = 1;
  for (size_t i = 0; i < gen_indices.size(); ++i) {
    int gi = gen_indices[i];
    if (gi < 0 || gi >= q.n) throw NotAnActionError("generator index out of range");
    if (known[gi] && action[gi] != gen_images[i])
      throw NotAnActionError("conflicting images for generator " + std::to_string(gi));
    action[gi] = gen_images[i];
    known[gi] = 1;
  }
  // close under left multiplication by generators: alpha_{g*q} = alpha_g o alpha_q
  std::vector<int> frontier;
  for (int x = 0; x < q.n; ++x)
    if (known[x]) frontier.push_back(x);
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (size_t i = 0; i < gen_indices.size(); ++i) {
      int y = q.mul(gen_indices[i], x);
      auto img = compose(gen_images[i], action[x]);
      if (!known[y]) {
        known[y] = 1;
        action[y] = std::move(img);
        frontier.push_back(y);
      } else if (action[y] != img) {
        throw NotAnActionError("generator images are inconsistent with the group relations");
      }
    }
  }
  for (int x = 0; x < q.n; ++x)
    if (!known[x]) throw NotAnActionError("given generators do not generate the acting group");
  return action;
}

FiniteGroup semidirect_product(const FiniteGroup& h, const FiniteGroup& q,
                               const std::vector<std::vector<int>>& action, int size_cap) {
  if (static_cast<int>(action.size()) != q.n)
    throw NotAnActionError("need one automorphism per element of the acting group");
  for (const auto& alpha : action)
    if (!is_automorphism(h, alpha)) throw NotAnActionError("image is not an automorphism");
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y)
      if (compose(action[x], action[y]) != action[q.mul(x, y)])
        throw NotAnActionError("action is not a homomorphism");

  const long n = static_cast<long>(h.n) * q.n;
  check_cap(n, size_cap);
  const int nn = static_cast<int>(n);
  auto idx = [&](int x, int y) { return x * q.n + y; };
  std::vector<int> tab(static_cast<size_t>(nn) * nn);
  std::vector<std::string> labels(nn);
  for (int x = 0; x < h.n; ++x)
    for (int y = 0; y < q.n; ++y) {
      labels[idx(x, y)] = "(" + h.label(x) + "," + q.label(y) + ")";
      for (int u = 0; u < h.n; ++u)
        for (int v = 0; v < q.n; ++v)
          tab[static_cast<size_t>(idx(x, y)) * nn + idx(u, v)] =
              idx(h.mul(x, action[y][u]), q.mul(y, v));
    }
  return finish_group(nn, std::move(tab), std::move(labels));
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& seed) {
  for (int s : seed)
    if (s < 0 || s >= g.n) throw InputError("subgroup seed index out of range");
  std::vector<char> in(g.n, 0);
  std::vector<int> work;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  };
  add(g.identity);
  for (int s : seed) add(s);
  for (size_t i = 0; i < work.size(); ++i) {
    int x = work[i];
    add(g.inv(x));
    for (size_t j = 0; j <= i; ++j) {
      add(g.mul(x, work[j]));
      add(g.mul(work[j], x));
    }
  }
  Subgroup s;
  for (int x = 0; x < g.n; ++x)
    if (in[x]) s.members.push_back(x);
  s.index = g.n / static_cast<int>(s.members.size());
  return s;
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return subgroup_generated(g, {}); }

Subgroup full_subgroup(const FiniteGroup& g) {
  Subgroup s;
  s.members.resize(g.n);
  std::iota(s.members.begin(), s.members.end(), 0);
  s.index = 1;
  return s;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s) {
  const int m = static_cast<int>(s.members.size());
  std::vector<int> pos(g.n, -1);
  for (int i = 0; i < m; ++i) pos[s.members[i]] = i;
  std::vector<int> tab(static_cast<size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = g.label(s.members[i]);
    for (int j = 0; j < m; ++j) {
      int prod = g.mul(s.members[i], s.members[j]);
      if (pos[prod] < 0) throw NotAGroupError("member set is not closed under multiplication");
      tab[static_cast<size_t>(i) * m + j] = pos[prod];
    }
  }
  FiniteGroup out = finish_group(m, std::move(tab), std::move(labels));
  if (!g.perms.empty()) {
    out.perms.reserve(m);
    for (int i = 0; i < m; ++i) out.perms.push_back(g.perms[s.members[i]]);
  }
  return out;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> seen(g.n, 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < g.n; ++x) {
    if (seen[x]) continue;
    std::set<int> orbit;
    for (int s = 0; s < g.n; ++s) orbit.insert(g.conjugate(s, x));
    std::vector<int> cls(orbit.begin(), orbit.end());
    for (int y : cls) seen[y] = 1;
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  ConjugacyClasses cc;
  cc.partition = std::move(classes);
  cc.class_of.assign(g.n, -1);
  for (size_t c = 0; c < cc.partition.size(); ++c) {
    cc.rep.push_back(cc.partition[c].front());
    cc.sizes.push_back(static_cast<int>(cc.partition[c].size()));
    for (int y : cc.partition[c]) cc.class_of[y] = static_cast<int>(c);
  }
  return cc;
}

ConjugatorSet x_set(const FiniteGroup& g, const Subgroup& g0, int elem) {
  if (!g0.contains(elem))
    throw NotInSubgroupError("element " + std::to_string(elem) + " is not in the subgroup");
  std::vector<char> in(g.n, 0);
  for (int m : g0.members) in[m] = 1;
  ConjugatorSet xs;
  xs.g = elem;
  for (int s = 0; s < g.n; ++s)
    if (in[g.conjugate(s, elem)]) xs.members.push_back(s);
  return xs;
}

bool is_normal(const FiniteGroup& g, const Subgroup& g0) {
  std::vector<char> in(g.n, 0);
  for (int m : g0.members) in[m] = 1;
  for (int s = 0; s < g.n; ++s)
    for (int m : g0.members)
      if (!in[g.conjugate(s, m)]) return false;
  return true;
}

std::vector<int> centralizer(const FiniteGroup& g, int elem) {
  std::vector<int> out;
  for (int s = 0; s < g.n; ++s)
    if (g.mul(s, elem) == g.mul(elem, s)) out.push_back(s);
  return out;
}

int find_permutation(const FiniteGroup& g, const std::vector<int>& perm) {
  for (int i = 0; i < static_cast<int>(g.perms.size()); ++i)
    if (g.perms[i] == perm) return i;
  return -1;
}

std::string cycle_notation(const std::vector<int>& perm) {
  std::ostringstream os;
  std::vector<char> seen(perm.size(), 0);
  bool any = false;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    any = true;
    os << "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      os << (first ? "" : " ") << j;
      first = false;
      j = static_cast<size_t>(perm[j]);
    }
    os << ")";
  }
  if (!any) return "e";
  return os.str();
}

}  // namespace charhyp
