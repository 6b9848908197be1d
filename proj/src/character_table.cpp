#include "charhyp/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "charhyp/errors.hpp"
#include "modp.hpp"

namespace charhyp {

namespace {

using modp::Matrix;
using modp::u32;

int isqrt(int n) {
  int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (static_cast<long>(r) * r > n) --r;
  while (static_cast<long>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Splits an invariant subspace (columns of basis) by the eigenspaces of m.
std::vector<Matrix> split_by(const Matrix& m, const Matrix& basis, u32 p) {
  const int d = basis.cols;
  Matrix image = m.multiplied(basis, p);
  Matrix restricted = modp::solve_in_basis(basis, image, p);
  std::vector<u32> cp = modp::char_poly(restricted, p);
  std::vector<u32> roots = modp::poly_roots(cp, p);
  std::vector<Matrix> parts;
  int total = 0;
  for (u32 lam : roots) {
    Matrix shifted = restricted;
    for (int i = 0; i < d; ++i) shifted.at(i, i) = modp::sub(shifted.at(i, i), lam, p);
    Matrix ker = modp::kernel(std::move(shifted), p);
    if (ker.cols == 0) continue;
    parts.push_back(basis.multiplied(ker, p));
    total += ker.cols;
  }
  if (total != d)
    throw LiftFailureError("class matrix failed to act diagonalizably on a subspace");
  return parts;
}

}  // namespace

CharacterTable::CharacterTable(FiniteGroup g, unsigned field_order)
    : group_(std::move(g)), classes_(conjugacy_classes(group_)) {
  unsigned expo = group_.exponent();
  m_ = field_order == 0 ? expo : field_order;
  if (m_ % expo != 0)
    throw Error("field order must be a multiple of the group exponent");
  identity_class_ = classes_.class_of[group_.identity];
  compute();
  verify();
}

void CharacterTable::compute() {
  const int r = classes_.count();
  const int n = group_.n;
  const u32 p = modp::smallest_prime_1_mod(m_, static_cast<u32>(2 * isqrt(n)));

  // class multiplication coefficients a_{ijk} = #{(x,y) in C_i x C_j : xy = rep_k}
  std::vector<Matrix> class_mats(r, Matrix(r, r));
  for (int i = 0; i < r; ++i) {
    for (int x : classes_.partition[static_cast<size_t>(i)]) {
      int xinv = group_.inv(x);
      for (int k = 0; k < r; ++k) {
        int y = group_.mul(xinv, classes_.rep[static_cast<size_t>(k)]);
        int j = classes_.class_of[y];
        u32& cell = class_mats[i].at(j, k);
        cell = modp::add(cell, 1, p);
      }
    }
  }

  // simultaneous eigenvectors: split by class matrices in canonical order,
  // then (never needed in practice) by seeded random combinations
  std::vector<Matrix> spaces{Matrix::identity(r)};
  auto split_round = [&](const Matrix& m) {
    std::vector<Matrix> next;
    for (const Matrix& sp : spaces) {
      if (sp.cols <= 1) {
        next.push_back(sp);
        continue;
      }
      for (Matrix& part : split_by(m, sp, p)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  };
  auto fully_split = [&]() {
    return std::all_of(spaces.begin(), spaces.end(), [](const Matrix& s) { return s.cols == 1; });
  };
  for (int i = 0; i < r && !fully_split(); ++i) split_round(class_mats[i]);
  std::mt19937 rng(0xC0FFEE);
  for (int attempt = 0; attempt < 64 && !fully_split(); ++attempt) {
    Matrix combo(r, r);
    for (int i = 0; i < r; ++i) {
      u32 c = rng() % p;
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
          combo.at(a, b) = modp::add(combo.at(a, b), modp::mul(c, class_mats[i].at(a, b), p), p);
    }
    split_round(combo);
  }
  if (!fully_split()) throw LiftFailureError("could not separate central characters");
  if (static_cast<int>(spaces.size()) != r)
    throw LiftFailureError("wrong number of central characters");

  // recover dimensions and mod-p character values from the central characters
  std::vector<int> inv_class(r);
  for (int k = 0; k < r; ++k)
    inv_class[k] = classes_.class_of[group_.inv(classes_.rep[static_cast<size_t>(k)])];

  const u32 root = modp::pow(modp::primitive_root(p), (p - 1) / m_, p);  // zeta_m mod p
  const int sq = isqrt(n);

  std::vector<Character> chars;
  for (const Matrix& sp : spaces) {
    std::vector<u32> omega(r);
    u32 scale = sp.at(identity_class_, 0);
    if (scale == 0) throw LiftFailureError("central character vanishes at the identity class");
    u32 sinv = modp::inv(scale, p);
    for (int k = 0; k < r; ++k) omega[k] = modp::mul(sp.at(k, 0), sinv, p);

    u32 denom = 0;
    for (int k = 0; k < r; ++k) {
      u32 term = modp::mul(omega[k], omega[inv_class[k]], p);
      term = modp::mul(term, modp::inv(static_cast<u32>(classes_.sizes[static_cast<size_t>(k)]) % p, p), p);
      denom = modp::add(denom, term, p);
    }
    if (denom == 0) throw LiftFailureError("degree denominator vanished");
    u32 dsq = modp::mul(static_cast<u32>(n % p), modp::inv(denom, p), p);
    u32 droot = modp::sqrt_mod(dsq, p);
    if (droot == p) throw LiftFailureError("degree squared is not a quadratic residue");
    u32 d = std::min(droot, p - droot);
    if (d == 0 || static_cast<int>(d) > sq)
      throw LiftFailureError("recovered degree out of range");

    std::vector<u32> chi_mod(r);
    for (int k = 0; k < r; ++k) {
      u32 v = modp::mul(d, omega[k], p);
      chi_mod[k] =
          modp::mul(v, modp::inv(static_cast<u32>(classes_.sizes[static_cast<size_t>(k)]) % p, p), p);
    }

    // lift each value by the inverse DFT over powers of the representative
    Character ch;
    ch.dim = static_cast<int>(d);
    ch.chi.values.reserve(r);
    for (int k = 0; k < r; ++k) {
      int g = classes_.rep[static_cast<size_t>(k)];
      int o = group_.element_order(g);
      unsigned step = m_ / static_cast<unsigned>(o);
      std::vector<u32> chi_pow(static_cast<size_t>(o));
      int x = group_.identity;
      for (int t = 0; t < o; ++t) {
        chi_pow[static_cast<size_t>(t)] = chi_mod[classes_.class_of[x]];
        x = group_.mul(x, g);
      }
      const u32 z = modp::pow(root, step, p);           // primitive o-th root
      const u32 zinv = modp::inv(z, p);
      const u32 oinv = modp::inv(static_cast<u32>(o) % p, p);
      Cyclotomic value(m_);
      long total = 0;
      for (int j = 0; j < o; ++j) {
        u32 acc = 0;
        for (int t = 0; t < o; ++t) {
          u32 w = modp::pow(zinv, static_cast<modp::u64>(j) * t % o, p);
          acc = modp::add(acc, modp::mul(chi_pow[static_cast<size_t>(t)], w, p), p);
        }
        u32 mult = modp::mul(acc, oinv, p);
        if (static_cast<int>(mult) > ch.dim)
          throw LiftFailureError("eigenvalue multiplicity exceeds the degree");
        total += mult;
        if (mult)
          value += Cyclotomic::root_power(m_, static_cast<long>(step) * j) * Rational(static_cast<long>(mult));
      }
      if (total != ch.dim) throw LiftFailureError("eigenvalue multiplicities do not sum to the degree");
      ch.chi.values.push_back(std::move(value));
    }
    chars.push_back(std::move(ch));
  }

  // canonical ordering: trivial first, then (dim, value-lexicographic by
  // numeric embedding, re before im), exact coefficient order as tiebreak
  auto is_trivial = [&](const Character& c) {
    if (c.dim != 1) return false;
    Cyclotomic one = Cyclotomic::one(m_);
    return std::all_of(c.chi.values.begin(), c.chi.values.end(),
                       [&](const Cyclotomic& v) { return v == one; });
  };
  std::vector<std::vector<std::complex<double>>> approx(chars.size());
  for (size_t i = 0; i < chars.size(); ++i) {
    approx[i].reserve(static_cast<size_t>(r));
    for (const auto& v : chars[i].chi.values) approx[i].push_back(v.approx());
  }
  std::vector<size_t> order(chars.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  constexpr double kEps = 1e-9;
  auto exact_less = [&](const Cyclotomic& a, const Cyclotomic& b) {
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                        b.coeffs().end());
  };
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    bool ta = is_trivial(chars[a]), tb = is_trivial(chars[b]);
    if (ta != tb) return ta;
    if (chars[a].dim != chars[b].dim) return chars[a].dim < chars[b].dim;
    for (int k = 0; k < r; ++k) {
      const auto &va = approx[a][static_cast<size_t>(k)], &vb = approx[b][static_cast<size_t>(k)];
      if (std::abs(va.real() - vb.real()) > kEps) return va.real() < vb.real();
      if (std::abs(va.imag() - vb.imag()) > kEps) return va.imag() < vb.imag();
    }
    for (int k = 0; k < r; ++k) {
      const auto &ca = chars[a].chi.values[static_cast<size_t>(k)],
                 &cb = chars[b].chi.values[static_cast<size_t>(k)];
      if (ca != cb) return exact_less(ca, cb);
    }
    return false;
  });
  irr_.clear();
  irr_.reserve(chars.size());
  for (size_t i = 0; i < order.size(); ++i) {
    Character c = std::move(chars[order[i]]);
    c.index = static_cast<int>(i);
    irr_.push_back(std::move(c));
  }

  conj_index_.assign(irr_.size(), -1);
  for (size_t i = 0; i < irr_.size(); ++i) {
    for (size_t j = 0; j < irr_.size(); ++j) {
      bool match = true;
      for (int k = 0; k < r && match; ++k)
        match = irr_[j].chi.values[static_cast<size_t>(k)] ==
                irr_[i].chi.values[static_cast<size_t>(k)].conj();
      if (match) {
        conj_index_[i] = static_cast<int>(j);
        break;
      }
    }
    if (conj_index_[i] < 0) throw LiftFailureError("conjugate character missing from the table");
  }
}

void CharacterTable::verify() const {
  const int r = classes_.count();
  if (count() != r) throw LiftFailureError("irreducible count differs from class count");
  long dim_sq = 0;
  for (const Character& c : irr_) {
    if (c.dim < 1) throw LiftFailureError("non-positive degree");
    dim_sq += static_cast<long>(c.dim) * c.dim;
    Cyclotomic at_e = c.chi.values[static_cast<size_t>(identity_class_)];
    if (at_e != Cyclotomic::from_rational(m_, Rational(c.dim)))
      throw LiftFailureError("character at the identity differs from its degree");
  }
  if (dim_sq != group_.n) throw LiftFailureError("sum of squared degrees differs from the order");
  if (!irr_.empty()) {
    Cyclotomic one = Cyclotomic::one(m_);
    for (const auto& v : irr_[0].chi.values)
      if (v != one) throw LiftFailureError("first character is not trivial");
  }

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Cyclotomic ip = inner_product(*this, irr_[static_cast<size_t>(i)].chi,
                                    irr_[static_cast<size_t>(j)].chi);
      Cyclotomic expect = Cyclotomic::from_rational(m_, Rational(i == j ? 1 : 0));
      if (ip != expect) throw LiftFailureError("row orthogonality failed");
    }

  for (int c = 0; c < r; ++c)
    for (int d = 0; d < r; ++d) {
      Cyclotomic sum(m_);
      for (int i = 0; i < r; ++i)
        sum += value(i, c) * value(i, d).conj();
      Rational expect = c == d ? Rational(group_.n, classes_.sizes[static_cast<size_t>(c)]) : Rational(0);
      if (sum != Cyclotomic::from_rational(m_, expect))
        throw LiftFailureError("column orthogonality failed");
    }
}

ClassFunction normalized_character(const Character& c) {
  ClassFunction f;
  f.values.reserve(c.chi.values.size());
  Rational scale(1, c.dim);
  for (const auto& v : c.chi.values) f.values.push_back(v * scale);
  return f;
}

Cyclotomic inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& h) {
  const int r = t.classes().count();
  if (static_cast<int>(f.values.size()) != r || static_cast<int>(h.values.size()) != r)
    throw Error("class function length mismatch");
  Cyclotomic sum(t.field_order());
  for (int k = 0; k < r; ++k) {
    Cyclotomic term = f.values[static_cast<size_t>(k)] * h.values[static_cast<size_t>(k)].conj();
    term *= Rational(t.classes().sizes[static_cast<size_t>(k)]);
    sum += term;
  }
  sum *= Rational(1, t.group().n);
  return sum;
}

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& h) {
  if (f.values.size() != h.values.size()) throw Error("class function length mismatch");
  ClassFunction out;
  out.values.reserve(f.values.size());
  for (size_t k = 0; k < f.values.size(); ++k) out.values.push_back(f.values[k] * h.values[k]);
  return out;
}

std::vector<Cyclotomic> decompose(const CharacterTable& t, const ClassFunction& f) {
  std::vector<Cyclotomic> out;
  out.reserve(static_cast<size_t>(t.count()));
  for (int i = 0; i < t.count(); ++i) out.push_back(inner_product(t, f, t.irr(i).chi));
  return out;
}

std::vector<long> decompose_integral(const CharacterTable& t, const ClassFunction& f) {
  std::vector<long> out;
  out.reserve(static_cast<size_t>(t.count()));
  for (const Cyclotomic& c : decompose(t, f)) {
    if (!c.is_rational())
      throw NonIntegralMultiplicityError("multiplicity is irrational: " + c.str());
    Rational q = c.to_rational();
    if (!q.is_integer())
      throw NonIntegralMultiplicityError("multiplicity is not an integer: " + q.str());
    out.push_back(q.to_long());
  }
  return out;
}

}  // namespace charhyp
