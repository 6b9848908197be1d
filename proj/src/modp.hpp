#ifndef CHARHYP_SRC_MODP_HPP
#define CHARHYP_SRC_MODP_HPP

#include <cstdint>
#include <vector>

namespace charhyp::modp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool is_prime(u64 n);

/// Smallest prime p with p ≡ 1 (mod m) and p > lower.
u32 smallest_prime_1_mod(u32 m, u32 lower);

inline u32 add(u32 a, u32 b, u32 p) { u32 s = a + b; return s >= p ? s - p : s; }
inline u32 sub(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
inline u32 mul(u32 a, u32 b, u32 p) { return static_cast<u32>((static_cast<u64>(a) * b) % p); }
u32 pow(u32 base, u64 exp, u32 p);
inline u32 inv(u32 a, u32 p) { return pow(a, p - 2, p); }

/// Smallest primitive root modulo prime p.
u32 primitive_root(u32 p);

/// Square root modulo prime p (Tonelli-Shanks); returns p when a is a
/// non-residue.
u32 sqrt_mod(u32 a, u32 p);

/// Dense matrix over F_p, row-major.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<u32> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  u32& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  u32 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static Matrix identity(int n);
  Matrix multiplied(const Matrix& o, u32 p) const;
};

/// Basis of the null space of m, as columns of the returned matrix.
Matrix kernel(Matrix m, u32 p);

/// Coefficients of det(xI - m), constant term first (degree = dimension).
std::vector<u32> char_poly(Matrix m, u32 p);

/// All lambda in F_p with f(lambda) = 0 (f given constant-term-first).
std::vector<u32> poly_roots(const std::vector<u32>& f, u32 p);

/// Solves basis * X = rhs where basis (r x d) has full column rank d;
/// returns X (d x k). Throws on inconsistency.
Matrix solve_in_basis(const Matrix& basis, const Matrix& rhs, u32 p);

}  // namespace charhyp::modp

#endif
