#include "modp.hpp"

#include "charhyp/errors.hpp"

namespace charhyp::modp {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u32 smallest_prime_1_mod(u32 m, u32 lower) {
  u64 p = 1 + m;
  while (p <= lower || !is_prime(p)) p += m;
  if (p > 0x7fffffffULL) throw Error("working prime overflow");
  return static_cast<u32>(p);
}

u32 pow(u32 base, u64 exp, u32 p) {
  u64 result = 1, b = base % p;
  while (exp) {
    if (exp & 1) result = result * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<u32>(result);
}

u32 primitive_root(u32 p) {
  if (p == 2) return 1;
  std::vector<u32> prime_factors;
  u32 n = p - 1;
  for (u32 d = 2; static_cast<u64>(d) * d <= n; ++d) {
    if (n % d == 0) {
      prime_factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) prime_factors.push_back(n);
  for (u32 g = 2; g < p; ++g) {
    bool ok = true;
    for (u32 q : prime_factors)
      if (pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error("no primitive root found");
}

u32 sqrt_mod(u32 a, u32 p) {
  a %= p;
  if (a == 0) return 0;
  if (pow(a, (p - 1) / 2, p) != 1) return p;  // non-residue
  if (p % 4 == 3) return pow(a, (p + 1) / 4, p);
  // Tonelli-Shanks
  u32 q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u32 z = 2;
  while (pow(z, (p - 1) / 2, p) != p - 1) ++z;
  u32 m = s;
  u32 c = pow(z, q, p);
  u32 t = pow(a, q, p);
  u32 r = pow(a, (q + 1) / 2, p);
  while (t != 1) {
    u32 i = 0, tt = t;
    while (tt != 1) {
      tt = mul(tt, tt, p);
      ++i;
      if (i == m) return p;
    }
    u32 b = pow(c, 1u << (m - i - 1), p);
    m = i;
    c = mul(b, b, p);
    t = mul(t, c, p);
    r = mul(r, b, p);
  }
  return r;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::multiplied(const Matrix& o, u32 p) const {
  Matrix out(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      u32 v = at(i, k);
      if (!v) continue;
      for (int j = 0; j < o.cols; ++j)
        out.at(i, j) = add(out.at(i, j), mul(v, o.at(k, j), p), p);
    }
  return out;
}

namespace {

// In-place row reduction; returns pivot column per pivot row.
std::vector<int> row_reduce(Matrix& m, u32 p) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col)) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(row, c));
    u32 s = inv(m.at(row, col), p);
    for (int c = 0; c < m.cols; ++c) m.at(row, c) = mul(m.at(row, c), s, p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || !m.at(r, col)) continue;
      u32 f = m.at(r, col);
      for (int c = 0; c < m.cols; ++c) m.at(r, c) = sub(m.at(r, c), mul(f, m.at(row, c), p), p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix kernel(Matrix m, u32 p) {
  const int n = m.cols;
  std::vector<int> pivots = row_reduce(m, p);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(n, static_cast<int>(free_cols.size()));
  for (size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    basis.at(fc, static_cast<int>(j)) = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      basis.at(pivots[r], static_cast<int>(j)) = sub(0, m.at(static_cast<int>(r), fc), p);
  }
  return basis;
}

std::vector<u32> char_poly(Matrix m, u32 p) {
  const int n = m.rows;
  // reduce to upper Hessenberg form by similarity transformations
  for (int j = 0; j + 2 < n; ++j) {
    int pivot = -1;
    for (int i = j + 1; i < n; ++i)
      if (m.at(i, j)) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != j + 1) {
      for (int c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(j + 1, c));
      for (int r = 0; r < n; ++r) std::swap(m.at(r, pivot), m.at(r, j + 1));
    }
    u32 d = inv(m.at(j + 1, j), p);
    for (int i = j + 2; i < n; ++i) {
      u32 f = mul(m.at(i, j), d, p);
      if (!f) continue;
      for (int c = 0; c < n; ++c) m.at(i, c) = sub(m.at(i, c), mul(f, m.at(j + 1, c), p), p);
      for (int r = 0; r < n; ++r) m.at(r, j + 1) = add(m.at(r, j + 1), mul(f, m.at(r, i), p), p);
    }
  }
  // char polys of leading blocks of a Hessenberg matrix
  std::vector<std::vector<u32>> cp(n + 1);
  cp[0] = {1};
  for (int k = 1; k <= n; ++k) {
    // cp[k] = (x - m[k-1][k-1]) * cp[k-1] - sum_i m[i][k-1] * prod(subdiag) * cp[i]
    std::vector<u32> poly(k + 1, 0);
    const std::vector<u32>& prev = cp[k - 1];
    for (int t = 0; t < k; ++t) {
      poly[t + 1] = add(poly[t + 1], prev[t], p);
      poly[t] = sub(poly[t], mul(m.at(k - 1, k - 1), prev[t], p), p);
    }
    u32 run = 1;
    for (int i = k - 2; i >= 0; --i) {
      run = mul(run, m.at(i + 1, i), p);
      if (!run) break;
      u32 coef = mul(m.at(i, k - 1), run, p);
      if (!coef) continue;
      for (int t = 0; t <= i; ++t) poly[t] = sub(poly[t], mul(coef, cp[i][t], p), p);
    }
    cp[k] = std::move(poly);
  }
  return cp[n];
}

std::vector<u32> poly_roots(const std::vector<u32>& f, u32 p) {
  std::vector<u32> roots;
  for (u32 x = 0; x < p; ++x) {
    u32 acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = add(mul(acc, x, p), f[i], p);
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

Matrix solve_in_basis(const Matrix& basis, const Matrix& rhs, u32 p) {
  const int r = basis.rows, d = basis.cols, k = rhs.cols;
  Matrix aug(r, d + k);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < d; ++j) aug.at(i, j) = basis.at(i, j);
    for (int j = 0; j < k; ++j) aug.at(i, d + j) = rhs.at(i, j);
  }
  std::vector<int> pivots = row_reduce(aug, p);
  Matrix x(d, k);
  int row = 0;
  for (int c : pivots) {
    if (c >= d) throw Error("solve_in_basis: inconsistent system");
    for (int j = 0; j < k; ++j) x.at(c, j) = aug.at(row, d + j);
    ++row;
  }
  if (static_cast<int>(pivots.size()) != d) throw Error("solve_in_basis: basis is rank-deficient");
  // consistency: remaining rows of the reduced augmented part must vanish
  for (int i = row; i < r; ++i)
    for (int j = 0; j < k; ++j)
      if (aug.at(i, d + j)) throw Error("solve_in_basis: inconsistent system");
  return x;
}

}  // namespace charhyp::modp
