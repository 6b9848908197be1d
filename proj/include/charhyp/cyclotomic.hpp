#ifndef CHARHYP_CYCLOTOMIC_HPP
#define CHARHYP_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "charhyp/rational.hpp"

namespace charhyp {

unsigned euler_phi(unsigned m);

/// Coefficients of the m-th cyclotomic polynomial, constant term first,
/// monic of degree phi(m).
std::vector<mpz_class> cyclotomic_polynomial(unsigned m);

/// Element of the cyclotomic field Q(zeta_m), stored on the power basis
/// 1, zeta, ..., zeta^{phi(m)-1} reduced modulo the m-th cyclotomic
/// polynomial. Equality of elements is equality of coefficient vectors.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(unsigned order);  // zero of Q(zeta_order)

  static Cyclotomic from_rational(unsigned order, const Rational& q);
  static Cyclotomic zero(unsigned order) { return Cyclotomic(order); }
  static Cyclotomic one(unsigned order) { return from_rational(order, 1); }
  /// zeta_order^k, reduced.
  static Cyclotomic root_power(unsigned order, long k);
  static Cyclotomic from_coeffs(unsigned order, std::vector<Rational> coeffs);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; throws NotRational unless is_rational().
  Rational to_rational() const;

  /// Image under zeta_order |-> zeta_target^{target/order}; target must be a
  /// multiple of order.
  Cyclotomic embedded(unsigned target) const;

  /// Complex conjugate (zeta |-> zeta^{-1}); an involutive field automorphism.
  Cyclotomic conj() const;
  /// Multiplicative inverse; throws DivisionByZero on zero.
  Cyclotomic inverse() const;

  /// Numeric embedding zeta |-> exp(2*pi*i/order) at double precision.
  /// Diagnostics and ordering only, never an equality test.
  std::complex<double> approx() const;

  std::string str() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& q);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
  friend Cyclotomic operator-(const Cyclotomic& a);

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

 private:
  unsigned order_;
  std::vector<Rational> coeffs_;  // length phi(order_)
};

inline Cyclotomic cyc_add(const Cyclotomic& a, const Cyclotomic& b) { return a + b; }
inline Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }
inline Cyclotomic cyc_conj(const Cyclotomic& a) { return a.conj(); }
inline Cyclotomic cyc_inv(const Cyclotomic& a) { return a.inverse(); }
inline Rational cyc_to_rational(const Cyclotomic& a) { return a.to_rational(); }

}  // namespace charhyp

#endif
