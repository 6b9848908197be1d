#include "charhyp/rational.hpp"

#include <ostream>

#include "charhyp/errors.hpp"

namespace charhyp {

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw DivisionByZeroError();
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
  if (d == 0) throw DivisionByZeroError();
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw InputError("malformed rational: \"" + s + "\"");
  if (q.get_den() == 0) throw DivisionByZeroError();
  q.canonicalize();
  Rational r;
  r.v_ = q;
  return r;
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw NotRationalError("value does not fit an integer: " + str());
  return v_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZeroError();
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace charhyp
