#include "charhyp/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "charhyp/errors.hpp"

namespace charhyp {

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact division of integer polynomials, constant term first. The divisor is
// monic in every call site here, so no coefficient division can fail.
std::vector<mpz_class> exact_div(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  const size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw Error("polynomial division underflow");
  std::vector<mpz_class> quot(num.size() - dd);
  for (size_t qi = quot.size(); qi-- > 0;) {
    mpz_class q = num[qi + dd] / den[dd];
    quot[qi] = q;
    for (size_t j = 0; j <= dd; ++j) num[qi + j] -= q * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw Error("polynomial division not exact");
  return quot;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw Error("cyclotomic polynomial order must be positive");
  if (m == 1) return {mpz_class(-1), mpz_class(1)};  // x - 1
  // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
  std::vector<mpz_class> num(m + 1, mpz_class(0));
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d == 0) num = exact_div(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

namespace {

struct FieldContext {
  unsigned m = 1;
  unsigned phi = 1;
  std::vector<mpz_class> poly;                 // Phi_m
  std::vector<std::vector<Rational>> powers;   // powers[k] = zeta^k reduced, k in [0, m)
};

const FieldContext& field_context(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<FieldContext>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return *it->second;

  auto ctx = std::make_unique<FieldContext>();
  ctx->m = m;
  ctx->phi = euler_phi(m);
  ctx->poly = cyclotomic_polynomial(m);
  const unsigned phi = ctx->phi;

  // zeta^k for k < phi is a basis vector; from k = phi on, reduce using
  // x^phi = -(poly[0] + poly[1] x + ... + poly[phi-1] x^{phi-1}).
  ctx->powers.resize(m);
  for (unsigned k = 0; k < m; ++k) {
    ctx->powers[k].assign(phi, Rational(0));
    if (k < phi) {
      ctx->powers[k][k] = Rational(1);
    } else {
      const auto& prev = ctx->powers[k - 1];
      // multiply by x, then fold the overflow term via the relation above
      std::vector<Rational> next(phi, Rational(0));
      for (unsigned j = 0; j + 1 < phi; ++j) next[j + 1] = prev[j];
      const Rational& top = prev[phi - 1];
      if (!top.is_zero()) {
        for (unsigned j = 0; j < phi; ++j) next[j] -= top * Rational(ctx->poly[j]);
      }
      ctx->powers[k] = std::move(next);
    }
  }
  auto& ref = *ctx;
  cache.emplace(m, std::move(ctx));
  return ref;
}

using Poly = std::vector<Rational>;  // dense, constant term first

int poly_degree(const Poly& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (!p[i].is_zero()) return static_cast<int>(i);
  return -1;
}

// Remainder and quotient of a by b over Q.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  int db = poly_degree(b);
  if (db < 0) throw DivisionByZeroError();
  Poly quot(a.size(), Rational(0));
  for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
    Rational q = a[da] / b[db];
    quot[da - db] = q;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= q * b[j];
  }
  return {std::move(quot), std::move(a)};
}

}  // namespace

Cyclotomic::Cyclotomic(unsigned order) : order_(order) {
  if (order == 0) throw Error("cyclotomic order must be positive");
  coeffs_.assign(field_context(order).phi, Rational(0));
}

Cyclotomic Cyclotomic::from_rational(unsigned order, const Rational& q) {
  Cyclotomic c(order);
  c.coeffs_[0] = q;
  return c;
}

Cyclotomic Cyclotomic::root_power(unsigned order, long k) {
  const auto& ctx = field_context(order);
  long r = k % static_cast<long>(order);
  if (r < 0) r += order;
  Cyclotomic c(order);
  c.coeffs_ = ctx.powers[static_cast<size_t>(r)];
  return c;
}

Cyclotomic Cyclotomic::from_coeffs(unsigned order, std::vector<Rational> coeffs) {
  Cyclotomic c(order);
  if (coeffs.size() != c.coeffs_.size())
    throw Error("coefficient vector length must equal phi(order)");
  c.coeffs_ = std::move(coeffs);
  return c;
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q.is_zero(); });
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw NotRationalError("cyclotomic value is not rational: " + str());
  return coeffs_[0];
}

Cyclotomic Cyclotomic::embedded(unsigned target) const {
  if (target == order_) return *this;
  if (target % order_ != 0) throw Error("embedding target must be a multiple of the order");
  const unsigned step = target / order_;
  Cyclotomic out(target);
  const auto& ctx = field_context(target);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    const auto& pw = ctx.powers[(static_cast<unsigned long>(step) * j) % target];
    for (size_t t = 0; t < out.coeffs_.size(); ++t) out.coeffs_[t] += coeffs_[j] * pw[t];
  }
  return out;
}

Cyclotomic Cyclotomic::conj() const {
  const auto& ctx = field_context(order_);
  Cyclotomic out(order_);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    const auto& pw = ctx.powers[(order_ - j) % order_];
    for (size_t t = 0; t < out.coeffs_.size(); ++t) out.coeffs_[t] += coeffs_[j] * pw[t];
  }
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZeroError();
  const auto& ctx = field_context(order_);
  // Extended Euclid over Q[x] against Phi_m (irreducible), unrolled to track
  // only the cofactor of this element.
  Poly r0(ctx.poly.size());
  for (size_t i = 0; i < ctx.poly.size(); ++i) r0[i] = Rational(ctx.poly[i]);
  Poly r1(coeffs_.begin(), coeffs_.end());
  Poly s0(1, Rational(0)), s1(1, Rational(1));
  while (true) {
    int d1 = poly_degree(r1);
    if (d1 < 0) throw Error("inverse: gcd degenerated");  // unreachable for irreducible modulus
    if (d1 == 0) {
      Rational lead = r1[0];
      Cyclotomic out(order_);
      for (size_t i = 0; i < s1.size() && i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = s1[i] / lead;
      return out;
    }
    auto [q, rem] = poly_divmod(r0, r1);
    // s_next = s0 - q*s1
    Poly snext(std::max(s0.size(), q.size() + s1.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) snext[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i].is_zero()) continue;
      for (size_t j = 0; j < s1.size(); ++j) snext[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snext);
  }
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<double> acc(0.0, 0.0);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(order_);
    acc += coeffs_[j].approx() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return coeffs_[0].str();
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << coeffs_[0].str();
    } else {
      if (coeffs_[j] != Rational(1)) os << coeffs_[j].str() << "*";
      os << "z" << order_;
      if (j > 1) os << "^" << j;
    }
  }
  if (first) os << "0";
  return os.str();
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (order_ != o.order_) throw Error("cyclotomic order mismatch; embed first");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (order_ != o.order_) throw Error("cyclotomic order mismatch; embed first");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (order_ != o.order_) throw Error("cyclotomic order mismatch; embed first");
  if (o.is_rational()) return *this *= o.coeffs_[0];
  if (is_rational()) {
    Rational q = coeffs_[0];
    coeffs_ = o.coeffs_;
    return *this *= q;
  }
  const auto& ctx = field_context(order_);
  const unsigned phi = static_cast<unsigned>(coeffs_.size());
  std::vector<Rational> conv(2 * phi - 1, Rational(0));
  for (unsigned i = 0; i < phi; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; j < phi; ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      conv[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  std::vector<Rational> out(phi, Rational(0));
  for (unsigned k = 0; k < phi; ++k) out[k] = conv[k];
  for (unsigned k = phi; k < conv.size(); ++k) {
    if (conv[k].is_zero()) continue;
    const auto& pw = ctx.powers[k % order_];
    for (unsigned t = 0; t < phi; ++t) out[t] += conv[k] * pw[t];
  }
  coeffs_ = std::move(out);
  return *this;
}

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic out(a.order_);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] = -a.coeffs_[i];
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  unsigned l = std::lcm(a.order_, b.order_);
  return a.embedded(l).coeffs_ == b.embedded(l).coeffs_;
}

}  // namespace charhyp
