#include "compseq/poly.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "compseq/errors.hpp"

namespace compseq {

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error(v.get_str() + " does not fit in 64 bits");
  return v.get_si();
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(unsigned power, const Rational& c) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
      out[i + k] += coeffs_[i] * rhs.coeffs_[k];
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Rational eval(const Polynomial& p, const Integer& n) {
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= n;
    acc += *it;
  }
  acc.canonicalize();
  return acc;
}

Integer eval_int(const Polynomial& p, const Integer& n) {
  Rational v = eval(p, n);
  if (v.get_den() != 1) {
    throw NonIntegerValue("polynomial value at " + n.get_str() + " is " + v.get_str() +
                          ", not an integer");
  }
  return v.get_num();
}

Polynomial shift(const Polynomial& p, std::int64_t a) {
  // Horner in the basis (j + a).
  Polynomial linear({Rational(to_integer(a)), Rational(1)});
  Polynomial acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= linear;
    acc += Polynomial::constant(*it);
  }
  return acc;
}

Polynomial sub(const Polynomial& p, const Polynomial& q) { return p - q; }

Polynomial scale(const Polynomial& p, const Rational& c) {
  std::vector<Rational> v = p.coeffs();
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Polynomial binomial(const Polynomial& e, unsigned k) {
  Polynomial acc = Polynomial::constant(1);
  Integer factorial = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= e - Polynomial::constant(Rational(i));
    factorial *= i + 1;
  }
  return scale(acc, Rational(Integer(1), factorial));
}

std::vector<Rational> to_newton_basis(const Polynomial& p) {
  if (p.is_zero()) return {};
  const int d = p.degree();
  // Forward differences at 0: b_i = (Delta^i p)(0).
  std::vector<Rational> diff;
  diff.reserve(d + 1);
  for (int n = 0; n <= d; ++n) diff.push_back(eval(p, Integer(n)));
  std::vector<Rational> b;
  b.reserve(d + 1);
  for (int level = 0; level <= d; ++level) {
    b.push_back(diff[0]);
    for (int i = 0; i + 1 < static_cast<int>(diff.size()); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  return b;
}

Polynomial from_newton_basis(const std::vector<Rational>& b) {
  Polynomial acc;
  const Polynomial j = Polynomial::monomial(1);
  for (std::size_t i = 0; i < b.size(); ++i) {
    acc += scale(binomial(j, static_cast<unsigned>(i)), b[i]);
  }
  return acc;
}

bool is_integer_valued(const Polynomial& p) {
  const auto b = to_newton_basis(p);
  return std::all_of(b.begin(), b.end(), [](const Rational& x) { return x.get_den() == 1; });
}

namespace {

// Smallest integer s >= 0 with s^e >= r, for rational r >= 0.
Integer ceil_root(const Rational& r, unsigned long e) {
  Integer ceil_r;
  mpz_cdiv_q(ceil_r.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Integer s;
  mpz_root(s.get_mpz_t(), ceil_r.get_mpz_t(), e);
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), s.get_mpz_t(), e);
  if (power < ceil_r) s += 1;
  return s;
}

}  // namespace

Integer positive_root_bound(const Polynomial& p) {
  const Rational lead = p.leading();
  if (sgn(lead) <= 0) {
    throw NotEventuallyPositive("leading coefficient " + lead.get_str() + " is not positive");
  }
  const int d = p.degree();
  const auto& c = p.coeffs();
  const long negatives = std::count_if(c.begin(), c.end(), [](const Rational& x) { return sgn(x) < 0; });
  Integer bound = 0;
  for (int i = 0; i < d; ++i) {
    if (sgn(c[i]) >= 0) continue;
    Rational r = Rational(negatives) * abs(c[i]) / lead;
    bound = std::max(bound, ceil_root(r, static_cast<unsigned long>(d - i)));
  }
  return bound;
}

std::int64_t positivity_cutoff(const Polynomial& p, std::int64_t floor) {
  const Integer bound = positive_root_bound(p);
  if (p.degree() == 0) return floor;
  if (bound >= to_integer(std::numeric_limits<std::int64_t>::max() / 2)) {
    throw std::overflow_error("positive root bound " + bound.get_str() + " is out of range");
  }
  std::int64_t m = std::max(to_int64(bound) + 1, floor);
  while (m > floor && sgn(eval(p, to_integer(m - 1))) > 0) --m;
  return m;
}

}  // namespace compseq
