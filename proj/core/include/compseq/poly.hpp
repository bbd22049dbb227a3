#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace compseq {

using Integer = mpz_class;
using Rational = mpq_class;

static_assert(sizeof(long) == sizeof(std::int64_t), "GMP si conversions assume LP64");

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

/// Throws std::overflow_error if v does not fit in 64 bits.
std::int64_t to_int64(const Integer& v);

/// Exact univariate polynomial with rational coefficients.
///
/// Coefficient i multiplies j^i. The representation is canonical: every
/// coefficient is in lowest terms and the highest stored coefficient is
/// nonzero. The zero polynomial stores no coefficients and has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// The monomial j^power.
  static Polynomial monomial(unsigned power, const Rational& c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of j^i; zero beyond the degree.
  Rational coeff(std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  Polynomial operator-() const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

Rational eval(const Polynomial& p, const Integer& n);
/// Throws NonIntegerValue if p(n) is not an integer.
Integer eval_int(const Polynomial& p, const Integer& n);

/// q(j) = p(j + a).
Polynomial shift(const Polynomial& p, std::int64_t a);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const Rational& c);
Polynomial pow(const Polynomial& p, unsigned e);

/// The falling-factorial binomial e(e-1)...(e-k+1)/k!.
Polynomial binomial(const Polynomial& e, unsigned k);

/// Coefficients b_i with p(j) = sum_i b_i * binomial(j, i).
std::vector<Rational> to_newton_basis(const Polynomial& p);
Polynomial from_newton_basis(const std::vector<Rational>& b);

/// True iff p(n) is an integer for every integer n.
bool is_integer_valued(const Polynomial& p);

/// An integer B such that p(x) > 0 for every real x > B.
///
/// Uses Cauchy's bound for positive roots: with k negative coefficients,
/// every positive root is at most max over a_i < 0 of (k|a_i|/a_d)^(1/(d-i)).
/// Requires a positive leading coefficient; returns 0 when there are no
/// negative coefficients.
Integer positive_root_bound(const Polynomial& p);

/// Least m >= floor with p(n) > 0 for every integer n >= m.
///
/// Positivity beyond positive_root_bound(p) is certified by the bound; the
/// integers between floor and the bound are scanned downward. Throws
/// NotEventuallyPositive if the leading coefficient is not positive.
std::int64_t positivity_cutoff(const Polynomial& p, std::int64_t floor);

}  // namespace compseq
