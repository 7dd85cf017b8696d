#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace qcl {

/// One term coef * q^q * c^c of a Laurent polynomial.
struct Term {
  int q = 0;
  int c = 0;
  mpz_class coef;
};

/// Sparse Laurent polynomial in the commuting indeterminates q and c with
/// integer coefficients.
///
/// Terms are kept sorted by (q, c) ascending with no zero coefficients, so
/// equality is term-wise equality. The leading term is the last one.
class Poly {
 public:
  Poly() = default;
  Poly(long v);  // NOLINT: integers embed implicitly
  Poly(const mpz_class& v);  // NOLINT

  static Poly monomial(int eq, int ec, const mpz_class& coef = 1);
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool depends_on_c() const;

  int min_q() const;
  int min_c() const;
  int max_q() const;
  int max_c() const;

  const Term& leading() const { return terms_.back(); }
  mpz_class content() const;

  Poly shifted(int dq, int dc) const;
  Poly scaled(const mpz_class& k) const;
  Poly divided_exact(const mpz_class& k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Substitutes q = qv, c = cv. Throws if a negative power of zero occurs.
  mpq_class evaluate(const mpq_class& qv, const mpq_class& cv) const;

  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Gcd in Z[q^{±1}, c^{±1}], where monomials are units: the result has no
/// monomial factor, positive leading coefficient, and carries the gcd of the
/// integer contents.
Poly gcd(const Poly& a, const Poly& b);

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

}  // namespace qcl
