#ifndef MGD_LAURENT_HPP
#define MGD_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>

namespace mgd {

// Integer Laurent polynomial in one variable A. Exponents may be negative.
// Terms are kept in a sorted map so arithmetic and printing are deterministic.
class LaurentPolynomial {
 public:
  using Coeff = std::int64_t;

  LaurentPolynomial() = default;

  // Constructs c * A^e.
  static LaurentPolynomial term(Coeff c, int e);
  static LaurentPolynomial zero() { return {}; }
  static LaurentPolynomial one() { return term(1, 0); }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Coeff coeff(int e) const;
  [[nodiscard]] const std::map<int, Coeff>& terms() const { return terms_; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    a -= b;
    return a;
  }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) {
    a *= b;
    return a;
  }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.terms_ < b.terms_;
  }

  // Exponentiation by a non-negative integer power.
  [[nodiscard]] LaurentPolynomial pow(int k) const;

  // Substitutes A -> A^-1 (mirror symmetry of the bracket).
  [[nodiscard]] LaurentPolynomial invert_variable() const;

  // Deterministic human-readable form: terms sorted by descending exponent,
  // e.g. "-A^4 - A^-4", "1", "0", "2*A^2 + 1".
  [[nodiscard]] std::string str() const;

 private:
  void strip_zeros();
  std::map<int, Coeff> terms_;
};

// The unknot-loop factor delta = -A^2 - A^-2.
LaurentPolynomial bracket_delta();

}  // namespace mgd

#endif  // MGD_LAURENT_HPP
