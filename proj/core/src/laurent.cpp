#include "mgd/laurent.hpp"

#include <sstream>

namespace mgd {

LaurentPolynomial LaurentPolynomial::term(Coeff c, int e) {
  LaurentPolynomial p;
  if (c != 0) p.terms_[e] = c;
  return p;
}

LaurentPolynomial::Coeff LaurentPolynomial::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPolynomial::strip_zeros() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) terms_[e] += c;
  strip_zeros();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) terms_[e] -= c;
  strip_zeros();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  std::map<int, Coeff> out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      out[e1 + e2] += c1 * c2;
    }
  }
  terms_ = std::move(out);
  strip_zeros();
  return *this;
}

LaurentPolynomial LaurentPolynomial::pow(int k) const {
  LaurentPolynomial acc = one();
  LaurentPolynomial base = *this;
  for (int n = k; n > 0; n >>= 1) {
    if (n & 1) acc *= base;
    base *= base;
  }
  return acc;
}

LaurentPolynomial LaurentPolynomial::invert_variable() const {
  LaurentPolynomial p;
  for (const auto& [e, c] : terms_) p.terms_[-e] = c;
  return p;
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending exponent order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    Coeff c = it->second;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    const bool unit = (c == 1);
    if (e == 0) {
      out << c;
    } else {
      if (!unit) out << c << "*";
      if (e == 1) {
        out << "A";
      } else {
        out << "A^" << e;
      }
    }
  }
  return out.str();
}

LaurentPolynomial bracket_delta() {
  return LaurentPolynomial::term(-1, 2) + LaurentPolynomial::term(-1, -2);
}

}  // namespace mgd
