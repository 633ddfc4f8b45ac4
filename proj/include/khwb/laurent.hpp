#pragma once

#include <map>
#include <string>

#include "khwb/integers.hpp"

namespace khwb {

// Laurent polynomial in q with integer coefficients.  The zero coefficient
// is never stored, so equality of the term maps is equality of polynomials.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(int exponent, Int coefficient = 1);

  const std::map<int, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coefficient(int exponent) const;

  void add_term(int exponent, const Int& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Int& c) const;

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // q -> q^{-1}
  LaurentPoly inverted_variable() const;
  // multiply by q^dq
  LaurentPoly shifted(int dq) const;
  LaurentPoly pow(unsigned e) const;

  // Sorted text with descending exponents, e.g. "-q^9 + q^5 + q^3 + q".
  std::string str() const;

 private:
  std::map<int, Int> terms_;
};

// q + q^{-1}, the bracket weight of one circle.
LaurentPoly circle_weight();

}  // namespace khwb
