#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace design_forge {

/// Polynomial over F2, coefficient i stored in bit i. Always kept with no
/// zero words above the leading term, so equality is structural.
class BinaryPolynomial {
 public:
  BinaryPolynomial() = default;

  static BinaryPolynomial from_bits(std::uint64_t bits);
  static BinaryPolynomial from_exponents(std::initializer_list<unsigned> exponents);
  static BinaryPolynomial monomial(unsigned exponent);
  /// Accepts "0x13", "13" (hex digits, LSB = constant term).
  static BinaryPolynomial from_hex(std::string_view text);

  /// -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return words_.empty(); }
  bool coefficient(unsigned i) const;
  void set_coefficient(unsigned i, bool value);

  /// Low 64 coefficients; meaningful when degree() < 64.
  std::uint64_t low_bits() const { return words_.empty() ? 0 : words_[0]; }

  std::string to_hex() const;
  /// e.g. "x^4 + x + 1".
  std::string to_string() const;

  BinaryPolynomial& operator+=(const BinaryPolynomial& other);
  friend BinaryPolynomial operator+(BinaryPolynomial a, const BinaryPolynomial& b) { return a += b; }
  friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b);

  /// (quotient, remainder).
  std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& divisor) const;
  BinaryPolynomial operator%(const BinaryPolynomial& divisor) const { return divmod(divisor).second; }
  BinaryPolynomial operator/(const BinaryPolynomial& divisor) const { return divmod(divisor).first; }

  friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

 private:
  void normalize();
  std::vector<std::uint64_t> words_;
};

BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b);

}  // namespace design_forge
