#include "design_forge/binary_polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "design_forge/error.hpp"

namespace design_forge {

BinaryPolynomial BinaryPolynomial::from_bits(std::uint64_t bits) {
  BinaryPolynomial p;
  p.words_.push_back(bits);
  p.normalize();
  return p;
}

BinaryPolynomial BinaryPolynomial::from_exponents(std::initializer_list<unsigned> exponents) {
  BinaryPolynomial p;
  for (unsigned e : exponents) p.set_coefficient(e, !p.coefficient(e));
  return p;
}

BinaryPolynomial BinaryPolynomial::monomial(unsigned exponent) {
  BinaryPolynomial p;
  p.set_coefficient(exponent, true);
  return p;
}

BinaryPolynomial BinaryPolynomial::from_hex(std::string_view text) {
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) text.remove_prefix(2);
  if (text.empty()) throw Error(ErrorKind::InvalidParameters, "empty polynomial literal");
  BinaryPolynomial p;
  unsigned bit = 0;
  for (auto it = text.rbegin(); it != text.rend(); ++it, bit += 4) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
    unsigned nibble = 0;
    if (c >= '0' && c <= '9') {
      nibble = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      nibble = static_cast<unsigned>(c - 'a' + 10);
    } else {
      throw Error(ErrorKind::InvalidParameters, "bad hex digit in polynomial literal '" + std::string(text) + "'");
    }
    for (unsigned j = 0; j < 4; ++j)
      if (nibble >> j & 1U) p.set_coefficient(bit + j, true);
  }
  return p;
}

int BinaryPolynomial::degree() const {
  if (words_.empty()) return -1;
  return static_cast<int>(64 * (words_.size() - 1)) + 63 - std::countl_zero(words_.back());
}

bool BinaryPolynomial::coefficient(unsigned i) const {
  const std::size_t w = i / 64;
  return w < words_.size() && (words_[w] >> (i % 64) & 1U);
}

void BinaryPolynomial::set_coefficient(unsigned i, bool value) {
  const std::size_t w = i / 64;
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  words_[w] = value ? (words_[w] | mask) : (words_[w] & ~mask);
  normalize();
}

std::string BinaryPolynomial::to_hex() const {
  if (is_zero()) return "0x0";
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  const int deg = degree();
  for (int nib = deg / 4; nib >= 0; --nib) {
    unsigned v = 0;
    for (unsigned j = 0; j < 4; ++j)
      if (coefficient(static_cast<unsigned>(nib) * 4 + j)) v |= 1U << j;
    out.push_back(kDigits[v]);
  }
  return "0x" + out;
}

std::string BinaryPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (!coefficient(static_cast<unsigned>(i))) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += "1";
    } else if (i == 1) {
      out += "x";
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  normalize();
  return *this;
}

BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  BinaryPolynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  out.words_.assign(a.words_.size() + b.words_.size(), 0);
  for (int i = 0; i <= a.degree(); ++i) {
    if (!a.coefficient(static_cast<unsigned>(i))) continue;
    // out ^= b << i
    const std::size_t ws = static_cast<std::size_t>(i) / 64;
    const unsigned bs = static_cast<unsigned>(i) % 64;
    for (std::size_t j = 0; j < b.words_.size(); ++j) {
      out.words_[j + ws] ^= b.words_[j] << bs;
      if (bs != 0 && j + ws + 1 < out.words_.size()) out.words_[j + ws + 1] ^= b.words_[j] >> (64 - bs);
    }
  }
  out.normalize();
  return out;
}

std::pair<BinaryPolynomial, BinaryPolynomial> BinaryPolynomial::divmod(const BinaryPolynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  BinaryPolynomial quotient;
  BinaryPolynomial rem = *this;
  const int dd = divisor.degree();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const unsigned shift = static_cast<unsigned>(rem.degree() - dd);
    quotient.set_coefficient(shift, true);
    for (int i = 0; i <= dd; ++i)
      if (divisor.coefficient(static_cast<unsigned>(i))) {
        const unsigned at = static_cast<unsigned>(i) + shift;
        rem.words_[at / 64] ^= std::uint64_t{1} << (at % 64);
      }
    rem.normalize();
  }
  return {quotient, rem};
}

void BinaryPolynomial::normalize() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b) {
  while (!b.is_zero()) {
    BinaryPolynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace design_forge
