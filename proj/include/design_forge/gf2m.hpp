#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "design_forge/binary_polynomial.hpp"

namespace design_forge {

/// Element of GF(2^m) as a coefficient vector over {1, alpha, ..., alpha^(m-1)}.
struct FieldElement {
  std::uint32_t bits = 0;

  bool is_zero() const { return bits == 0; }
  friend FieldElement operator+(FieldElement a, FieldElement b) { return {a.bits ^ b.bits}; }
  friend auto operator<=>(FieldElement, FieldElement) = default;
};

/// GF(2^m), m = 2s even, with a fixed primitive element alpha.
///
/// Immutable once built; copies share the log/antilog tables, so a FieldSpec
/// can be passed by value into worker threads.
class FieldSpec {
 public:
  int m() const { return tables_->m; }
  int s() const { return tables_->m / 2; }
  std::uint32_t q() const { return std::uint32_t{1} << tables_->m; }
  std::uint32_t n() const { return q() - 1; }
  const BinaryPolynomial& primitive_poly() const { return tables_->poly; }

  static FieldElement zero() { return {0}; }
  static FieldElement one() { return {1}; }
  FieldElement alpha() const { return {2}; }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    return {tables_->antilog[tables_->log[a.bits] + tables_->log[b.bits]]};
  }
  FieldElement square(FieldElement a) const { return mul(a, a); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  FieldElement inverse(FieldElement a) const;
  /// alpha^e for any e >= 0.
  FieldElement alpha_pow(std::uint64_t e) const { return {tables_->antilog[e % n()]}; }
  /// Discrete log base alpha; a must be nonzero.
  std::uint32_t log(FieldElement a) const { return tables_->log[a.bits]; }

  /// Absolute trace to F2.
  bool trace(FieldElement x) const;
  /// True iff x lies in the subfield of order 2^s.
  bool in_subfield(FieldElement x) const;
  /// Trace from the order-2^s subfield to F2; throws NotInSubfield otherwise.
  bool subfield_trace(FieldElement x) const;

  /// Coordinate order shared by every codeword: 0, 1, alpha, alpha^2, ...
  FieldElement element_by_index(std::uint32_t i) const;
  std::uint32_t index_of(FieldElement x) const { return x.is_zero() ? 0 : log(x) + 1; }

  /// Multiplicative order of the class of x modulo poly, or nullopt when x is
  /// not invertible (poly(0) = 0). Works for any poly of degree <= 16.
  static std::optional<std::uint32_t> order_of_x(const BinaryPolynomial& poly);

 private:
  friend FieldSpec make_field(int m, std::optional<BinaryPolynomial> primitive_poly);

  struct Tables {
    int m = 0;
    BinaryPolynomial poly;
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> antilog;  // length 2n so log sums need no reduction
    std::uint32_t trace_mask = 0;        // trace(x) = parity(x & trace_mask)
  };
  std::shared_ptr<const Tables> tables_;
};

/// Default primitive polynomial for even m in [4, 16].
BinaryPolynomial default_primitive_poly(int m);

/// Throws UnsupportedM for odd m or m outside [4, 16], NonPrimitivePolynomial
/// when the supplied polynomial has the wrong degree or a root of order < 2^m-1.
FieldSpec make_field(int m, std::optional<BinaryPolynomial> primitive_poly = std::nullopt);

}  // namespace design_forge
