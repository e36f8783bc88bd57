#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "design_forge/binary_polynomial.hpp"
#include "design_forge/gf2m.hpp"

namespace design_forge {

class CodeSpec;

/// Doubling orbit of an exponent modulo n. Members are sorted ascending, so
/// the representative is members.front().
struct CyclotomicCoset {
  std::uint32_t representative = 0;
  std::vector<std::uint32_t> members;

  std::size_t size() const { return members.size(); }
  friend bool operator==(const CyclotomicCoset&, const CyclotomicCoset&) = default;
};

CyclotomicCoset cyclotomic_coset(std::uint32_t j, std::uint32_t n);

/// Minimum member of every coset modulo n, ascending.
std::vector<std::uint32_t> coset_representatives(std::uint32_t n);

/// prod_{j in C_i} (x - alpha^j), expanded over GF(2^m) and checked to land in F2[x].
BinaryPolynomial minimal_polynomial(std::uint32_t i, const FieldSpec& field);

BinaryPolynomial poly_lcm(std::span<const BinaryPolynomial> polys);

/// Generator of the narrow-sense primitive BCH code of designed distance delta:
/// lcm(M_1, ..., M_{delta-1}).
BinaryPolynomial bch_generator(std::uint32_t delta, const FieldSpec& field);

/// x^n - 1 over F2.
BinaryPolynomial x_pow_n_minus_one(std::uint32_t n);

/// Defining set (mod n, sorted) of the extended code whose dual is enumerated:
/// {0} u C_1 u C_3 u C_5 for C1, {0} u C_1 u C_{2^l+1} u C_{2^s+1} for C2.
std::vector<std::uint32_t> defining_set_of_family(const CodeSpec& spec);

}  // namespace design_forge
