#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "design_forge/bigint.hpp"
#include "design_forge/codebuild.hpp"
#include "design_forge/gf2m.hpp"

namespace design_forge {

/// Exact weight -> count map of a binary linear code. Only nonzero counts
/// are stored.
class WeightDistribution {
 public:
  WeightDistribution() = default;
  WeightDistribution(std::uint32_t length, unsigned dimension) : length_(length), dimension_(dimension) {}

  std::uint32_t length() const { return length_; }
  unsigned dimension() const { return dimension_; }
  const std::map<std::uint32_t, BigInt>& entries() const { return entries_; }

  BigInt count(std::uint32_t weight) const;
  void add(std::uint32_t weight, const BigInt& count);
  BigInt total() const;
  /// Smallest nonzero weight with a nonzero count.
  std::optional<std::uint32_t> min_distance() const;
  /// Counts sum to 2^dimension, A_0 = 1, all weights within [0, length].
  bool is_consistent() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

 private:
  std::uint32_t length_ = 0;
  unsigned dimension_ = 0;
  std::map<std::uint32_t, BigInt> entries_;
};

/// Largest dimension weight_distribution will enumerate.
inline constexpr unsigned kMaxEnumerationDimension = 26;

/// Histogram of the span of a row-reduced basis; throws TooLarge above
/// kMaxEnumerationDimension.
WeightDistribution distribution_of_basis(std::span<const Codeword> basis, std::uint32_t length, unsigned threads = 1);

WeightDistribution weight_distribution(const CodeSpec& spec, const FieldSpec& field, unsigned threads = 1);
/// Distribution of the length-n cyclic relative.
WeightDistribution cyclic_weight_distribution(const CodeSpec& spec, const FieldSpec& field, unsigned threads = 1);

/// Closed-form distributions. Every row is evaluated as an exact rational;
/// a non-integral row throws NonIntegerCount naming the row.
WeightDistribution closed_form_c1(int s);
WeightDistribution closed_form_c2_extended(int s, int l);
WeightDistribution closed_form_c2_cyclic(int s, int l);

/// Length-n code -> its length-(n+1) extension with the all-one word
/// adjoined: A'(w) = A(w) + A(n+1-w). Throws WeightCollision when the input
/// is not a linear-code distribution (A_0 != 1, weight > n) or carries an
/// odd weight, which would break the even-weight extension.
WeightDistribution extend_distribution(const WeightDistribution& dist);

/// sum over x in GF(q) of (-1)^tr(a x^5 + b x^3 + c x).
std::int64_t exp_sum(FieldElement a, FieldElement b, FieldElement c, const FieldSpec& field);

struct QuadFormProfile {
  FieldElement a;
  FieldElement b;
  int rank = 0;
  std::uint32_t kernel_size = 0;
};

/// Rank of the quadratic form tr(a x^5 + b x^3) from the size of the kernel
/// {x : a^4 x^16 + b^4 x^8 + b^2 x^2 + a x = 0}. Throws ZeroForm for a = b = 0.
QuadFormProfile quadform_rank(FieldElement a, FieldElement b, const FieldSpec& field);

struct PlessReport {
  bool holds = false;
  /// 1-based index of the first failing moment identity, 0 when all hold.
  int first_failure = 0;
  /// 2^j * sum_i i^j A_i and 2^k * P_j(n), j = 0..6; equal iff moment j holds.
  std::array<BigInt, 7> lhs;
  std::array<BigInt, 7> rhs;
};

/// First seven power moments, valid when the dual has no words of weight 1..6.
PlessReport pless_verify(const WeightDistribution& dist, std::uint32_t n, unsigned k);

/// 2^(2s-1) - S/2; throws OddSum for odd S.
std::int64_t weight_from_sum(std::int64_t sum, int s);

}  // namespace design_forge
