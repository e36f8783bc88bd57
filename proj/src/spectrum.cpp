#include "design_forge/spectrum.hpp"

#include <bit>
#include <string>
#include <vector>

#include "design_forge/error.hpp"
#include "design_forge/parallel.hpp"

namespace design_forge {

BigInt WeightDistribution::count(std::uint32_t weight) const {
  const auto it = entries_.find(weight);
  return it == entries_.end() ? BigInt(0) : it->second;
}

void WeightDistribution::add(std::uint32_t weight, const BigInt& count) {
  if (count == 0) return;
  BigInt& slot = entries_[weight];
  slot += count;
  if (slot == 0) entries_.erase(weight);
}

BigInt WeightDistribution::total() const {
  BigInt sum = 0;
  for (const auto& [w, c] : entries_) sum += c;
  return sum;
}

std::optional<std::uint32_t> WeightDistribution::min_distance() const {
  for (const auto& [w, c] : entries_)
    if (w != 0) return w;
  return std::nullopt;
}

bool WeightDistribution::is_consistent() const {
  if (count(0) != 1) return false;
  if (!entries_.empty() && entries_.rbegin()->first > length_) return false;
  for (const auto& [w, c] : entries_)
    if (c < 0) return false;
  return total() == pow2(dimension_);
}

WeightDistribution distribution_of_basis(std::span<const Codeword> basis, std::uint32_t length, unsigned threads) {
  if (basis.size() > kMaxEnumerationDimension)
    throw Error(ErrorKind::TooLarge, "dimension " + std::to_string(basis.size()) + " exceeds the enumeration limit " +
                                         std::to_string(kMaxEnumerationDimension));
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  auto histogram = parallel_accumulate(
      total, threads, [length] { return std::vector<std::uint64_t>(std::size_t{length} + 1, 0); },
      [&](IndexRange range, std::vector<std::uint64_t>& acc) {
        for_each_codeword(basis, range,
                          [&acc](std::uint64_t, std::span<const std::uint64_t>, unsigned weight) { ++acc[weight]; });
      },
      [](std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
        for (std::size_t w = 0; w < into.size(); ++w) into[w] += from[w];
      });
  WeightDistribution dist(length, static_cast<unsigned>(basis.size()));
  for (std::uint32_t w = 0; w <= length; ++w) dist.add(w, histogram[w]);
  return dist;
}

WeightDistribution weight_distribution(const CodeSpec& spec, const FieldSpec& field, unsigned threads) {
  const auto basis = generator_basis(spec, field);
  return distribution_of_basis(basis, field.q(), threads);
}

WeightDistribution cyclic_weight_distribution(const CodeSpec& spec, const FieldSpec& field, unsigned threads) {
  const auto basis = cyclic_generator_basis(spec, field);
  return distribution_of_basis(basis, field.n(), threads);
}

WeightDistribution extend_distribution(const WeightDistribution& dist) {
  const std::uint32_t n = dist.length();
  if (dist.count(0) != 1) throw Error(ErrorKind::WeightCollision, "input has A_0 != 1");
  WeightDistribution out(n + 1, dist.dimension() + 1);
  for (const auto& [w, c] : dist.entries()) {
    if (w > n) throw Error(ErrorKind::WeightCollision, "weight " + std::to_string(w) + " exceeds length " + std::to_string(n));
    if (w % 2 != 0)
      throw Error(ErrorKind::WeightCollision, "odd weight " + std::to_string(w) + " cannot extend to an even-weight code");
    out.add(w, c);
    out.add(n + 1 - w, c);
  }
  return out;
}

std::int64_t exp_sum(FieldElement a, FieldElement b, FieldElement c, const FieldSpec& field) {
  std::int64_t sum = 0;
  for (std::uint32_t i = 0; i < field.q(); ++i) {
    const FieldElement x = field.element_by_index(i);
    const FieldElement v = field.mul(a, field.pow(x, 5)) + field.mul(b, field.pow(x, 3)) + field.mul(c, x);
    sum += field.trace(v) ? -1 : 1;
  }
  return sum;
}

QuadFormProfile quadform_rank(FieldElement a, FieldElement b, const FieldSpec& field) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::ZeroForm, "(a, b) = (0, 0) gives the zero quadratic form");
  const FieldElement a4 = field.pow(a, 4);
  const FieldElement b4 = field.pow(b, 4);
  const FieldElement b2 = field.square(b);
  std::uint32_t kernel = 0;
  for (std::uint32_t i = 0; i < field.q(); ++i) {
    const FieldElement x = field.element_by_index(i);
    const FieldElement v = field.mul(a4, field.pow(x, 16)) + field.mul(b4, field.pow(x, 8)) +
                           field.mul(b2, field.square(x)) + field.mul(a, x);
    if (v.is_zero()) ++kernel;
  }
  QuadFormProfile profile{a, b, 0, kernel};
  profile.rank = field.m() - std::countr_zero(kernel);
  return profile;
}

PlessReport pless_verify(const WeightDistribution& dist, std::uint32_t n, unsigned k) {
  const BigInt N = n;
  // Right-hand side polynomials P_j(n): sum_i i^j A_i = 2^(k-j) P_j(n).
  const std::array<BigInt, 7> poly{
      BigInt(1),
      N,
      N * (N + 1),
      N * N * N + 3 * N * N,
      N * N * N * N + 6 * N * N * N + 3 * N * N - 2 * N,
      N * N * N * N * N + 10 * N * N * N * N + 15 * N * N * N - 10 * N * N,
      N * N * N * N * N * N + 15 * N * N * N * N * N + 45 * N * N * N * N - 15 * N * N * N - 30 * N * N + 16 * N,
  };
  PlessReport report;
  report.holds = true;
  for (int j = 0; j < 7; ++j) {
    BigInt moment = 0;
    for (const auto& [w, c] : dist.entries()) {
      BigInt term = c;
      for (int e = 0; e < j; ++e) term *= w;
      moment += term;
    }
    report.lhs[static_cast<std::size_t>(j)] = moment << j;
    report.rhs[static_cast<std::size_t>(j)] = poly[static_cast<std::size_t>(j)] << k;
    if (report.lhs[static_cast<std::size_t>(j)] != report.rhs[static_cast<std::size_t>(j)] && report.holds) {
      report.holds = false;
      report.first_failure = j + 1;
    }
  }
  return report;
}

std::int64_t weight_from_sum(std::int64_t sum, int s) {
  if (sum % 2 != 0) throw Error(ErrorKind::OddSum, "exponential sum " + std::to_string(sum) + " is odd");
  return (std::int64_t{1} << (2 * s - 1)) - sum / 2;
}

}  // namespace design_forge
