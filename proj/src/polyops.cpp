#include "design_forge/polyops.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "design_forge/codebuild.hpp"
#include "design_forge/error.hpp"

namespace design_forge {

CyclotomicCoset cyclotomic_coset(std::uint32_t j, std::uint32_t n) {
  if (n == 0 || j >= n)
    throw Error(ErrorKind::IndexOutOfRange, "coset index " + std::to_string(j) + " not in [0, " + std::to_string(n) + ")");
  CyclotomicCoset coset;
  std::uint64_t x = j;
  do {
    coset.members.push_back(static_cast<std::uint32_t>(x));
    x = (2 * x) % n;
  } while (x != j);
  std::sort(coset.members.begin(), coset.members.end());
  coset.representative = coset.members.front();
  return coset;
}

std::vector<std::uint32_t> coset_representatives(std::uint32_t n) {
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t j = 0; j < n; ++j) {
    if (seen[j]) continue;
    reps.push_back(j);
    for (std::uint32_t member : cyclotomic_coset(j, n).members) seen[member] = true;
  }
  return reps;
}

BinaryPolynomial minimal_polynomial(std::uint32_t i, const FieldSpec& field) {
  const CyclotomicCoset coset = cyclotomic_coset(i, field.n());
  // coeffs[k] is the coefficient of x^k, over GF(2^m).
  std::vector<FieldElement> coeffs{FieldSpec::one()};
  for (std::uint32_t j : coset.members) {
    const FieldElement root = field.alpha_pow(j);
    std::vector<FieldElement> next(coeffs.size() + 1, FieldSpec::zero());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] = next[k + 1] + coeffs[k];
      next[k] = next[k] + field.mul(coeffs[k], root);  // -root == root in char 2
    }
    coeffs = std::move(next);
  }
  BinaryPolynomial out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].bits > 1)
      throw Error(ErrorKind::InvalidParameters,
                  "minimal polynomial of alpha^" + std::to_string(i) + " has a coefficient outside F2");
    out.set_coefficient(static_cast<unsigned>(k), coeffs[k].bits == 1);
  }
  return out;
}

BinaryPolynomial poly_lcm(std::span<const BinaryPolynomial> polys) {
  if (polys.empty()) throw Error(ErrorKind::EmptyInput, "lcm of an empty list");
  BinaryPolynomial acc = BinaryPolynomial::from_bits(1);
  for (const BinaryPolynomial& p : polys) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "lcm with the zero polynomial");
    acc = acc * (p / gcd(acc, p));
  }
  return acc;
}

BinaryPolynomial bch_generator(std::uint32_t delta, const FieldSpec& field) {
  if (delta < 2 || delta > field.n())
    throw Error(ErrorKind::InvalidDelta, "designed distance must be in [2, n], got " + std::to_string(delta));
  std::vector<BinaryPolynomial> factors;
  std::set<std::uint32_t> reps;
  for (std::uint32_t i = 1; i <= delta - 1; ++i)
    if (reps.insert(cyclotomic_coset(i % field.n(), field.n()).representative).second)
      factors.push_back(minimal_polynomial(i % field.n(), field));
  return poly_lcm(factors);
}

BinaryPolynomial x_pow_n_minus_one(std::uint32_t n) {
  return BinaryPolynomial::monomial(n) + BinaryPolynomial::from_bits(1);
}

std::vector<std::uint32_t> defining_set_of_family(const CodeSpec& spec) {
  const std::uint32_t n = (std::uint32_t{1} << spec.m()) - 1;
  std::vector<std::uint32_t> generators;
  if (spec.family() == Family::C1) {
    generators = {1, 3, 5};
  } else {
    generators = {1, (std::uint32_t{1} << spec.l()) + 1, (std::uint32_t{1} << spec.s()) + 1};
  }
  std::set<std::uint32_t> out{0};
  for (std::uint32_t g : generators)
    for (std::uint32_t member : cyclotomic_coset(g % n, n).members) out.insert(member);
  return {out.begin(), out.end()};
}

}  // namespace design_forge
