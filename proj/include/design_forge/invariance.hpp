#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "design_forge/codebuild.hpp"
#include "design_forge/gf2m.hpp"

namespace design_forge {

/// r precedes e in the 2-adic digit order: every binary digit of r is at most
/// the matching digit of e.
bool preceq(std::uint32_t r, std::uint32_t e, int m);

struct ClosureResult {
  bool closed = false;
  /// (e, r) with e in T, r preceq e and r not in T.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
};

/// Downward closure of T under preceq. Checks the cover relation only
/// (clearing one set bit of e), scanning T ascending and bits high to low;
/// the first failure is the witness.
ClosureResult closure_check(std::span<const std::uint32_t> defining_set, int m);

/// x -> a x + b, a nonzero.
struct AffineMap {
  FieldElement a;
  FieldElement b;

  FieldElement apply(FieldElement x, const FieldSpec& field) const { return field.mul(a, x) + b; }
  /// (this o other)(x) = this(other(x)).
  AffineMap compose(const AffineMap& other, const FieldSpec& field) const;
};

/// Coordinate permutation of an extended codeword: result bit at x is w(sigma(x)).
Codeword permute(const Codeword& w, const AffineMap& map, const FieldSpec& field);

/// Largest m for which the orbit check runs.
inline constexpr int kMaxOrbitCheckM = 6;

/// Every affine map sends every basis row back into the span of `basis`.
/// Throws TooLarge for m > kMaxOrbitCheckM.
bool affine_orbit_check(std::span<const Codeword> basis, const FieldSpec& field, unsigned threads = 1);
bool affine_orbit_check(const CodeSpec& spec, const FieldSpec& field, unsigned threads = 1);

/// Affine invariance carried over to the dual: true iff the extended code's
/// defining set passes closure_check.
bool dual_invariance_note(const CodeSpec& spec);

}  // namespace design_forge
