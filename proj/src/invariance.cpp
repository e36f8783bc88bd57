#include "design_forge/invariance.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "design_forge/error.hpp"
#include "design_forge/parallel.hpp"
#include "design_forge/polyops.hpp"

namespace design_forge {

bool preceq(std::uint32_t r, std::uint32_t e, int m) {
  const std::uint32_t mask = (std::uint32_t{1} << m) - 1;
  return (r & ~mask) == 0 && (e & ~mask) == 0 && (r & e) == r;
}

ClosureResult closure_check(std::span<const std::uint32_t> defining_set, int m) {
  const std::set<std::uint32_t> members(defining_set.begin(), defining_set.end());
  for (std::uint32_t e : members) {
    if (e >> m != 0)
      throw Error(ErrorKind::IndexOutOfRange, "exponent " + std::to_string(e) + " outside [0, 2^m)");
    for (int bit = m - 1; bit >= 0; --bit) {
      if ((e >> bit & 1U) == 0) continue;
      const std::uint32_t r = e ^ (std::uint32_t{1} << bit);
      if (!members.contains(r)) return {false, std::make_pair(e, r)};
    }
  }
  return {true, std::nullopt};
}

AffineMap AffineMap::compose(const AffineMap& other, const FieldSpec& field) const {
  return {field.mul(a, other.a), field.mul(a, other.b) + b};
}

Codeword permute(const Codeword& w, const AffineMap& map, const FieldSpec& field) {
  if (w.length() != field.q()) throw Error(ErrorKind::LengthMismatch, "permute needs a length-q codeword");
  Codeword out(w.length());
  for (std::uint32_t i = 0; i < w.length(); ++i)
    if (w.bit(field.index_of(map.apply(field.element_by_index(i), field)))) out.set(i);
  return out;
}

bool affine_orbit_check(std::span<const Codeword> basis, const FieldSpec& field, unsigned threads) {
  if (field.m() > kMaxOrbitCheckM)
    throw Error(ErrorKind::TooLarge, "orbit check is limited to m <= " + std::to_string(kMaxOrbitCheckM));
  for (const Codeword& row : basis)
    if (row.length() != field.q()) throw Error(ErrorKind::LengthMismatch, "basis rows must have length q");
  // Map index k encodes a = alpha^(k / q), b = element_by_index(k % q).
  const std::uint64_t maps = std::uint64_t{field.n()} * field.q();
  struct Verdict {
    bool ok = true;
  };
  return parallel_accumulate(
      maps, threads, [] { return Verdict{}; },
      [&](IndexRange range, Verdict& verdict) {
        for (std::uint64_t k = range.begin; k < range.end && verdict.ok; ++k) {
          const AffineMap map{field.alpha_pow(k / field.q()), field.element_by_index(static_cast<std::uint32_t>(k % field.q()))};
          for (const Codeword& row : basis)
            if (!membership_test(permute(row, map, field), basis)) {
              verdict.ok = false;
              break;
            }
        }
      },
      [](Verdict& into, const Verdict& from) { into.ok = into.ok && from.ok; })
      .ok;
}

bool affine_orbit_check(const CodeSpec& spec, const FieldSpec& field, unsigned threads) {
  check_field_matches(spec, field);
  if (field.m() > kMaxOrbitCheckM)
    throw Error(ErrorKind::TooLarge, "orbit check is limited to m <= " + std::to_string(kMaxOrbitCheckM));
  const auto basis = generator_basis(spec, field);
  return affine_orbit_check(basis, field, threads);
}

bool dual_invariance_note(const CodeSpec& spec) {
  const auto defining = defining_set_of_family(spec);
  return closure_check(defining, spec.m()).closed;
}

}  // namespace design_forge
