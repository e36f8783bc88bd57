#include <cstdint>
#include <string>

#include "design_forge/codebuild.hpp"
#include "design_forge/designs.hpp"
#include "design_forge/error.hpp"
#include "exact.hpp"

namespace design_forge {

namespace {

using exact::p2;

BigInt finish(const Rational& value, const std::string& what) {
  return exact::to_integer(value, ErrorKind::NonIntegerLambda, what);
}

[[noreturn]] void not_listed(const std::string& family, std::uint32_t i) {
  throw Error(ErrorKind::InapplicableParameters, family + " has no closed-form lambda for weight " + std::to_string(i));
}

}  // namespace

BigInt theorem_lambda_c1(int s, std::uint32_t i) {
  if (s < 3) throw Error(ErrorKind::InapplicableParameters, "C1 lambdas need s >= 3, got s=" + std::to_string(s));
  const Rational k = p2(2 * s - 1);
  const Rational w = i;
  const Rational near = Rational(2, 15) * p2(s - 1) * (3 * p2(4 * s) + 5 * p2(2 * s) - 8);
  const Rational mid = Rational(7, 3) * p2(3 * s - 4);
  const Rational far = Rational(1, 15) * p2(s - 3) * (p2(4 * s - 2) - 5 * p2(2 * s - 2) + 1);
  const std::string tag = "C1 lambda at weight " + std::to_string(i);
  if (w == k)
    // b (k-1) / (2 (v-1)) with b the weight-2^(2s-1) multiplicity.
    return finish((29 * p2(6 * s - 6) - 33 * p2(4 * s - 6) + 17 * p2(2 * s - 4) - 1) * (p2(2 * s - 1) - 1) /
                      (p2(2 * s) - 1),
                  tag);
  if (w == k - p2(s - 1)) return finish(near * (w - 1) / (p2(s) + 1), tag);
  if (w == k + p2(s - 1)) return finish(near * (w - 1) / (p2(s) - 1), tag);
  if (w == k - p2(s)) return finish(mid * (w - 1) * (p2(s - 1) - 1), tag);
  if (w == k + p2(s)) return finish(mid * (w - 1) * (p2(s - 1) + 1), tag);
  if (w == k - p2(s + 1)) return finish(far * (w - 1) * (p2(s - 2) - 1) / (p2(2 * s) - 1), tag);
  if (w == k + p2(s + 1)) return finish(far * (w - 1) * (p2(s - 2) + 1) / (p2(2 * s) - 1), tag);
  not_listed("C1", i);
}

BigInt theorem_lambda_c2(int s, int l, std::uint32_t i) {
  const CodeSpec spec = CodeSpec::c2(s, l);
  const int d = spec.d();
  const Rational k = p2(2 * s - 1);
  const Rational w = i;
  const std::string tag = "C2 lambda at weight " + std::to_string(i);
  if (spec.dprime() == d) {
    const Rational e = p2(2 * (s + d)) - p2(2 * s + d) - p2(2 * s) + p2(s + 2 * d) - p2(s + d) + p2(2 * d);
    if (w == k - p2(s - 1)) return finish(p2(s - 1) * (p2(s) - 1) * (w - 1) * e / ((p2(2 * d) - 1) * (p2(s) + 1)), tag);
    if (w == k + p2(s - 1)) return finish(p2(s - 1) * (w - 1) * e / (p2(2 * d) - 1), tag);
    if (w == k - p2(s + d - 1))
      return finish(p2(s - d - 1) * (p2(s - d) - 1) * (p2(s + d) - 1) * (w - 1) / (p2(2 * d) - 1), tag);
    if (w == k + p2(s + d - 1))
      return finish(p2(s - d - 1) * (p2(s - d) + 1) * (p2(s + d) - 1) * (w - 1) / (p2(2 * d) - 1), tag);
    if (w == k) return finish((p2(2 * s - 1) - 1) * (p2(3 * s - d) - p2(2 * s - 2 * d) + 1), tag);
    not_listed(spec.name(), i);
  }
  const Rational e = p2(2 * s) - p2(2 * (s - d)) - p2(2 * s - 3 * d) + p2(s) - p2(s - d) + 1;
  const Rational kasami = p2(s) + p2(s - d) + p2(s - 2 * d) + 1;
  if (w == k - p2(s - 1) || w == k + p2(s - 1))
    return finish(p2(3 * d) * e * (w - 1) * w / ((p2(2 * d) - 1) * (p2(d) + 1) * (p2(s) + 1)), tag);
  if (w == k - p2(s + d - 1) || w == k + p2(s + d - 1))
    return finish(kasami * w * (w - 1) / (p2(d) * (p2(d) + 1) * (p2(d) + 1)), tag);
  if (w == k)
    return finish(2 * (p2(2 * s - 1) - 1) *
                      (p2(3 * s - d) - p2(3 * s - 2 * d) + p2(3 * s - 3 * d) - p2(3 * s - 4 * d) + p2(3 * s - 5 * d) +
                       p2(2 * s - d) - p2(2 * s - 2 * d + 1) + p2(2 * s - 3 * d) - p2(2 * s - 4 * d) + 1) /
                      p2(d),
                  tag);
  if (w == k - p2(s + 2 * d - 1) || w == k + p2(s + 2 * d - 1))
    return finish((p2(s - d) - 1) * w * (w - 1) / (p2(4 * d) * (p2(d) + 1) * (p2(2 * d) - 1)), tag);
  not_listed(spec.name(), i);
}

}  // namespace design_forge
