#include "design_forge/gf2m.hpp"

#include <bit>
#include <string>

#include "design_forge/error.hpp"

namespace design_forge {

namespace {

// Multiply by x modulo poly, working on raw bit patterns (degree <= 16).
std::uint32_t times_x(std::uint32_t v, std::uint32_t poly_bits, int m) {
  v <<= 1;
  if (v >> m & 1U) v ^= poly_bits;
  return v;
}

}  // namespace

BinaryPolynomial default_primitive_poly(int m) {
  switch (m) {
    case 4: return BinaryPolynomial::from_exponents({4, 1, 0});
    case 6: return BinaryPolynomial::from_exponents({6, 1, 0});
    case 8: return BinaryPolynomial::from_exponents({8, 4, 3, 2, 0});
    case 10: return BinaryPolynomial::from_exponents({10, 3, 0});
    case 12: return BinaryPolynomial::from_exponents({12, 6, 4, 1, 0});
    case 14: return BinaryPolynomial::from_exponents({14, 10, 6, 1, 0});
    case 16: return BinaryPolynomial::from_exponents({16, 12, 3, 1, 0});
    default: throw Error(ErrorKind::UnsupportedM, "no built-in primitive polynomial for m=" + std::to_string(m));
  }
}

std::optional<std::uint32_t> FieldSpec::order_of_x(const BinaryPolynomial& poly) {
  const int m = poly.degree();
  if (m < 1 || m > 16 || !poly.coefficient(0)) return std::nullopt;
  const auto bits = static_cast<std::uint32_t>(poly.low_bits());
  const std::uint32_t limit = (std::uint32_t{1} << m) - 1;
  std::uint32_t v = 1;
  for (std::uint32_t k = 1; k <= limit; ++k) {
    v = times_x(v, bits, m);
    if (v == 1) return k;
  }
  return std::nullopt;
}

FieldSpec make_field(int m, std::optional<BinaryPolynomial> primitive_poly) {
  if (m < 4 || m > 16 || m % 2 != 0)
    throw Error(ErrorKind::UnsupportedM, "m must be even and in [4, 16], got " + std::to_string(m));
  BinaryPolynomial poly = primitive_poly ? *primitive_poly : default_primitive_poly(m);
  if (poly.degree() != m)
    throw Error(ErrorKind::NonPrimitivePolynomial,
                poly.to_hex() + " has degree " + std::to_string(poly.degree()) + ", expected " + std::to_string(m));
  const std::uint32_t n = (std::uint32_t{1} << m) - 1;
  const auto order = FieldSpec::order_of_x(poly);
  if (!order || *order != n)
    throw Error(ErrorKind::NonPrimitivePolynomial,
                poly.to_hex() + " is not primitive (root order " + (order ? std::to_string(*order) : "undefined") +
                    ", need " + std::to_string(n) + ")");

  auto t = std::make_shared<FieldSpec::Tables>();
  t->m = m;
  t->poly = poly;
  t->log.assign(std::size_t{n} + 1, 0);
  t->antilog.assign(2 * std::size_t{n}, 0);
  const auto bits = static_cast<std::uint32_t>(poly.low_bits());
  std::uint32_t v = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    t->antilog[i] = v;
    t->antilog[i + n] = v;
    t->log[v] = i;
    v = times_x(v, bits, m);
  }

  FieldSpec field;
  field.tables_ = t;
  // Trace is F2-linear, so it is determined by its values on the basis.
  std::uint32_t mask = 0;
  for (int j = 0; j < m; ++j) {
    FieldElement x{std::uint32_t{1} << j};
    FieldElement acc = x;
    for (int i = 1; i < m; ++i) {
      x = field.square(x);
      acc = acc + x;
    }
    if (acc.bits > 1) throw Error(ErrorKind::NonPrimitivePolynomial, "trace left F2; tables are inconsistent");
    if (acc.bits == 1) mask |= std::uint32_t{1} << j;
  }
  t->trace_mask = mask;
  return field;
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.is_zero()) return zero();
  return alpha_pow((static_cast<std::uint64_t>(log(a)) * (e % n())) % n());
}

FieldElement FieldSpec::inverse(FieldElement a) const {
  if (a.is_zero()) throw Error(ErrorKind::InvalidParameters, "zero has no inverse");
  return alpha_pow(n() - log(a));
}

bool FieldSpec::trace(FieldElement x) const {
  return (std::popcount(x.bits & tables_->trace_mask) & 1) != 0;
}

bool FieldSpec::in_subfield(FieldElement x) const {
  if (x.is_zero()) return true;
  // x^(2^s) = x  iff  log(x) is a multiple of 2^s + 1.
  return log(x) % ((std::uint32_t{1} << s()) + 1) == 0;
}

bool FieldSpec::subfield_trace(FieldElement x) const {
  if (!in_subfield(x)) throw Error(ErrorKind::NotInSubfield, "element is outside the order-2^s subfield");
  FieldElement acc = x;
  FieldElement y = x;
  for (int i = 1; i < s(); ++i) {
    y = square(y);
    acc = acc + y;
  }
  return acc.bits == 1;
}

FieldElement FieldSpec::element_by_index(std::uint32_t i) const {
  if (i > n()) throw Error(ErrorKind::IndexOutOfRange, "element index " + std::to_string(i) + " > " + std::to_string(n()));
  if (i == 0) return zero();
  return {tables_->antilog[i - 1]};
}

}  // namespace design_forge
