#include "design_forge/codebuild.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "design_forge/error.hpp"

namespace design_forge {

namespace {

struct TraceTerm {
  std::uint32_t exponent;
  bool subfield_coefficient;
};

std::array<TraceTerm, 3> trace_terms(const CodeSpec& spec) {
  if (spec.family() == Family::C1) return {{{5, false}, {3, false}, {1, false}}};
  return {{{(std::uint32_t{1} << spec.s()) + 1, true}, {(std::uint32_t{1} << spec.requested_l()) + 1, false}, {1, false}}};
}

bool term_value(const TraceTerm& term, FieldElement coef, FieldElement x, const FieldSpec& field) {
  if (coef.is_zero() || x.is_zero()) return false;
  const FieldElement v = field.mul(coef, field.pow(x, term.exponent));
  return term.subfield_coefficient ? field.subfield_trace(v) : field.trace(v);
}

Codeword evaluate(const std::array<TraceTerm, 3>& terms, const std::array<FieldElement, 3>& coefs, bool h,
                  const FieldSpec& field, bool extended) {
  const std::uint32_t length = extended ? field.q() : field.n();
  Codeword w(length);
  for (std::uint32_t i = 0; i < length; ++i) {
    const FieldElement x = extended ? field.element_by_index(i) : field.alpha_pow(i);
    bool bit = h;
    for (std::size_t k = 0; k < terms.size(); ++k) bit ^= term_value(terms[k], coefs[k], x, field);
    w.set(i, bit);
  }
  return w;
}

// Images of an F2-basis of every coefficient slot.
std::vector<Codeword> spanning_rows(const CodeSpec& spec, const FieldSpec& field, bool extended) {
  check_field_matches(spec, field);
  const auto terms = trace_terms(spec);
  std::vector<Codeword> rows;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const int dim = terms[k].subfield_coefficient ? spec.s() : spec.m();
    // The order-2^s subfield is spanned by powers of alpha^(2^s+1).
    const FieldElement step = terms[k].subfield_coefficient ? field.alpha_pow((std::uint64_t{1} << spec.s()) + 1)
                                                            : field.alpha();
    FieldElement basis_element = FieldSpec::one();
    for (int j = 0; j < dim; ++j) {
      std::array<FieldElement, 3> coefs{};
      coefs[k] = basis_element;
      rows.push_back(evaluate(terms, coefs, false, field, extended));
      basis_element = field.mul(basis_element, step);
    }
  }
  if (extended) rows.push_back(Codeword::all_ones(field.q()));
  return rows;
}

}  // namespace

CodeSpec CodeSpec::c1(int s) {
  if (s < 2 || s > 8) throw Error(ErrorKind::InvalidParameters, "C1 needs 2 <= s <= 8, got s=" + std::to_string(s));
  CodeSpec spec;
  spec.family_ = Family::C1;
  spec.s_ = s;
  return spec;
}

CodeSpec CodeSpec::c2(int s, int l) {
  if (s < 2 || s > 8) throw Error(ErrorKind::InvalidParameters, "C2 needs 2 <= s <= 8, got s=" + std::to_string(s));
  const int m = 2 * s;
  if (l < 1 || l > m - 1 || l == s)
    throw Error(ErrorKind::InvalidParameters,
                "C2 needs 1 <= l <= m-1 and l != s, got s=" + std::to_string(s) + " l=" + std::to_string(l));
  CodeSpec spec;
  spec.family_ = Family::C2;
  spec.s_ = s;
  spec.requested_l_ = l;
  spec.l_ = std::min(l, m - l);
  spec.d_ = std::gcd(s, spec.l_);
  spec.dprime_ = std::gcd(s + spec.l_, 2 * spec.l_);
  if (spec.dprime_ != spec.d_ && spec.dprime_ != 2 * spec.d_)
    throw Error(ErrorKind::InvalidParameters, "gcd(s+l, 2l) must be d or 2d");
  return spec;
}

std::string CodeSpec::name() const {
  if (family_ == Family::C1) return "c1(s=" + std::to_string(s_) + ")";
  return "c2(s=" + std::to_string(s_) + ",l=" + std::to_string(l_) + ")";
}

Codeword Codeword::all_ones(std::uint32_t length) {
  Codeword w(length);
  for (auto& word : w.words_) word = ~std::uint64_t{0};
  if (length % 64 != 0) w.words_.back() = (std::uint64_t{1} << (length % 64)) - 1;
  return w;
}

void Codeword::set(std::uint32_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  words_[i / 64] = value ? (words_[i / 64] | mask) : (words_[i / 64] & ~mask);
}

unsigned Codeword::weight() const {
  unsigned w = 0;
  for (std::uint64_t word : words_) w += static_cast<unsigned>(std::popcount(word));
  return w;
}

bool Codeword::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::uint32_t Codeword::leading_index() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] != 0) return static_cast<std::uint32_t>(64 * k + std::countr_zero(words_[k]));
  return length_;
}

std::vector<std::uint32_t> Codeword::support() const {
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k)
    for (std::uint64_t word = words_[k]; word != 0; word &= word - 1)
      out.push_back(static_cast<std::uint32_t>(64 * k + std::countr_zero(word)));
  return out;
}

Codeword& Codeword::operator^=(const Codeword& other) {
  if (other.length_ != length_) throw Error(ErrorKind::LengthMismatch, "xor of codewords with different lengths");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

void check_field_matches(const CodeSpec& spec, const FieldSpec& field) {
  if (field.m() != spec.m())
    throw Error(ErrorKind::InvalidParameters,
                spec.name() + " needs m=" + std::to_string(spec.m()) + ", field has m=" + std::to_string(field.m()));
}

Codeword build_codeword_c1(const CoefficientTuple& t, const FieldSpec& field) {
  return evaluate(trace_terms(CodeSpec::c1(field.s())), {t.a, t.b, t.c}, t.h, field, true);
}

Codeword build_codeword_c2(const CoefficientTuple& t, const CodeSpec& spec, const FieldSpec& field) {
  check_field_matches(spec, field);
  if (!field.in_subfield(t.a))
    throw Error(ErrorKind::CoefficientNotInSubfield, "coefficient a must lie in the order-2^s subfield");
  return evaluate(trace_terms(spec), {t.a, t.b, t.c}, t.h, field, true);
}

Codeword build_cyclic_codeword_c1(FieldElement a, FieldElement b, FieldElement c, const FieldSpec& field) {
  return evaluate(trace_terms(CodeSpec::c1(field.s())), {a, b, c}, false, field, false);
}

Codeword build_cyclic_codeword_c2(FieldElement a, FieldElement b, FieldElement c, const CodeSpec& spec,
                                  const FieldSpec& field) {
  check_field_matches(spec, field);
  if (!field.in_subfield(a))
    throw Error(ErrorKind::CoefficientNotInSubfield, "coefficient a must lie in the order-2^s subfield");
  return evaluate(trace_terms(spec), {a, b, c}, false, field, false);
}

Codeword build_codeword(const CoefficientTuple& t, const CodeSpec& spec, const FieldSpec& field) {
  check_field_matches(spec, field);
  return spec.family() == Family::C1 ? build_codeword_c1(t, field) : build_codeword_c2(t, spec, field);
}

std::vector<Codeword> row_reduce(std::vector<Codeword> rows) {
  std::vector<Codeword> reduced;
  for (Codeword& row : rows) {
    for (const Codeword& r : reduced)
      if (row.bit(r.leading_index())) row ^= r;
    if (row.is_zero()) continue;
    const std::uint32_t pivot = row.leading_index();
    for (Codeword& r : reduced)
      if (r.bit(pivot)) r ^= row;
    reduced.push_back(std::move(row));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Codeword& x, const Codeword& y) { return x.leading_index() < y.leading_index(); });
  return reduced;
}

std::vector<Codeword> generator_basis(const CodeSpec& spec, const FieldSpec& field) {
  return row_reduce(spanning_rows(spec, field, true));
}

std::vector<Codeword> cyclic_generator_basis(const CodeSpec& spec, const FieldSpec& field) {
  return row_reduce(spanning_rows(spec, field, false));
}

bool membership_test(const Codeword& w, std::span<const Codeword> basis) {
  Codeword rest = w;
  for (const Codeword& row : basis) {
    if (row.length() != w.length()) throw Error(ErrorKind::LengthMismatch, "codeword and basis lengths differ");
    if (rest.bit(row.leading_index())) rest ^= row;
  }
  return rest.is_zero();
}

std::vector<IndexRange> partition_range(std::uint64_t total, unsigned parts) {
  if (parts == 0) parts = 1;
  std::vector<IndexRange> out;
  const std::uint64_t chunk = total / parts;
  const std::uint64_t extra = total % parts;
  std::uint64_t begin = 0;
  for (unsigned p = 0; p < parts; ++p) {
    const std::uint64_t size = chunk + (p < extra ? 1 : 0);
    out.push_back({begin, begin + size});
    begin += size;
  }
  return out;
}

}  // namespace design_forge
