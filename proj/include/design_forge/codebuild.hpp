#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "design_forge/gf2m.hpp"

namespace design_forge {

enum class Family { C1, C2 };

/// Parameters of one extended code. C1 is the trace code of x^5, x^3, x;
/// C2 the generalized-Kasami trace code of x^(2^s+1) (subfield coefficient),
/// x^(2^l+1) and x.
class CodeSpec {
 public:
  static CodeSpec c1(int s);
  /// l and m - l describe the same code; l() reports min(l, m - l).
  static CodeSpec c2(int s, int l);

  Family family() const { return family_; }
  int s() const { return s_; }
  int m() const { return 2 * s_; }
  int l() const { return l_; }
  int requested_l() const { return requested_l_; }
  /// gcd(s, l) and gcd(s + l, 2l); zero for C1.
  int d() const { return d_; }
  int dprime() const { return dprime_; }
  std::uint32_t length() const { return std::uint32_t{1} << m(); }
  std::string name() const;

  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;

 private:
  Family family_ = Family::C1;
  int s_ = 0;
  int l_ = 0;
  int requested_l_ = 0;
  int d_ = 0;
  int dprime_ = 0;
};

/// Packed bit vector; coordinate i of an extended codeword belongs to
/// FieldSpec::element_by_index(i), of a cyclic one to alpha^i.
class Codeword {
 public:
  Codeword() = default;
  explicit Codeword(std::uint32_t length) : length_(length), words_((length + 63) / 64, 0) {}
  static Codeword all_ones(std::uint32_t length);

  std::uint32_t length() const { return length_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<const std::uint64_t> words() const { return words_; }

  bool bit(std::uint32_t i) const { return (words_[i / 64] >> (i % 64) & 1U) != 0; }
  void set(std::uint32_t i, bool value = true);
  void flip(std::uint32_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  unsigned weight() const;
  bool is_zero() const;
  /// Lowest set coordinate, or length() if zero.
  std::uint32_t leading_index() const;
  std::vector<std::uint32_t> support() const;

  Codeword& operator^=(const Codeword& other);
  friend Codeword operator^(Codeword a, const Codeword& b) { return a ^= b; }
  friend bool operator==(const Codeword&, const Codeword&) = default;
  friend auto operator<=>(const Codeword&, const Codeword&) = default;

 private:
  std::uint32_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

struct CoefficientTuple {
  FieldElement a;
  FieldElement b;
  FieldElement c;
  bool h = false;
};

/// (tr(a x^5 + b x^3 + c x) + h) over all x in coordinate order.
Codeword build_codeword_c1(const CoefficientTuple& t, const FieldSpec& field);
/// (tr_s(a x^(2^s+1)) + tr(b x^(2^l+1) + c x) + h); a must lie in the subfield.
Codeword build_codeword_c2(const CoefficientTuple& t, const CodeSpec& spec, const FieldSpec& field);
/// Length-n cyclic relatives: coordinate i evaluates the same forms at alpha^i, no h.
Codeword build_cyclic_codeword_c1(FieldElement a, FieldElement b, FieldElement c, const FieldSpec& field);
Codeword build_cyclic_codeword_c2(FieldElement a, FieldElement b, FieldElement c, const CodeSpec& spec,
                                  const FieldSpec& field);
/// Dispatches on spec.family().
Codeword build_codeword(const CoefficientTuple& t, const CodeSpec& spec, const FieldSpec& field);

/// Reduced row echelon form: each row's leading_index() is a pivot that no
/// other row touches; rows sorted by pivot. Zero rows are dropped.
std::vector<Codeword> row_reduce(std::vector<Codeword> rows);

/// Row-reduced basis of the extended code (coefficient basis images plus the
/// all-one word). Its size is the code dimension, computed, never assumed.
std::vector<Codeword> generator_basis(const CodeSpec& spec, const FieldSpec& field);
/// Same for the length-n cyclic relative.
std::vector<Codeword> cyclic_generator_basis(const CodeSpec& spec, const FieldSpec& field);

/// basis must come from row_reduce.
bool membership_test(const Codeword& w, std::span<const Codeword> basis);

/// Throws InvalidParameters unless the field matches spec.m().
void check_field_matches(const CodeSpec& spec, const FieldSpec& field);

struct IndexRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

/// Splits [0, total) into `parts` contiguous ranges (some may be empty).
std::vector<IndexRange> partition_range(std::uint64_t total, unsigned parts);

namespace detail {

template <std::size_t W, class Visitor>
void walk_codewords(const std::uint64_t* prefix, std::size_t words, std::uint64_t* cur, IndexRange range,
                    Visitor& visit) {
  const std::size_t nw = W != 0 ? W : words;
  std::uint64_t i = range.begin;
  for (;;) {
    unsigned weight = 0;
    for (std::size_t k = 0; k < nw; ++k) weight += static_cast<unsigned>(std::popcount(cur[k]));
    visit(i, std::span<const std::uint64_t>(cur, nw), weight);
    if (++i == range.end) break;
    const std::uint64_t* p = prefix + static_cast<std::size_t>(std::countr_zero(i)) * nw;
    for (std::size_t k = 0; k < nw; ++k) cur[k] ^= p[k];
  }
}

}  // namespace detail

/// Visits the codewords with coefficient index in `range`, where index i
/// selects the XOR of basis rows at the set bits of i. Consecutive indices
/// differ by one precomputed prefix XOR, so each step costs one row update.
/// visit(index, words, weight).
template <class Visitor>
void for_each_codeword(std::span<const Codeword> basis, IndexRange range, Visitor&& visit) {
  if (range.begin >= range.end || basis.empty()) return;
  const std::size_t words = basis.front().word_count();
  std::vector<std::uint64_t> prefix(basis.size() * words, 0);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t k = 0; k < words; ++k)
      prefix[j * words + k] = basis[j].words()[k] ^ (j > 0 ? prefix[(j - 1) * words + k] : 0);
  std::vector<std::uint64_t> cur(words, 0);
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (range.begin >> j & 1U)
      for (std::size_t k = 0; k < words; ++k) cur[k] ^= basis[j].words()[k];
  switch (words) {
    case 1: detail::walk_codewords<1>(prefix.data(), words, cur.data(), range, visit); break;
    case 4: detail::walk_codewords<4>(prefix.data(), words, cur.data(), range, visit); break;
    case 16: detail::walk_codewords<16>(prefix.data(), words, cur.data(), range, visit); break;
    default: detail::walk_codewords<0>(prefix.data(), words, cur.data(), range, visit); break;
  }
}

/// Sequential walk over all 2^dim codewords in coefficient-index order.
template <class Visitor>
void enumerate_code(const CodeSpec& spec, const FieldSpec& field, Visitor&& visit) {
  const std::vector<Codeword> basis = generator_basis(spec, field);
  for_each_codeword(basis, IndexRange{0, std::uint64_t{1} << basis.size()}, visit);
}

}  // namespace design_forge
