#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "design_forge/bigint.hpp"
#include "design_forge/codebuild.hpp"
#include "design_forge/gf2m.hpp"

namespace design_forge {

/// Two t-subsets covered by different numbers of blocks.
struct DesignWitness {
  std::vector<std::uint32_t> first;
  std::uint64_t first_count = 0;
  std::vector<std::uint32_t> second;
  std::uint64_t second_count = 0;
};

struct DesignReport {
  int t = 2;
  std::uint32_t v = 0;
  std::uint32_t k = 0;
  BigInt b = 0;
  /// Present when verified.
  std::optional<BigInt> lambda;
  bool verified = false;
  bool trivial = false;
  /// Class left unchecked by the work budget.
  bool skipped = false;
  std::optional<BigInt> theorem_lambda;
  std::optional<bool> match;
  std::optional<DesignWitness> witness;
  std::string note;
};

/// Counts, for every t-subset of {0..v-1} (t = 2 or 3), how many blocks
/// contain it. Counters live in a flat array indexed by the colex rank of the
/// subset. Blocks are buffered 64 at a time as per-point bit columns, and each
/// flush adds popcount(col_p & col_q [& col_r]) to every subset's counter.
class IncidenceCounter {
 public:
  IncidenceCounter(std::uint32_t v, int t);

  void add_block(std::span<const std::uint32_t> points);
  /// Block given as a packed characteristic vector of length v.
  void add_block_bits(std::span<const std::uint64_t> words);
  /// Sums other's counters into this one (both are flushed first).
  void merge(IncidenceCounter& other);
  void flush();

  std::uint32_t v() const { return v_; }
  int t() const { return t_; }
  std::uint64_t blocks() const { return blocks_; }
  /// Flushes pending blocks.
  const std::vector<std::uint64_t>& counts();

  static std::uint64_t rank(std::span<const std::uint32_t> sorted_subset);
  static std::vector<std::uint32_t> unrank(std::uint64_t rank, int t);

 private:
  void set_point(std::uint32_t p) { cols_[p] |= std::uint64_t{1} << pending_; }
  void end_block();

  std::uint32_t v_;
  int t_;
  std::uint64_t blocks_ = 0;
  unsigned pending_ = 0;
  std::vector<std::uint64_t> cols_;
  std::vector<std::uint64_t> counts_;
};

/// lambda = b C(k,t) / C(v,t); throws NonIntegerLambda if inexact.
BigInt lambda_from_identity(const BigInt& b, std::uint64_t k, std::uint64_t v, int t);

/// Verdict for a counter that has seen b blocks of size k. Checks
/// sum(counts) = b C(k,t) and constancy; fills lambda or a witness.
DesignReport evaluate_incidence(IncidenceCounter& counter, std::uint32_t k);

/// Brute-force t-design check of an explicit block list. Throws
/// EmptyWeightClass for no blocks, TrivialDesign when k is t or v,
/// InvalidParameters for mixed block sizes or t outside {2, 3}.
DesignReport verify_t_design(std::span<const std::vector<std::uint32_t>> blocks, std::uint32_t v, int t);

/// Streams the supports of the weight-i codewords; throws EmptyWeightClass
/// when there are none.
void blocks_of_weight(const CodeSpec& spec, const FieldSpec& field, std::uint32_t i,
                      const std::function<void(std::span<const std::uint32_t>)>& visit);
std::vector<std::vector<std::uint32_t>> collect_blocks(const CodeSpec& spec, const FieldSpec& field, std::uint32_t i);

/// Closed-form 2-design lambdas for the nontrivial weights of each family.
/// InapplicableParameters for weights outside the list (or C1 with s < 3).
BigInt theorem_lambda_c1(int s, std::uint32_t i);
BigInt theorem_lambda_c2(int s, int l, std::uint32_t i);

struct DesignOptions {
  unsigned threads = 1;
  /// Ignore the work budget.
  bool exhaustive = false;
  /// Classes with b * C(k, t) above this are skipped unless exhaustive.
  std::uint64_t increment_budget = 1000000000;
};

/// One report per nontrivial weight class (0 < k < v, k != t), ascending k,
/// each cross-checked against the closed-form lambda when t = 2.
std::vector<DesignReport> full_design_report(const CodeSpec& spec, const FieldSpec& field, int t,
                                             const DesignOptions& options = {});

/// Every non-skipped report verified, and matched wherever a closed form exists.
bool all_verified_and_matched(std::span<const DesignReport> reports);

}  // namespace design_forge
