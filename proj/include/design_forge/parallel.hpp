#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "design_forge/codebuild.hpp"

namespace design_forge {

/// Explicit count if given and nonzero, else DESIGN_FORGE_THREADS, else the
/// hardware concurrency (at least 1).
unsigned resolve_threads(std::optional<unsigned> requested);

/// Runs body(range, acc) over `threads` disjoint ranges of [0, total), each
/// with its own accumulator from make(), then folds them left to right with
/// merge(into, from). With an associative, commutative merge the result does
/// not depend on the thread count.
template <class MakeAcc, class Body, class Merge>
auto parallel_accumulate(std::uint64_t total, unsigned threads, MakeAcc make, Body body, Merge merge) {
  using Acc = decltype(make());
  const std::vector<IndexRange> ranges = partition_range(total, threads == 0 ? 1 : threads);
  std::vector<Acc> accs;
  accs.reserve(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) accs.push_back(make());
  if (ranges.size() == 1) {
    body(ranges[0], accs[0]);
  } else {
    std::vector<std::exception_ptr> errors(ranges.size());
    std::vector<std::thread> workers;
    workers.reserve(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i)
      workers.emplace_back([&, i] {
        try {
          body(ranges[i], accs[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    for (auto& w : workers) w.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  Acc out = std::move(accs[0]);
  for (std::size_t i = 1; i < accs.size(); ++i) merge(out, accs[i]);
  return out;
}

}  // namespace design_forge
