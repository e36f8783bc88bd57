#include <doctest.h>

#include <random>

#include "design_forge/error.hpp"
#include "design_forge/report.hpp"
#include "design_forge/spectrum.hpp"
#include "oracles.hpp"

using namespace design_forge;

namespace {

WeightDistribution dist_of(std::uint32_t length, unsigned dim, std::initializer_list<std::pair<std::uint32_t, long long>> rows) {
  WeightDistribution d(length, dim);
  for (auto [w, c] : rows) d.add(w, c);
  return d;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidParameters;
}

bool palindromic(const WeightDistribution& d) {
  for (const auto& [w, c] : d.entries())
    if (d.count(d.length() - w) != c) return false;
  return true;
}

}  // namespace

TEST_CASE("enumerated distributions") {
  const FieldSpec f6 = make_field(6);
  CHECK(weight_distribution(CodeSpec::c1(3), f6) ==
        dist_of(64, 19, {{0, 1}, {16, 252}, {24, 37632}, {28, 107520}, {32, 233478}, {36, 107520}, {40, 37632},
                         {48, 252}, {64, 1}}));
  CHECK(weight_distribution(CodeSpec::c2(3, 2), f6) ==
        dist_of(64, 16, {{0, 1}, {24, 5040}, {28, 12544}, {32, 30366}, {36, 12544}, {40, 5040}, {64, 1}}));
  CHECK(weight_distribution(CodeSpec::c2(3, 1), f6) ==
        dist_of(64, 16, {{0, 1}, {16, 84}, {24, 3360}, {28, 17920}, {32, 22806}, {36, 17920}, {40, 3360}, {48, 84},
                         {64, 1}}));
  CHECK(kind_of([] { weight_distribution(CodeSpec::c1(5), make_field(10)); }) == ErrorKind::TooLarge);
}

TEST_CASE("enumeration is independent of the worker count") {
  const FieldSpec f = make_field(8);
  const auto base = weight_distribution(CodeSpec::c2(4, 3), f, 1);
  for (unsigned threads : {2U, 3U, 8U}) CHECK(weight_distribution(CodeSpec::c2(4, 3), f, threads) == base);
  CHECK(base.is_consistent());
  CHECK(palindromic(base));
}

TEST_CASE("closed form rows") {
  const auto c1 = closed_form_c1(3);
  CHECK(c1.count(32) == 233478);
  CHECK(c1.count(16) == 252);
  CHECK(closed_form_c1(4).count(96) == 17136);
  CHECK(kind_of([] { closed_form_c1(2); }) == ErrorKind::InapplicableParameters);
  CHECK(closed_form_c2_extended(3, 2).count(32) == 30366);
  CHECK(closed_form_c2_extended(3, 1).count(16) == 84);
  CHECK(closed_form_c2_extended(2, 1).count(8) == 870);
  CHECK(closed_form_c2_cyclic(3, 1).total() == pow2(15));
  CHECK(closed_form_c2_cyclic(3, 2).is_consistent());

  for (int s = 3; s <= 10; ++s) {
    const auto d = closed_form_c1(s);
    CHECK(d.total() == pow2(6 * s + 1));
    CHECK(d.is_consistent());
    CHECK(palindromic(d));
  }
}

TEST_CASE("closed forms agree with enumeration") {
  for (int s : {3, 4}) CHECK(closed_form_c1(s) == weight_distribution(CodeSpec::c1(s), make_field(2 * s), 2));
  for (auto [s, l] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}})
    CHECK(closed_form_c2_extended(s, l) == weight_distribution(CodeSpec::c2(s, l), make_field(2 * s), 2));
  for (auto [s, l] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}})
    CHECK(closed_form_c2_cyclic(s, l) == cyclic_weight_distribution(CodeSpec::c2(s, l), make_field(2 * s), 2));
}

TEST_CASE("extension of cyclic closed forms") {
  for (int s = 2; s <= 6; ++s)
    for (int l = 1; l < 2 * s; ++l) {
      if (l == s) continue;
      CAPTURE(s);
      CAPTURE(l);
      const auto ext = closed_form_c2_extended(s, l);
      CHECK(extend_distribution(closed_form_c2_cyclic(s, l)) == ext);
      CHECK(ext.total() == pow2(5 * s + 1));
      CHECK(palindromic(ext));
    }
}

TEST_CASE("extend_distribution") {
  CHECK(extend_distribution(dist_of(63, 0, {{0, 1}})) == dist_of(64, 1, {{0, 1}, {64, 1}}));
  const FieldSpec f = make_field(6);
  CHECK(extend_distribution(cyclic_weight_distribution(CodeSpec::c1(3), f)) == weight_distribution(CodeSpec::c1(3), f));
  CHECK(kind_of([] { extend_distribution(dist_of(63, 1, {{0, 2}})); }) == ErrorKind::WeightCollision);
  CHECK(kind_of([] { extend_distribution(dist_of(63, 1, {{0, 1}, {64, 1}})); }) == ErrorKind::WeightCollision);
  CHECK(kind_of([] { extend_distribution(dist_of(63, 1, {{0, 1}, {31, 1}})); }) == ErrorKind::WeightCollision);
}

TEST_CASE("exponential sums") {
  const FieldSpec f = make_field(4);
  const oracle::Field o{4, 0x13};
  CHECK(exp_sum({}, {}, {}, f) == 16);
  for (std::uint32_t c = 1; c < 16; ++c) CHECK(exp_sum({}, {}, {c}, f) == 0);
  CHECK(exp_sum(FieldSpec::one(), {}, {}, f) == oracle::exp_sum(o, 1, 0, 0));
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b)
      for (std::uint32_t c = 0; c < 16; ++c) REQUIRE(exp_sum({a}, {b}, {c}, f) == oracle::exp_sum(o, a, b, c));
}

TEST_CASE("quadratic form ranks") {
  const FieldSpec f8 = make_field(8);
  const auto p = quadform_rank(FieldSpec::one(), {}, f8);
  CHECK(p.kernel_size == 16);
  CHECK(p.rank == 4);
  const FieldSpec f6 = make_field(6);
  const auto r = quadform_rank({}, FieldSpec::one(), f6);
  CHECK(r.kernel_size == 4);
  CHECK(r.rank == 4);
  CHECK(kind_of([&] { quadform_rank({}, {}, f6); }) == ErrorKind::ZeroForm);

  for (int m : {4, 6}) {
    const FieldSpec g = make_field(m);
    const oracle::Field o{m, static_cast<std::uint32_t>(g.primitive_poly().low_bits())};
    for (std::uint32_t a = 0; a < g.q(); ++a)
      for (std::uint32_t b = 0; b < g.q(); ++b) {
        if ((a | b) == 0) continue;
        std::uint32_t roots = 0;
        for (std::uint32_t x = 0; x < g.q(); ++x) {
          const std::uint32_t v = o.mul(o.pow(a, 4), o.pow(x, 16)) ^ o.mul(o.pow(b, 4), o.pow(x, 8)) ^
                                  o.mul(o.mul(b, b), o.mul(x, x)) ^ o.mul(a, x);
          roots += v == 0 ? 1 : 0;
        }
        const auto q = quadform_rank({a}, {b}, g);
        REQUIRE(q.kernel_size == roots);
        CHECK(q.kernel_size == (1U << (m - q.rank)));
        CHECK((q.rank == m || q.rank == m - 2 || q.rank == m - 4));
      }
  }
}

TEST_CASE("sum values and weights over every tuple at m = 4 and 6") {
  for (int m : {4, 6}) {
    const FieldSpec g = make_field(m);
    const int s = m / 2;
    for (std::uint32_t a = 0; a < g.q(); ++a)
      for (std::uint32_t b = 0; b < g.q(); ++b) {
        const bool zero_form = (a | b) == 0;
        const int r = zero_form ? 0 : quadform_rank({a}, {b}, g).rank;
        const std::int64_t mag = zero_form ? 0 : std::int64_t{1} << (m - r / 2);
        for (std::uint32_t c = 0; c < g.q(); ++c) {
          const std::int64_t sum = exp_sum({a}, {b}, {c}, g);
          if (!zero_form) REQUIRE((sum == 0 || sum == mag || sum == -mag));
          const auto word = build_cyclic_codeword_c1({a}, {b}, {c}, g);
          REQUIRE(static_cast<std::int64_t>(word.weight()) == weight_from_sum(sum, s));
        }
      }
  }
}

TEST_CASE("sum values on random tuples at m = 8") {
  const FieldSpec g = make_field(8);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> pick(0, 255);
  for (int i = 0; i < 2000; ++i) {
    const FieldElement a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
    if ((a.bits | b.bits) == 0) continue;
    const int r = quadform_rank(a, b, g).rank;
    const std::int64_t mag = std::int64_t{1} << (8 - r / 2);
    const std::int64_t sum = exp_sum(a, b, c, g);
    CHECK((sum == 0 || sum == mag || sum == -mag));
    CHECK(static_cast<std::int64_t>(build_cyclic_codeword_c1(a, b, c, g).weight()) == weight_from_sum(sum, 4));
  }
}

TEST_CASE("weight_from_sum") {
  CHECK(weight_from_sum(0, 3) == 32);
  CHECK(weight_from_sum(64, 3) == 0);
  CHECK(weight_from_sum(16, 3) == 24);
  CHECK(kind_of([] { weight_from_sum(3, 3); }) == ErrorKind::OddSum);
}

TEST_CASE("power moments") {
  // The whole space F_2^n has a zero dual, so every moment identity holds.
  for (std::uint32_t n : {7U, 10U, 20U}) {
    WeightDistribution full(n, n);
    for (std::uint32_t w = 0; w <= n; ++w) full.add(w, binomial(n, w));
    CHECK(pless_verify(full, n, n).holds);
  }
  const FieldSpec f6 = make_field(6);
  const auto cyc = cyclic_weight_distribution(CodeSpec::c1(3), f6);
  CHECK(cyc.length() == 63);
  CHECK(cyc.dimension() == 18);
  CHECK(pless_verify(cyc, 63, 18).holds);
  WeightDistribution bumped = cyc;
  bumped.add(16, 1);
  const auto bad = pless_verify(bumped, 63, 18);
  CHECK_FALSE(bad.holds);
  CHECK(bad.first_failure == 1);
  const auto cyc8 = cyclic_weight_distribution(CodeSpec::c1(4), make_field(8), 2);
  CHECK(pless_verify(cyc8, 255, 24).holds);
  // The m = 4 cyclic code: its dual is still a BCH code of designed distance 7.
  CHECK(pless_verify(cyclic_weight_distribution(CodeSpec::c1(2), make_field(4)), 15, 10).holds);
}

TEST_CASE("distribution json round trip") {
  const auto d = closed_form_c1(6);
  const auto j = to_json(d);
  CHECK(j["weights"][0]["count"].is_string());
  CHECK(distribution_from_json(j) == d);
  CHECK(distribution_csv(dist_of(4, 1, {{0, 1}, {4, 1}})) == "w,count\n0,1\n4,1\n");
}
