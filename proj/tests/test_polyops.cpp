#include <doctest.h>

#include <numeric>

#include "design_forge/codebuild.hpp"
#include "design_forge/error.hpp"
#include "design_forge/polyops.hpp"
#include "oracles.hpp"

using namespace design_forge;

namespace {

BinaryPolynomial from_field_coeffs(const std::vector<std::uint32_t>& coeffs) {
  BinaryPolynomial p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    REQUIRE(coeffs[i] <= 1);
    p.set_coefficient(static_cast<unsigned>(i), coeffs[i] == 1);
  }
  return p;
}

}  // namespace

TEST_CASE("binary polynomial arithmetic") {
  const auto a = BinaryPolynomial::from_hex("0x13");
  CHECK(a.degree() == 4);
  CHECK(a.to_string() == "x^4 + x + 1");
  CHECK(BinaryPolynomial().degree() == -1);
  for (std::uint64_t x = 1; x < 200; x += 7)
    for (std::uint64_t y = 1; y < 300; y += 11) {
      const auto px = BinaryPolynomial::from_bits(x);
      const auto py = BinaryPolynomial::from_bits(y);
      CHECK((px * py).low_bits() == oracle::clmul(x, y));
      CHECK((px % py).low_bits() == oracle::poly_mod(x, y));
      CHECK((px / py) * py + px % py == px);
    }
  const auto big = BinaryPolynomial::monomial(100) + BinaryPolynomial::from_bits(1);
  CHECK(big.degree() == 100);
  CHECK((big * big).degree() == 200);
  CHECK_THROWS_AS(a % BinaryPolynomial(), Error);
}

TEST_CASE("cyclotomic cosets") {
  CHECK(cyclotomic_coset(0, 15).members == std::vector<std::uint32_t>{0});
  CHECK(cyclotomic_coset(5, 15).members == std::vector<std::uint32_t>{5, 10});
  CHECK(cyclotomic_coset(1, 63).members == std::vector<std::uint32_t>{1, 2, 4, 8, 16, 32});
  CHECK(cyclotomic_coset(12, 15).representative == 3);
  CHECK_THROWS_AS(cyclotomic_coset(15, 15), Error);
  for (std::uint32_t n : {15U, 63U, 255U, 1023U}) {
    const int m = std::bit_width(n);
    std::uint32_t covered = 0;
    for (std::uint32_t r : coset_representatives(n)) {
      const auto c = cyclotomic_coset(r, n);
      CHECK(c.members == oracle::doubling_orbit(r, n));
      CHECK(m % static_cast<int>(c.size()) == 0);
      covered += static_cast<std::uint32_t>(c.size());
    }
    CHECK(covered == n);
  }
}

TEST_CASE("minimal polynomials") {
  const FieldSpec f = make_field(4);
  CHECK(minimal_polynomial(0, f) == BinaryPolynomial::from_hex("0x3"));
  CHECK(minimal_polynomial(5, f) == BinaryPolynomial::from_hex("0x7"));
  CHECK(minimal_polynomial(3, f) == BinaryPolynomial::from_hex("0x1F"));

  for (int m : {4, 6, 8}) {
    const FieldSpec g = make_field(m);
    const oracle::Field o{m, static_cast<std::uint32_t>(g.primitive_poly().low_bits())};
    const auto xn1 = x_pow_n_minus_one(g.n());
    std::vector<BinaryPolynomial> all;
    int degree_sum = 0;
    for (std::uint32_t r : coset_representatives(g.n())) {
      std::vector<std::uint32_t> roots;
      for (std::uint32_t j : oracle::doubling_orbit(r, g.n())) roots.push_back(o.pow(2, j));
      const auto mp = minimal_polynomial(r, g);
      CHECK(mp == from_field_coeffs(oracle::expand_roots(o, roots)));
      CHECK(mp.degree() == static_cast<int>(roots.size()));
      CHECK((xn1 % mp).degree() == -1);
      for (const auto& other : all) CHECK(gcd(mp, other).degree() == 0);
      all.push_back(mp);
      degree_sum += mp.degree();
    }
    CHECK(degree_sum == static_cast<int>(g.n()));
  }
}

TEST_CASE("lcm and BCH generators") {
  const FieldSpec f = make_field(4);
  const auto m1 = minimal_polynomial(1, f);
  const auto m3 = minimal_polynomial(3, f);
  const auto m5 = minimal_polynomial(5, f);
  const std::vector<BinaryPolynomial> same{m3, m3};
  CHECK(poly_lcm(same) == m3);
  const std::vector<BinaryPolynomial> coprime{BinaryPolynomial::from_hex("0x3"), BinaryPolynomial::from_hex("0x2")};
  CHECK(poly_lcm(coprime) == BinaryPolynomial::from_hex("0x6"));
  const std::vector<BinaryPolynomial> three{m1, m3, m5};
  CHECK(poly_lcm(three) == m1 * m3 * m5);
  CHECK(poly_lcm(three).degree() == 10);
  CHECK_THROWS_AS(poly_lcm(std::vector<BinaryPolynomial>{}), Error);
  CHECK_THROWS_AS(poly_lcm(std::vector<BinaryPolynomial>{m1, BinaryPolynomial()}), Error);

  CHECK(bch_generator(2, f) == m1);
  CHECK(bch_generator(7, f) == m1 * m3 * m5);
  CHECK(bch_generator(7, make_field(6)).degree() == 18);
  CHECK_THROWS_AS(bch_generator(1, f), Error);
  CHECK_THROWS_AS(bch_generator(16, f), Error);

  for (int m : {4, 6}) {
    const FieldSpec g = make_field(m);
    const oracle::Field o{m, static_cast<std::uint32_t>(g.primitive_poly().low_bits())};
    for (std::uint32_t delta = 2; delta <= 9; ++delta) {
      const auto gen = bch_generator(delta, g);
      CHECK((x_pow_n_minus_one(g.n()) % gen).degree() == -1);
      for (std::uint32_t j = 1; j < delta; ++j) {
        // Evaluate gen at alpha^j with the oracle field.
        std::uint32_t acc = 0;
        const std::uint32_t root = o.pow(2, j);
        for (int i = gen.degree(); i >= 0; --i) acc = o.mul(acc, root) ^ (gen.coefficient(static_cast<unsigned>(i)) ? 1U : 0U);
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("defining sets of the families") {
  const auto t1 = defining_set_of_family(CodeSpec::c1(2));
  CHECK(t1 == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12});
  CHECK(defining_set_of_family(CodeSpec::c1(3)).size() == 19);
  CHECK(defining_set_of_family(CodeSpec::c2(2, 1)) == t1);
  CHECK(defining_set_of_family(CodeSpec::c2(3, 1)).size() == 16);
}
