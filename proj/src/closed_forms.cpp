#include <string>
#include <vector>

#include "design_forge/error.hpp"
#include "design_forge/spectrum.hpp"
#include "exact.hpp"

namespace design_forge {

namespace {

using exact::p2;

struct Row {
  std::string label;
  std::int64_t weight_offset;  // weight = 2^(2s-1) + offset
  Rational count;
};

WeightDistribution assemble(int s, unsigned dimension, std::uint32_t length, bool extended,
                            const std::vector<Row>& rows, const std::string& table) {
  WeightDistribution dist(length, dimension);
  dist.add(0, 1);
  if (extended) dist.add(length, 1);
  const std::int64_t centre = std::int64_t{1} << (2 * s - 1);
  for (const Row& row : rows)
    dist.add(static_cast<std::uint32_t>(centre + row.weight_offset),
             exact::to_integer(row.count, ErrorKind::NonIntegerCount, table + " row " + row.label));
  return dist;
}

}  // namespace

WeightDistribution closed_form_c1(int s) {
  if (s < 3) throw Error(ErrorKind::InapplicableParameters, "the C1 closed form needs s >= 3, got s=" + std::to_string(s));
  const Rational middle = 29 * p2(6 * s - 5) - 33 * p2(4 * s - 5) + 17 * p2(2 * s - 3) - 2;
  const Rational near = Rational(2, 15) * p2(2 * s) * (3 * p2(4 * s) + 5 * p2(2 * s) - 8);
  const Rational mid = Rational(7, 3) * p2(4 * s - 4) * (p2(2 * s) - 1);
  const Rational far = Rational(1, 15) * p2(2 * s - 4) * (p2(4 * s - 2) - 5 * p2(2 * s - 2) + 1);
  const std::int64_t h = std::int64_t{1} << (s - 1);
  const std::vector<Row> rows{
      {"2^(2s-1)", 0, middle},
      {"2^(2s-1)-2^(s-1)", -h, near},
      {"2^(2s-1)+2^(s-1)", h, near},
      {"2^(2s-1)-2^s", -2 * h, mid},
      {"2^(2s-1)+2^s", 2 * h, mid},
      {"2^(2s-1)-2^(s+1)", -4 * h, far},
      {"2^(2s-1)+2^(s+1)", 4 * h, far},
  };
  return assemble(s, static_cast<unsigned>(6 * s + 1), std::uint32_t{1} << (2 * s), true, rows, "C1 extended");
}

WeightDistribution closed_form_c2_extended(int s, int l) {
  const CodeSpec spec = CodeSpec::c2(s, l);
  const int d = spec.d();
  const std::int64_t h = std::int64_t{1} << (s - 1);
  const std::int64_t hd = std::int64_t{1} << (s + d - 1);
  std::vector<Row> rows;
  if (spec.dprime() == d) {
    const Rational e = p2(2 * (s + d)) - p2(2 * s + d) - p2(2 * s) + p2(s + 2 * d) - p2(s + d) + p2(2 * d);
    const Rational near = p2(2 * s) * (p2(s) - 1) * e / (p2(2 * d) - 1);
    const Rational off = p2(2 * (s - d)) * (p2(s + d) - 1) * (p2(2 * s) - 1) / (p2(2 * d) - 1);
    rows = {
        {"2^(2s-1)-2^(s-1)", -h, near},
        {"2^(2s-1)+2^(s-1)", h, near},
        {"2^(2s-1)-2^(s+d-1)", -hd, off},
        {"2^(2s-1)+2^(s+d-1)", hd, off},
        {"2^(2s-1)", 0, 2 * (p2(3 * s - d) - p2(2 * (s - d)) + 1) * (p2(2 * s) - 1)},
    };
  } else {
    const std::int64_t h2d = std::int64_t{1} << (s + 2 * d - 1);
    const Rational e = p2(2 * s) - p2(2 * (s - d)) - p2(2 * s - 3 * d) + p2(s) - p2(s - d) + 1;
    const Rational near = p2(2 * s + 3 * d) * (p2(s) - 1) * e / ((p2(2 * d) - 1) * (p2(d) + 1));
    const Rational off = p2(2 * s - d) * (p2(2 * s) - 1) * (p2(s) + p2(s - d) + p2(s - 2 * d) + 1) /
                         ((p2(d) + 1) * (p2(d) + 1));
    const Rational centre = 2 * (p2(2 * s) - 1) *
                            (p2(3 * s - d) - p2(3 * s - 2 * d) + p2(3 * s - 3 * d) - p2(3 * s - 4 * d) +
                             p2(3 * s - 5 * d) + p2(2 * s - d) - p2(2 * s - 2 * d + 1) + p2(2 * s - 3 * d) -
                             p2(2 * s - 4 * d) + 1);
    const Rational far = p2(2 * s - 4 * d) * (p2(s - d) - 1) * (p2(2 * s) - 1) / ((p2(d) + 1) * (p2(2 * d) - 1));
    rows = {
        {"2^(2s-1)-2^(s-1)", -h, near},    {"2^(2s-1)+2^(s-1)", h, near},
        {"2^(2s-1)-2^(s+d-1)", -hd, off},  {"2^(2s-1)+2^(s+d-1)", hd, off},
        {"2^(2s-1)", 0, centre},           {"2^(2s-1)-2^(s+2d-1)", -h2d, far},
        {"2^(2s-1)+2^(s+2d-1)", h2d, far},
    };
  }
  return assemble(s, static_cast<unsigned>(5 * s + 1), std::uint32_t{1} << (2 * s), true, rows, "C2 extended");
}

WeightDistribution closed_form_c2_cyclic(int s, int l) {
  const CodeSpec spec = CodeSpec::c2(s, l);
  const int d = spec.d();
  const std::int64_t h = std::int64_t{1} << (s - 1);
  const std::int64_t hd = std::int64_t{1} << (s + d - 1);
  std::vector<Row> rows;
  if (spec.dprime() == d) {
    const Rational e = p2(2 * (s + d)) - p2(2 * s + d) - p2(2 * s) + p2(s + 2 * d) - p2(s + d) + p2(2 * d);
    rows = {
        {"2^(2s-1)-2^(s-1)", -h, p2(s - 1) * (p2(2 * s) - 1) * e / (p2(2 * d) - 1)},
        {"2^(2s-1)+2^(s-1)", h, p2(s - 1) * (p2(s) - 1) * (p2(s) - 1) * e / (p2(2 * d) - 1)},
        {"2^(2s-1)-2^(s+d-1)", -hd,
         p2(s - d - 1) * (p2(s + d) - 1) * (p2(2 * s) - 1) * (p2(s - d) + 1) / (p2(2 * d) - 1)},
        {"2^(2s-1)+2^(s+d-1)", hd,
         p2(s - d - 1) * (p2(s + d) - 1) * (p2(2 * s) - 1) * (p2(s - d) - 1) / (p2(2 * d) - 1)},
        {"2^(2s-1)", 0, (p2(3 * s - d) - p2(2 * (s - d)) + 1) * (p2(2 * s) - 1)},
    };
  } else {
    const std::int64_t h2d = std::int64_t{1} << (s + 2 * d - 1);
    const Rational e = p2(2 * s) - p2(2 * (s - d)) - p2(2 * s - 3 * d) + p2(s) - p2(s - d) + 1;
    const Rational den = (p2(2 * d) - 1) * (p2(d) + 1);
    const Rational kasami = p2(s) + p2(s - d) + p2(s - 2 * d) + 1;
    rows = {
        {"2^(2s-1)-2^(s-1)", -h, p2(s + 3 * d - 1) * (p2(2 * s) - 1) * e / den},
        // Leading power 2^(s+3d-1); 2^(2s+3d-1) overshoots the 2^(5s) total.
        {"2^(2s-1)+2^(s-1)", h, p2(s + 3 * d - 1) * (p2(s) - 1) * (p2(s) - 1) * e / den},
        {"2^(2s-1)-2^(s+d-1)", -hd, p2(s - 1) * (p2(2 * s) - 1) * kasami * (p2(s - d) + 1) / ((p2(d) + 1) * (p2(d) + 1))},
        {"2^(2s-1)+2^(s+d-1)", hd, p2(s - 1) * (p2(2 * s) - 1) * kasami * (p2(s - d) - 1) / ((p2(d) + 1) * (p2(d) + 1))},
        {"2^(2s-1)", 0,
         (p2(2 * s) - 1) * (p2(3 * s - d) - p2(3 * s - 2 * d) + p2(3 * s - 3 * d) - p2(3 * s - 4 * d) +
                            p2(3 * s - 5 * d) + p2(2 * s - d) - p2(2 * s - 2 * d + 1) + p2(2 * s - 3 * d) -
                            p2(2 * s - 4 * d) + 1)},
        {"2^(2s-1)-2^(s+2d-1)", -h2d,
         p2(s - 2 * d - 1) * (p2(s - d) - 1) * (p2(2 * s) - 1) * (p2(s - 2 * d) + 1) / ((p2(d) + 1) * (p2(2 * d) - 1))},
        {"2^(2s-1)+2^(s+2d-1)", h2d,
         p2(s - 2 * d - 1) * (p2(s - d) - 1) * (p2(2 * s) - 1) * (p2(s - 2 * d) - 1) / ((p2(d) + 1) * (p2(2 * d) - 1))},
    };
  }
  return assemble(s, static_cast<unsigned>(5 * s), (std::uint32_t{1} << (2 * s)) - 1, false, rows, "C2 cyclic");
}

}  // namespace design_forge
