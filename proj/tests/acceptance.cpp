// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Expected values are written out here rather than taken from golden.cpp.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "design_forge/designs.hpp"
#include "design_forge/error.hpp"
#include "design_forge/invariance.hpp"
#include "design_forge/parallel.hpp"
#include "design_forge/polyops.hpp"
#include "design_forge/report.hpp"
#include "design_forge/spectrum.hpp"

using namespace design_forge;

namespace {

using Pairs = std::vector<std::pair<std::uint32_t, long long>>;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

WeightDistribution make_dist(std::uint32_t length, unsigned dim, const Pairs& rows) {
  WeightDistribution d(length, dim);
  for (auto [w, c] : rows) d.add(w, c);
  return d;
}

struct Golden {
  std::string name;
  CodeSpec spec;
  WeightDistribution dist;
  std::uint32_t min_distance;
};

std::vector<Golden> golden_enumerators() {
  return {
      {"c1 s=3", CodeSpec::c1(3),
       make_dist(64, 19, {{0, 1}, {16, 252}, {24, 37632}, {28, 107520}, {32, 233478}, {36, 107520}, {40, 37632},
                          {48, 252}, {64, 1}}),
       16},
      {"c1 s=4", CodeSpec::c1(4),
       make_dist(256, 25, {{0, 1}, {96, 17136}, {112, 2437120}, {120, 6754304}, {128, 15137310}, {136, 6754304},
                           {144, 2437120}, {160, 17136}, {256, 1}}),
       96},
      {"c1 m=4", CodeSpec::c1(2),
       make_dist(16, 11, {{0, 1}, {4, 140}, {6, 448}, {8, 870}, {10, 448}, {12, 140}, {16, 1}}), 4},
      {"c2 s=2 l=1", CodeSpec::c2(2, 1),
       make_dist(16, 11, {{0, 1}, {4, 140}, {6, 448}, {8, 870}, {10, 448}, {12, 140}, {16, 1}}), 4},
      {"c2 s=3 l=2", CodeSpec::c2(3, 2),
       make_dist(64, 16, {{0, 1}, {24, 5040}, {28, 12544}, {32, 30366}, {36, 12544}, {40, 5040}, {64, 1}}), 24},
      {"c2 s=3 l=1", CodeSpec::c2(3, 1),
       make_dist(64, 16, {{0, 1}, {16, 84}, {24, 3360}, {28, 17920}, {32, 22806}, {36, 17920}, {40, 3360}, {48, 84},
                          {64, 1}}),
       16},
  };
}

unsigned worker_count() { return resolve_threads(std::nullopt); }

Outcome golden(std::ostringstream& log) {
  Outcome o;
  for (const Golden& g : golden_enumerators()) {
    const auto start = std::chrono::steady_clock::now();
    const WeightDistribution d = weight_distribution(g.spec, make_field(g.spec.m()), worker_count());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = d == g.dist && d.min_distance() == g.min_distance;
    log << "    " << g.name << ": [" << d.length() << "," << d.dimension() << "," << d.min_distance().value_or(0)
        << "] " << (ok ? "match" : "MISMATCH") << " in " << secs << " s\n";
    if (!ok) o.fail(g.name + " enumerator differs");
  }
  return o;
}

Outcome closed_forms(std::ostringstream& log) {
  Outcome o;
  auto guarded = [&](const std::string& what, const std::function<bool()>& fn) {
    try {
      if (!fn()) o.fail(what + " differs");
    } catch (const Error& e) {
      o.fail(what + ": " + e.what());
      log << "    " << what << ": " << e.what() << '\n';
    }
  };
  for (int s : {3, 4})
    guarded("c1 s=" + std::to_string(s), [&] {
      return closed_form_c1(s) == weight_distribution(CodeSpec::c1(s), make_field(2 * s), worker_count());
    });
  for (auto [s, l] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}})
    guarded("c2 s=" + std::to_string(s) + " l=" + std::to_string(l), [&, s = s, l = l] {
      return closed_form_c2_extended(s, l) ==
             weight_distribution(CodeSpec::c2(s, l), make_field(2 * s), worker_count());
    });
  int pairs = 0;
  for (int s = 2; s <= 6; ++s)
    for (int l = 1; l < 2 * s; ++l) {
      if (l == s) continue;
      ++pairs;
      guarded("extension at s=" + std::to_string(s) + " l=" + std::to_string(l),
              [&] { return extend_distribution(closed_form_c2_cyclic(s, l)) == closed_form_c2_extended(s, l); });
    }
  log << "    7 enumerations, " << pairs << " cyclic-to-extended identities\n";
  return o;
}

Outcome designs(std::ostringstream& log) {
  Outcome o;
  struct Case {
    std::string name;
    CodeSpec spec;
    int t;
    Pairs pairs;
  };
  const std::vector<Case> cases{
      {"c1 s=3", CodeSpec::c1(3), 2,
       {{16, 15}, {24, 5152}, {28, 20160}, {32, 57443}, {36, 33600}, {40, 14560}, {48, 141}}},
      {"c2 s=2 l=1", CodeSpec::c2(2, 1), 2, {{4, 7}, {6, 56}, {8, 203}, {10, 168}, {12, 77}}},
      {"c2 s=3 l=2", CodeSpec::c2(3, 2), 2, {{24, 690}, {28, 2352}, {32, 7471}, {36, 3920}, {40, 1950}}},
      {"c2 s=3 l=1", CodeSpec::c2(3, 1), 2,
       {{16, 5}, {24, 460}, {28, 3360}, {32, 5611}, {36, 5600}, {40, 1300}, {48, 47}}},
      {"c1 m=4", CodeSpec::c1(2), 3, {{4, 1}, {6, 16}, {8, 87}, {10, 96}, {12, 55}}},
  };
  const auto start = std::chrono::steady_clock::now();
  int checked = 0;
  for (const Case& c : cases) {
    const FieldSpec field = make_field(c.spec.m());
    for (auto [k, lambda] : c.pairs) {
      const auto blocks = collect_blocks(c.spec, field, k);
      const DesignReport r = verify_t_design(blocks, c.spec.length(), c.t);
      ++checked;
      if (!r.verified || r.lambda != BigInt(lambda))
        o.fail(c.name + " weight " + std::to_string(k) + ": expected lambda " + std::to_string(lambda) + ", got " +
               (r.lambda ? r.lambda->str() : std::string("no design")));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  log << "    " << checked << " weight classes verified by brute force in " << secs << " s\n";
  if (secs > 30.0) o.fail("took " + std::to_string(secs) + " s");
  return o;
}

Outcome invariance(std::ostringstream& log) {
  Outcome o;
  int closures = 0;
  for (int s = 2; s <= 8; ++s) {
    ++closures;
    if (!closure_check(defining_set_of_family(CodeSpec::c1(s)), 2 * s).closed)
      o.fail("c1 s=" + std::to_string(s) + " not closed");
  }
  for (int s = 2; s <= 6; ++s)
    for (int l = 1; l < 2 * s; ++l) {
      if (l == s) continue;
      ++closures;
      if (!closure_check(defining_set_of_family(CodeSpec::c2(s, l)), 2 * s).closed)
        o.fail("c2 s=" + std::to_string(s) + " l=" + std::to_string(l) + " not closed");
    }
  int orbits = 0;
  for (const CodeSpec& spec :
       {CodeSpec::c1(2), CodeSpec::c1(3), CodeSpec::c2(2, 1), CodeSpec::c2(3, 1), CodeSpec::c2(3, 2)}) {
    ++orbits;
    if (!affine_orbit_check(spec, make_field(spec.m()), worker_count())) o.fail(spec.name() + " orbit check failed");
  }
  const std::vector<std::uint32_t> negative{0, 7, 11, 13, 14};
  const ClosureResult r = closure_check(negative, 4);
  const bool witness_ok = !r.closed && r.witness && r.witness->first == 7 && r.witness->second == 3;
  if (!witness_ok) o.fail("negative case did not give witness (7, 3)");
  log << "    " << closures << " closure checks, " << orbits << " orbit checks, negative witness "
      << (r.witness ? "(" + std::to_string(r.witness->first) + ", " + std::to_string(r.witness->second) + ")"
                    : std::string("none"))
      << '\n';
  return o;
}

Outcome pless(std::ostringstream& log) {
  Outcome o;
  const std::map<int, std::pair<std::uint32_t, unsigned>> shape{{3, {63, 18}}, {4, {255, 24}}};
  for (auto [s, nk] : shape) {
    const WeightDistribution d = cyclic_weight_distribution(CodeSpec::c1(s), make_field(2 * s), worker_count());
    if (d.length() != nk.first || d.dimension() != nk.second) o.fail("unexpected cyclic code shape");
    const PlessReport good = pless_verify(d, nk.first, nk.second);
    if (!good.holds) o.fail("moment " + std::to_string(good.first_failure) + " fails at s=" + std::to_string(s));
    WeightDistribution bumped = d;
    bumped.add(d.min_distance().value_or(1), 1);
    const PlessReport bad = pless_verify(bumped, nk.first, nk.second);
    if (bad.holds) o.fail("perturbation not detected at s=" + std::to_string(s));
    log << "    s=" << s << ": identities " << (good.holds ? "hold" : "FAIL") << ", perturbed copy fails at identity "
        << bad.first_failure << '\n';
  }
  return o;
}

Outcome sums(std::ostringstream& log) {
  Outcome o;
  auto check_tuple = [&](const FieldSpec& f, FieldElement a, FieldElement b, FieldElement c) {
    const std::int64_t sum = exp_sum(a, b, c, f);
    if (!(a.is_zero() && b.is_zero())) {
      const int r = quadform_rank(a, b, f).rank;
      const int m = f.m();
      if (r != m && r != m - 2 && r != m - 4) o.fail("rank " + std::to_string(r) + " at m=" + std::to_string(m));
      const std::int64_t mag = std::int64_t{1} << (m - r / 2);
      if (sum != 0 && sum != mag && sum != -mag) o.fail("sum " + std::to_string(sum) + " off the value set");
    }
    const auto w = build_cyclic_codeword_c1(a, b, c, f).weight();
    if (static_cast<std::int64_t>(w) != weight_from_sum(sum, f.s())) o.fail("weight disagrees with the sum");
  };
  std::uint64_t tuples = 0;
  for (int m : {4, 6}) {
    const FieldSpec f = make_field(m);
    for (std::uint32_t a = 0; a < f.q(); ++a)
      for (std::uint32_t b = 0; b < f.q(); ++b)
        for (std::uint32_t c = 0; c < f.q(); ++c, ++tuples) check_tuple(f, {a}, {b}, {c});
  }
  const FieldSpec f8 = make_field(8);
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::uint32_t> pick(0, 255);
  const int samples = 20000;
  for (int i = 0; i < samples; ++i) check_tuple(f8, {pick(rng)}, {pick(rng)}, {pick(rng)});
  log << "    " << tuples << " exhaustive tuples (m=4,6), " << samples << " random tuples (m=8)\n";
  return o;
}

Outcome determinism(std::ostringstream& log) {
  Outcome o;
  const std::vector<CodeSpec> specs{CodeSpec::c1(3), CodeSpec::c2(3, 1), CodeSpec::c2(4, 1)};
  for (const CodeSpec& spec : specs) {
    const FieldSpec field = make_field(spec.m());
    std::string first;
    for (unsigned threads : {1U, 2U, 8U}) {
      DesignOptions opts;
      opts.threads = threads;
      nlohmann::json j{{"weights", to_json(weight_distribution(spec, field, threads))}};
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : full_design_report(spec, field, 2, opts)) rows.push_back(to_json(r));
      j["designs"] = rows;
      const std::string text = j.dump(2);
      if (first.empty()) first = text;
      if (text != first) o.fail(spec.name() + " differs at " + std::to_string(threads) + " workers");
    }
    log << "    " << spec.name() << ": " << first.size() << " bytes, identical at 1/2/8 workers\n";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<Outcome(std::ostringstream&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "golden enumerators", golden},
      {2, "closed forms agree with enumeration and extension", closed_forms},
      {3, "brute-force design verification", designs},
      {4, "affine invariance", invariance},
      {5, "power moments", pless},
      {6, "exponential sums, ranks and weights", sums},
      {7, "determinism across worker counts", determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::ostringstream log;
    Outcome o;
    try {
      o = c.run(log);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title;
    if (!o.pass) std::cout << " (" << o.detail << ")";
    std::cout << '\n' << log.str();
    failures += o.pass ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
