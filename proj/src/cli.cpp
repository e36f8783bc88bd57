#include "design_forge/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "design_forge/designs.hpp"
#include "design_forge/error.hpp"
#include "design_forge/golden.hpp"
#include "design_forge/invariance.hpp"
#include "design_forge/parallel.hpp"
#include "design_forge/polyops.hpp"
#include "design_forge/report.hpp"
#include "design_forge/spectrum.hpp"

namespace design_forge {

namespace {

using nlohmann::json;

enum class Command { Field, Weights, Designs, Invariance, Reproduce, Blocks };

struct RunConfig {
  Command command = Command::Field;
  std::string family = "c1";
  int s = 0;
  std::optional<int> l;
  int m = 0;
  std::optional<std::string> poly;
  int t = 2;
  std::string format = "json";
  bool exhaustive = false;
  bool closed_form = false;
  bool cyclic = false;
  bool all = false;
  std::vector<std::string> examples;
  std::uint32_t weight = 0;
  unsigned threads = 0;
};

struct Context {
  RunConfig cfg;
  unsigned threads = 1;
  std::ostream& out;
};

CodeSpec make_spec(const RunConfig& cfg) {
  if (cfg.family == "c1") {
    if (cfg.l) throw Error(ErrorKind::InvalidParameters, "--l applies to family c2 only");
    return CodeSpec::c1(cfg.s);
  }
  if (!cfg.l) throw Error(ErrorKind::InvalidParameters, "family c2 needs --l");
  return CodeSpec::c2(cfg.s, *cfg.l);
}

FieldSpec make_code_field(const RunConfig& cfg, const CodeSpec& spec) {
  std::optional<BinaryPolynomial> poly;
  if (cfg.poly) poly = BinaryPolynomial::from_hex(*cfg.poly);
  return make_field(spec.m(), poly);
}

void emit(Context& ctx, const json& j) { ctx.out << j.dump(2) << '\n'; }

int cmd_field(Context& ctx) {
  std::optional<BinaryPolynomial> poly;
  if (ctx.cfg.poly) poly = BinaryPolynomial::from_hex(*ctx.cfg.poly);
  const FieldSpec field = make_field(ctx.cfg.m, poly);
  if (ctx.cfg.format == "csv") {
    ctx.out << "m,q,n,poly\n" << field.m() << ',' << field.q() << ',' << field.n() << ',' << field.primitive_poly().to_hex()
            << '\n';
  } else {
    emit(ctx, to_json(field));
  }
  return kExitOk;
}

int cmd_weights(Context& ctx) {
  const CodeSpec spec = make_spec(ctx.cfg);
  const FieldSpec field = make_code_field(ctx.cfg, spec);
  std::optional<WeightDistribution> closed;
  if (ctx.cfg.closed_form)
    closed = spec.family() == Family::C1 ? closed_form_c1(spec.s()) : closed_form_c2_extended(spec.s(), spec.l());
  const auto basis = generator_basis(spec, field);
  if (basis.size() > kMaxEnumerationDimension)
    throw Error(ErrorKind::TooLarge, spec.name() + " has dimension " + std::to_string(basis.size()));

  const WeightDistribution dist = weight_distribution(spec, field, ctx.threads);
  bool ok = true;
  json j{{"code", to_json(spec)}, {"poly", field.primitive_poly().to_hex()}, {"distribution", to_json(dist)}};
  j["min_distance"] = dist.min_distance().value_or(0);
  if (closed) {
    j["closed_form"] = to_json(*closed);
    j["match"] = (*closed == dist);
    ok = ok && (*closed == dist);
  }
  if (ctx.cfg.cyclic) {
    const WeightDistribution cyc = cyclic_weight_distribution(spec, field, ctx.threads);
    json c{{"distribution", to_json(cyc)}};
    if (spec.family() == Family::C1) {
      const PlessReport pless = pless_verify(cyc, cyc.length(), cyc.dimension());
      c["pless"] = {{"holds", pless.holds}, {"first_failure", pless.first_failure}};
      ok = ok && pless.holds;
    } else {
      const WeightDistribution cf = closed_form_c2_cyclic(spec.s(), spec.l());
      c["closed_form"] = to_json(cf);
      c["match"] = (cf == cyc);
      ok = ok && (cf == cyc);
    }
    j["cyclic"] = c;
  }
  if (ctx.cfg.format == "csv") {
    ctx.out << distribution_csv(dist);
  } else {
    emit(ctx, j);
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_designs(Context& ctx, std::ostream& err) {
  const CodeSpec spec = make_spec(ctx.cfg);
  const FieldSpec field = make_code_field(ctx.cfg, spec);
  if (ctx.cfg.t != 2 && ctx.cfg.t != 3) throw Error(ErrorKind::InvalidParameters, "--t must be 2 or 3");
  DesignOptions options;
  options.threads = ctx.threads;
  options.exhaustive = ctx.cfg.exhaustive;
  const auto reports = full_design_report(spec, field, ctx.cfg.t, options);
  for (const auto& r : reports)
    if (r.skipped) err << "notice: weight " << r.k << " skipped (" << r.note << ")\n";
  const bool ok = all_verified_and_matched(reports);
  if (ctx.cfg.format == "csv") {
    ctx.out << design_reports_csv(reports);
  } else {
    json rows = json::array();
    for (const auto& r : reports) rows.push_back(to_json(r));
    emit(ctx, {{"code", to_json(spec)}, {"t", ctx.cfg.t}, {"reports", rows}, {"all_verified", ok}});
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_invariance(Context& ctx) {
  const CodeSpec spec = make_spec(ctx.cfg);
  const FieldSpec field = make_code_field(ctx.cfg, spec);
  const auto defining = defining_set_of_family(spec);
  const ClosureResult closure = closure_check(defining, spec.m());
  const bool orbit_checked = spec.m() <= kMaxOrbitCheckM;
  std::optional<bool> orbit;
  if (orbit_checked) orbit = affine_orbit_check(spec, field, ctx.threads);
  const bool ok = closure.closed && orbit.value_or(true);
  if (ctx.cfg.format == "csv") {
    ctx.out << "closure,witness_e,witness_r,orbit_checked,orbit\n"
            << (closure.closed ? "true" : "false") << ','
            << (closure.witness ? std::to_string(closure.witness->first) : "") << ','
            << (closure.witness ? std::to_string(closure.witness->second) : "") << ','
            << (orbit_checked ? "true" : "false") << ',' << (orbit ? (*orbit ? "true" : "false") : "") << '\n';
  } else {
    json j = to_json(closure);
    j["code"] = to_json(spec);
    j["defining_set"] = defining;
    j["dual_invariant"] = dual_invariance_note(spec);
    j["orbit_checked"] = orbit_checked;
    j["orbit"] = orbit ? json(*orbit) : json(nullptr);
    emit(ctx, j);
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_reproduce(Context& ctx) {
  const auto& all = golden_examples();
  std::vector<const GoldenExample*> selected;
  if (ctx.cfg.all || ctx.cfg.examples.empty()) {
    for (const auto& g : all) selected.push_back(&g);
  } else {
    for (const auto& id : ctx.cfg.examples) {
      const auto it = std::find_if(all.begin(), all.end(), [&](const GoldenExample& g) { return g.id == id; });
      if (it == all.end()) throw Error(ErrorKind::InvalidParameters, "unknown example '" + id + "'");
      selected.push_back(&*it);
    }
  }

  json rows = json::array();
  std::ostringstream csv;
  csv << "example,code,length,dimension,min_distance,enumerator_match,designs_match\n";
  int matched = 0;
  for (const GoldenExample* g : selected) {
    const FieldSpec field = make_field(g->spec.m());
    const WeightDistribution dist = weight_distribution(g->spec, field, ctx.threads);
    WeightDistribution expected(g->length, g->dimension);
    for (const auto& [w, c] : g->enumerator) expected.add(w, c);
    const bool enumerator_match = dist == expected && dist.min_distance() == g->min_distance;

    bool designs_match = true;
    json lambdas = json::array();
    if (g->t != 0) {
      DesignOptions options;
      options.threads = ctx.threads;
      const auto reports = full_design_report(g->spec, field, g->t, options);
      for (const auto& [k, lambda] : g->lambdas) {
        const auto it = std::find_if(reports.begin(), reports.end(), [k = k](const DesignReport& r) { return r.k == k; });
        const bool hit = it != reports.end() && it->verified && it->lambda == BigInt(lambda);
        designs_match = designs_match && hit;
        lambdas.push_back({{"k", k},
                           {"expected", std::to_string(lambda)},
                           {"lambda", it != reports.end() && it->lambda ? json(it->lambda->str()) : json(nullptr)},
                           {"match", hit}});
      }
    }
    const bool ok = enumerator_match && designs_match;
    matched += ok ? 1 : 0;
    rows.push_back({{"example", g->id},
                    {"code", to_json(g->spec)},
                    {"parameters", {g->length, g->dimension, dist.min_distance().value_or(0)}},
                    {"distribution", to_json(dist)},
                    {"enumerator_match", enumerator_match},
                    {"t", g->t},
                    {"lambdas", lambdas},
                    {"designs_match", designs_match},
                    {"match", ok}});
    csv << g->id << ',' << g->spec.name() << ',' << g->length << ',' << dist.dimension() << ','
        << dist.min_distance().value_or(0) << ',' << (enumerator_match ? "true" : "false") << ','
        << (designs_match ? "true" : "false") << '\n';
  }

  // Power moments of the cyclic C1 codes, whose duals have minimum distance >= 7.
  json pless_rows = json::array();
  bool pless_ok = true;
  if (ctx.cfg.all || ctx.cfg.examples.empty()) {
    for (int s : {3, 4}) {
      const CodeSpec spec = CodeSpec::c1(s);
      const FieldSpec field = make_field(spec.m());
      const WeightDistribution cyc = cyclic_weight_distribution(spec, field, ctx.threads);
      const PlessReport pless = pless_verify(cyc, cyc.length(), cyc.dimension());
      pless_ok = pless_ok && pless.holds;
      pless_rows.push_back({{"code", to_json(spec)}, {"n", cyc.length()}, {"k", cyc.dimension()}, {"holds", pless.holds}});
      csv << "pless-s" << s << ',' << spec.name() << "-cyclic," << cyc.length() << ',' << cyc.dimension() << ','
          << cyc.min_distance().value_or(0) << ',' << (pless.holds ? "true" : "false") << ",\n";
    }
  }

  const bool ok = matched == static_cast<int>(selected.size()) && pless_ok;
  if (ctx.cfg.format == "csv") {
    ctx.out << csv.str();
  } else {
    emit(ctx, {{"examples", rows},
               {"matched", matched},
               {"total", selected.size()},
               {"pless", pless_rows},
               {"all_matched", ok}});
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_blocks(Context& ctx) {
  const CodeSpec spec = make_spec(ctx.cfg);
  const FieldSpec field = make_code_field(ctx.cfg, spec);
  blocks_of_weight(spec, field, ctx.cfg.weight, [&](std::span<const std::uint32_t> block) {
    for (std::size_t i = 0; i < block.size(); ++i) ctx.out << (i ? " " : "") << block[i];
    ctx.out << '\n';
  });
  return kExitOk;
}

void add_code_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--family", cfg.family, "Code family")->check(CLI::IsMember({"c1", "c2"}))->required();
  sub->add_option("--s", cfg.s, "Half the extension degree (m = 2s)")->required();
  sub->add_option("--l", cfg.l, "Kasami exponent parameter (c2 only)");
  sub->add_option("--poly", cfg.poly, "Primitive polynomial as hex, LSB = constant term");
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--threads", cfg.threads, "Worker threads (default: DESIGN_FORGE_THREADS or all cores)");
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Weight distributions, affine invariance and t-designs of two families of extended binary cyclic codes",
               "design_forge"};
  app.require_subcommand(1);

  auto* field = app.add_subcommand("field", "Describe GF(2^m) and its primitive polynomial");
  field->add_option("--m", cfg.m, "Extension degree (even, 4..16)")->required();
  field->add_option("--poly", cfg.poly, "Primitive polynomial as hex, LSB = constant term");
  add_common_options(field, cfg);
  field->callback([&] { cfg.command = Command::Field; });

  auto* weights = app.add_subcommand("weights", "Enumerate the weight distribution");
  add_code_options(weights, cfg);
  add_common_options(weights, cfg);
  weights->add_flag("--closed-form", cfg.closed_form, "Compare against the closed-form table");
  weights->add_flag("--cyclic", cfg.cyclic, "Also enumerate the length-n cyclic relative");
  weights->callback([&] { cfg.command = Command::Weights; });

  auto* designs = app.add_subcommand("designs", "Verify the t-designs held by each weight class");
  add_code_options(designs, cfg);
  add_common_options(designs, cfg);
  designs->add_option("--t", cfg.t, "Design strength (2 or 3)");
  designs->add_flag("--exhaustive", cfg.exhaustive, "Check every class regardless of cost");
  designs->callback([&] { cfg.command = Command::Designs; });

  auto* invariance = app.add_subcommand("invariance", "Check affine invariance");
  add_code_options(invariance, cfg);
  add_common_options(invariance, cfg);
  invariance->callback([&] { cfg.command = Command::Invariance; });

  auto* reproduce = app.add_subcommand("reproduce", "Run the golden example suite");
  add_common_options(reproduce, cfg);
  reproduce->add_flag("--all", cfg.all, "Every example plus the power-moment checks");
  reproduce->add_option("--example", cfg.examples, "Reference instance id (3.3 .. 3.8); repeatable");
  reproduce->callback([&] { cfg.command = Command::Reproduce; });

  auto* blocks = app.add_subcommand("blocks", "Export the supports of one weight class, one block per line");
  add_code_options(blocks, cfg);
  blocks->add_option("--weight", cfg.weight, "Codeword weight")->required();
  blocks->add_option("--threads", cfg.threads, "Ignored; export is sequential");
  blocks->callback([&] { cfg.command = Command::Blocks; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadParams;
  }

  Context ctx{cfg, resolve_threads(cfg.threads == 0 ? std::nullopt : std::optional<unsigned>(cfg.threads)), out};
  try {
    switch (cfg.command) {
      case Command::Field: return cmd_field(ctx);
      case Command::Weights: return cmd_weights(ctx);
      case Command::Designs: return cmd_designs(ctx, err);
      case Command::Invariance: return cmd_invariance(ctx);
      case Command::Reproduce: return cmd_reproduce(ctx);
      case Command::Blocks: return cmd_blocks(ctx);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_parameter_error(e.kind()) ? kExitBadParams : kExitMismatch;
  }
  return kExitBadParams;
}

}  // namespace design_forge
