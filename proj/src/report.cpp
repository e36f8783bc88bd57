#include "design_forge/report.hpp"

#include <sstream>

#include "design_forge/error.hpp"

namespace design_forge {

using nlohmann::json;

namespace {

json optional_big(const std::optional<BigInt>& v) { return v ? json(v->str()) : json(nullptr); }

std::string optional_csv(const std::optional<BigInt>& v) { return v ? v->str() : ""; }

}  // namespace

json to_json(const WeightDistribution& dist) {
  json weights = json::array();
  for (const auto& [w, c] : dist.entries()) weights.push_back({{"w", w}, {"count", c.str()}});
  return {{"length", dist.length()}, {"dimension", dist.dimension()}, {"weights", weights}};
}

WeightDistribution distribution_from_json(const json& j) {
  try {
    WeightDistribution dist(j.at("length").get<std::uint32_t>(), j.at("dimension").get<unsigned>());
    for (const auto& entry : j.at("weights")) dist.add(entry.at("w").get<std::uint32_t>(), BigInt(entry.at("count").get<std::string>()));
    return dist;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidParameters, std::string("malformed distribution JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw Error(ErrorKind::InvalidParameters, std::string("malformed count: ") + e.what());
  }
}

json to_json(const CodeSpec& spec) {
  json j{{"family", spec.family() == Family::C1 ? "c1" : "c2"}, {"s", spec.s()}, {"m", spec.m()}, {"length", spec.length()}};
  if (spec.family() == Family::C2) {
    j["l"] = spec.l();
    j["requested_l"] = spec.requested_l();
    j["d"] = spec.d();
    j["dprime"] = spec.dprime();
  }
  return j;
}

json to_json(const FieldSpec& field) {
  return {{"m", field.m()},
          {"s", field.s()},
          {"q", field.q()},
          {"n", field.n()},
          {"poly", field.primitive_poly().to_hex()},
          {"poly_terms", field.primitive_poly().to_string()},
          {"alpha_order", FieldSpec::order_of_x(field.primitive_poly()).value_or(0)}};
}

json to_json(const DesignReport& r) {
  json j{{"t", r.t},
         {"v", r.v},
         {"k", r.k},
         {"b", r.b.str()},
         {"lambda", optional_big(r.lambda)},
         {"verified", r.verified},
         {"trivial", r.trivial},
         {"theorem_lambda", optional_big(r.theorem_lambda)},
         {"match", r.match ? json(*r.match) : json(nullptr)},
         {"skipped", r.skipped}};
  if (!r.note.empty()) j["note"] = r.note;
  if (r.witness)
    j["witness"] = {{"first", r.witness->first},
                    {"first_count", r.witness->first_count},
                    {"second", r.witness->second},
                    {"second_count", r.witness->second_count}};
  return j;
}

json to_json(const ClosureResult& closure) {
  json j{{"closure", closure.closed}, {"witness", nullptr}};
  if (closure.witness) j["witness"] = {closure.witness->first, closure.witness->second};
  return j;
}

std::string distribution_csv(const WeightDistribution& dist) {
  std::ostringstream out;
  out << "w,count\n";
  for (const auto& [w, c] : dist.entries()) out << w << ',' << c << '\n';
  return out.str();
}

std::string design_reports_csv(std::span<const DesignReport> reports) {
  std::ostringstream out;
  out << "t,v,k,b,lambda,verified,theorem_lambda,match,skipped\n";
  for (const DesignReport& r : reports)
    out << r.t << ',' << r.v << ',' << r.k << ',' << r.b << ',' << optional_csv(r.lambda) << ','
        << (r.verified ? "true" : "false") << ',' << optional_csv(r.theorem_lambda) << ','
        << (r.match ? (*r.match ? "true" : "false") : "") << ',' << (r.skipped ? "true" : "false") << '\n';
  return out.str();
}

std::string blocks_csv(std::span<const std::vector<std::uint32_t>> blocks) {
  std::ostringstream out;
  for (const auto& block : blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace design_forge
