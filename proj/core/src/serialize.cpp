#include "skcert/serialize.hpp"

#include <sstream>

#include "skcert/random.hpp"

namespace skcert {

namespace {

constexpr const char* kSamplingNote =
    "m is uniform on [1, x]; each degree k uses n = m - k, which equals the Laguerre parameter alpha";

Json segment_to_json(const CycleWitness& w) {
  const LatticePoint end = w.segment.end();
  return Json{{"prime", w.prime},
              {"from", {w.segment.start.index, w.segment.start.height}},
              {"to", {end.index, end.height}},
              {"cycle_length", w.cycle_length},
              {"kind", w.kind == WitnessKind::Tame ? "tame" : "ramification"}};
}

Json config_to_json(const ExperimentConfig& c) {
  return Json{{"x_values", c.x_values},         {"k_min", c.k_min},
              {"k_max", c.k_max},               {"samples", c.samples},
              {"family", to_string(c.family)},  {"seed", c.seed},
              {"oracle_budget", c.oracle_budget}, {"oracle_fraction", c.oracle_fraction}};
}

}  // namespace

Json polygon_to_json(const NewtonPolygon& np, u64 prime) {
  Json vertices = Json::array();
  for (const LatticePoint& v : np.vertices()) vertices.push_back({v.index, v.height});
  Json slopes = Json::array();
  for (const Rational& s : slope_sequence(np).slopes) slopes.push_back(s.str());
  return Json{{"degree", np.degree()}, {"prime", prime}, {"vertices", vertices}, {"slopes", slopes}};
}

Json certificate_to_json(const Certificate& cert) {
  Json j{{"family", to_string(cert.instance.family())},
         {"n", cert.instance.n()},
         {"m", cert.instance.m()},
         {"k", cert.instance.degree()},
         {"conclusion", to_string(cert.conclusion)}};
  j["witness_a"] = nullptr;
  if (cert.witness_a) {
    j["witness_a"] = Json{{"p", cert.witness_a->p}, {"segment", segment_to_json(cert.witness_a->cycle)}};
  }
  j["witness_b"] = nullptr;
  if (cert.witness_b) {
    const WitnessB& b = *cert.witness_b;
    j["witness_b"] = Json{{"p", b.p}, {"shift", b.shift}, {"segment", segment_to_json(b.cycle)}};
  }
  j["witness_c"] = nullptr;
  if (cert.witness_c) {
    const WitnessC& c = *cert.witness_c;
    j["witness_c"] = Json{{"route", c.route == CRoute::Delta ? "delta" : "gamma"},
                          {"p", c.p},
                          {"q", c.q},
                          {"j1", c.j1},
                          {"j2", c.j2},
                          {"segment", segment_to_json(c.cycle)}};
  }
  j["small_k"] = nullptr;
  if (cert.small_k) {
    Json arr = Json::array();
    for (const SmallKWitness& w : *cert.small_k) arr.push_back({w.shift, w.q});
    j["small_k"] = arr;
  }
  j["deduction"] = cert.deduction;
  return j;
}

Json verdict_to_json(const OracleVerdict& verdict) {
  Json evidence = Json::array();
  for (const FrobeniusSample& s : verdict.evidence) {
    evidence.push_back(Json{{"r", s.r}, {"squarefree", s.squarefree}, {"cycle_type", s.cycle_type}});
  }
  Json found{{"k_cycle", verdict.found.k_cycle}, {"odd_type", verdict.found.odd_type}, {"jordan_p", nullptr}};
  if (verdict.found.jordan_p) found["jordan_p"] = *verdict.found.jordan_p;
  return Json{{"confirmed_sk", verdict.confirmed_sk},
              {"small_k_confirmed", verdict.small_k_confirmed},
              {"primes_tried", verdict.primes_tried},
              {"found", found},
              {"evidence", evidence},
              {"seed", verdict.seed}};
}

Json psi_to_json(const SmoothCount& count) {
  return Json{{"x", count.x}, {"k", count.k}, {"psi", count.count}, {"bound", psi_bound(count.x, count.k)}};
}

Json report_to_json(const ExperimentReport& report) {
  Json cells = Json::array();
  for (const CellCounts& c : report.cells) {
    cells.push_back(Json{{"x", c.x},
                         {"k", c.k},
                         {"family", to_string(c.family)},
                         {"n_samples", c.samples},
                         {"n_sk", c.n_sk},
                         {"n_alt", c.n_alt},
                         {"n_irr", c.n_irr},
                         {"n_inc", c.n_inc},
                         {"oracle_checked", c.oracle_checked},
                         {"oracle_confirmed", c.oracle_confirmed},
                         {"contradictions", c.contradictions}});
  }
  Json all = Json::array();
  for (const ForAllCounts& a : report.for_all) {
    all.push_back(Json{{"x", a.x}, {"family", to_string(a.family)}, {"n_samples", a.samples}, {"success", a.success}});
  }
  return Json{{"header", {{"rng", kRngName}, {"seed", report.config.seed}, {"sampling_note", kSamplingNote}}},
              {"config", config_to_json(report.config)},
              {"cells", cells},
              {"for_all", all},
              {"totals",
               {{"oracle_checked", report.oracle_checked},
                {"oracle_confirmed", report.oracle_confirmed},
                {"contradictions", report.contradictions}}}};
}

ExperimentReport report_from_json(const Json& j) {
  ExperimentReport r;
  const Json& c = j.at("config");
  r.config.x_values = c.at("x_values").get<std::vector<u64>>();
  r.config.k_min = c.at("k_min").get<u64>();
  r.config.k_max = c.at("k_max").get<u64>();
  r.config.samples = c.at("samples").get<u64>();
  r.config.family = parse_family_choice(c.at("family").get<std::string>());
  r.config.seed = c.at("seed").get<u64>();
  r.config.oracle_budget = c.at("oracle_budget").get<u64>();
  r.config.oracle_fraction = c.at("oracle_fraction").get<double>();
  for (const Json& e : j.at("cells")) {
    CellCounts cell;
    cell.x = e.at("x").get<u64>();
    cell.k = e.at("k").get<u64>();
    cell.family = parse_family(e.at("family").get<std::string>());
    cell.samples = e.at("n_samples").get<u64>();
    cell.n_sk = e.at("n_sk").get<u64>();
    cell.n_alt = e.at("n_alt").get<u64>();
    cell.n_irr = e.at("n_irr").get<u64>();
    cell.n_inc = e.at("n_inc").get<u64>();
    cell.oracle_checked = e.at("oracle_checked").get<u64>();
    cell.oracle_confirmed = e.at("oracle_confirmed").get<u64>();
    cell.contradictions = e.at("contradictions").get<u64>();
    r.cells.push_back(cell);
  }
  for (const Json& e : j.at("for_all")) {
    r.for_all.push_back(ForAllCounts{e.at("x").get<u64>(), parse_family(e.at("family").get<std::string>()),
                                     e.at("n_samples").get<u64>(), e.at("success").get<u64>()});
  }
  const Json& t = j.at("totals");
  r.oracle_checked = t.at("oracle_checked").get<u64>();
  r.oracle_confirmed = t.at("oracle_confirmed").get<u64>();
  r.contradictions = t.at("contradictions").get<u64>();
  return r;
}

std::string report_to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "# rng=" << kRngName << " seed=" << report.config.seed << "\n";
  out << "# " << kSamplingNote << "\n";
  out << "x,k,family,n_samples,n_sk,n_alt,n_irr,n_inc,oracle_checked,oracle_confirmed\n";
  for (const CellCounts& c : report.cells) {
    out << c.x << ',' << c.k << ',' << to_string(c.family) << ',' << c.samples << ',' << c.n_sk << ',' << c.n_alt
        << ',' << c.n_irr << ',' << c.n_inc << ',' << c.oracle_checked << ',' << c.oracle_confirmed << "\n";
  }
  return out.str();
}

Json smooth_report_to_json(const SmoothExperimentReport& report) {
  Json rows = Json::array();
  for (const SmoothExperimentRow& r : report.rows) {
    rows.push_back(Json{{"x", r.x},
                        {"k", r.k},
                        {"t", r.t},
                        {"samples", r.samples},
                        {"hits", r.hits},
                        {"probability", r.probability()},
                        {"deficit", r.deficit()},
                        {"predictor", r.predictor()}});
  }
  return Json{{"header", {{"rng", kRngName}, {"seed", report.seed}}}, {"rows", rows}};
}

Json agreement_to_json(const AgreementReport& report) {
  Json records = Json::array();
  for (const AgreementRecord& r : report.records) {
    records.push_back(Json{{"family", to_string(r.family)},
                           {"n", r.n},
                           {"m", r.m},
                           {"k", r.k},
                           {"conclusion", to_string(r.conclusion)},
                           {"oracle_run", r.oracle_run},
                           {"oracle_confirmed", r.oracle_confirmed},
                           {"primes_tried", r.primes_tried},
                           {"consistent", r.consistent}});
  }
  const AgreementConfig& c = report.config;
  return Json{{"header", {{"rng", kRngName}, {"seed", c.seed}}},
              {"config",
               {{"m_min", c.m_min},
                {"m_max", c.m_max},
                {"k_values", c.k_values},
                {"samples_per_k", c.samples_per_k},
                {"family", to_string(c.family)},
                {"oracle_budget", c.oracle_budget},
                {"oracle_all", c.oracle_all}}},
              {"records", records},
              {"totals",
               {{"certified", report.certified},
                {"certified_confirmed", report.certified_confirmed},
                {"contradictions", report.contradictions}}}};
}

}  // namespace skcert
