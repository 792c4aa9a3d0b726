#include "symcent/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "symcent/coherent.hpp"
#include "symcent/error.hpp"

namespace symcent {

namespace {

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::string join(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

}  // namespace

AnalysisReport analyze(const CatalogEntry& entry, const AnalysisOptions& options) {
  const Field field = Field::prime(options.characteristic);
  const auto& g = entry.group;
  AnalysisReport rep;
  Stopwatch clock;
  rep.group_spec = entry.spec;
  rep.degree = g.degree();
  rep.characteristic = options.characteristic;
  rep.classification = classify_action(g);
  if (!rep.classification.transitive) throw PreconditionError("action is not transitive");
  rep.group_order = g.order();
  rep.timings_ms.emplace_back("perm", clock.lap());

  const auto cc = two_orbits(g);
  const auto tensor = intersection_tensor(cc);
  const auto axioms = verify_cc_axioms(cc, tensor, 3, options.seed);
  rep.checks.cc_axioms = axioms.pass();
  rep.checks.cc_failure = axioms.failure;
  if (!axioms.pass()) throw VerificationError("coherent configuration check failed: " + axioms.failure);
  rep.orbital_count = cc.rank();
  for (const auto& o : cc.orbitals) rep.valencies.push_back(o.valency);
  std::sort(rep.valencies.begin(), rep.valencies.end());
  if (rep.valencies != rep.classification.subdegrees) {
    throw VerificationError("orbital valencies disagree with subdegrees");
  }
  rep.timings_ms.emplace_back("coherent", clock.lap());

  const auto algebra = centralizer_algebra(cc, tensor, field);
  rep.algebra_dim = algebra.dim();
  const auto form = reflexive_form(algebra, cc);
  rep.gram_symmetric = form.symmetric;
  rep.gram_nondegenerate = form.nondegenerate;
  rep.valencies_invertible = std::all_of(rep.valencies.begin(), rep.valencies.end(),
                                       [&](std::size_t v) { return v % options.characteristic != 0; });
  const auto series = radical_chain(algebra);
  rep.radical_dims = series.dims;
  rep.structure = structure_report(algebra, series);
  rep.verdict = is_symmetric(algebra, form, options.seed, series);
  if (rep.verdict.witness && !is_witness(algebra, *rep.verdict.witness)) {
    throw VerificationError("returned witness is not a non-degenerate trace functional");
  }
  rep.timings_ms.emplace_back("endo", clock.lap());

  if (!entry.regular_normal_subgroup.empty()) {
    rep.schur = schur_vs_centralizer(g, entry.regular_normal_subgroup, field, 0, entry.namer);
    rep.timings_ms.emplace_back("schur", clock.lap());
  }

  if (options.oracle) {
    if (g.degree() <= kOracleDegreeCap) {
      rep.checks.oracle_dim = centralizer_oracle(g, field);
      if (*rep.checks.oracle_dim != rep.algebra_dim) {
        throw VerificationError("centralizer oracle dimension differs from orbital count");
      }
    }
    if (g.degree() <= 100) {
      const auto failure = verify_adjacency_products(cc, tensor);
      rep.checks.adjacency_products = failure.empty();
      if (!failure.empty()) throw VerificationError(failure);
    }
    rep.timings_ms.emplace_back("oracle", clock.lap());
  }
  return rep;
}

AnalysisReport analyze(const std::string& spec, const AnalysisOptions& options) {
  return analyze(build_from_spec(spec), options);
}

std::string to_json(const AnalysisReport& r, bool include_timings) {
  using nlohmann::json;
  json j;
  j["group_spec"] = r.group_spec;
  j["degree"] = r.degree;
  j["group_order"] = r.group_order;
  const auto& c = r.classification;
  j["classification"] = {
      {"transitive", c.transitive},
      {"orbit_sizes", c.orbit_sizes},
      {"subdegrees", c.subdegrees},
      {"rank", c.rank},
      {"half_transitive", c.half_transitive},
      {"three_halves_transitive", c.three_halves_transitive},
      {"primitive", c.primitive},
      {"faithful", c.faithful},
      {"regular", c.regular},
  };
  j["orbital_count"] = r.orbital_count;
  j["valencies"] = r.valencies;
  j["characteristic"] = r.characteristic;
  j["algebra_dim"] = r.algebra_dim;
  j["reflexive_form"] = {{"gram_symmetric", r.gram_symmetric},
                  {"gram_nondegenerate", r.gram_nondegenerate},
                  {"hypothesis", r.valencies_invertible}};
  j["radical_dims"] = r.radical_dims;
  j["structure"] = {{"top_dim", r.structure.top_dim},
                    {"left_socle_dim", r.structure.left_socle_dim},
                    {"right_socle_dim", r.structure.right_socle_dim},
                    {"is_local", r.structure.is_local},
                    {"commutative", r.structure.commutative}};
  json verdict = {{"status", to_string(r.verdict.status)},
                  {"path", r.verdict.path},
                  {"trace_space_dim", r.verdict.trace_space_dim},
                  {"notes", r.verdict.notes},
                  {"witness", nullptr},
                  {"certificate", nullptr}};
  if (r.verdict.witness) {
    std::vector<std::uint32_t> coords;
    for (auto x : r.verdict.witness->coords) coords.push_back(x.value);
    verdict["witness"] = coords;
  }
  if (r.verdict.certificate) {
    const auto& cert = *r.verdict.certificate;
    verdict["certificate"] = {{"exhausted_search", cert.exhausted_search},
                              {"functionals_searched", cert.functionals_searched},
                              {"local_socle_obstruction", cert.local_socle_obstruction},
                              {"top_dim", cert.top_dim},
                              {"left_socle_dim", cert.left_socle_dim},
                              {"right_socle_dim", cert.right_socle_dim}};
  }
  j["symmetric_verdict"] = verdict;
  if (r.schur) {
    j["schur"] = {{"pass", r.schur->pass()},
                  {"bijection", r.schur->bijection},
                  {"sizes_match", r.schur->sizes_match},
                  {"structure_constants_match", r.schur->structure_constants_match},
                  {"orbitals", r.schur->orbitals},
                  {"basic_sets", r.schur->basic_sets},
                  {"basic_set_sums", r.schur->basic_set_labels},
                  {"mismatch", r.schur->mismatch}};
  } else {
    j["schur"] = nullptr;
  }
  json checks = {{"cc_axioms", r.checks.cc_axioms}, {"adjacency_products", nullptr},
                 {"oracle_dim", nullptr}};
  if (r.checks.adjacency_products) checks["adjacency_products"] = *r.checks.adjacency_products;
  if (r.checks.oracle_dim) checks["oracle_dim"] = *r.checks.oracle_dim;
  j["checks"] = checks;
  if (include_timings) {
    json t = json::object();
    for (const auto& [stage, ms] : r.timings_ms) t[stage] = ms;
    j["timings_ms"] = t;
  }
  return j.dump(2) + "\n";
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  const auto& c = r.classification;
  os << "group            " << r.group_spec << "\n"
     << "degree           " << r.degree << "\n"
     << "order            " << r.group_order << "\n"
     << "subdegrees       " << join(c.subdegrees) << "\n"
     << "rank             " << r.orbital_count << "\n"
     << "3/2-transitive   " << (c.three_halves_transitive ? "yes" : "no") << "\n"
     << "primitive        " << (c.primitive ? "yes" : "no") << "\n"
     << "faithful         " << (c.faithful ? "yes" : "no") << "\n"
     << "characteristic   " << r.characteristic << "\n"
     << "algebra dim      " << r.algebra_dim << "\n"
     << "reflexive form   " << (r.gram_symmetric ? "symmetric" : "not symmetric") << ", "
     << (r.gram_nondegenerate ? "non-degenerate" : "degenerate") << "\n";
  os << "radical dims     [";
  for (std::size_t i = 0; i < r.radical_dims.size(); ++i) os << (i ? "," : "") << r.radical_dims[i];
  os << "]\n"
     << "top / socle      " << r.structure.top_dim << " / left " << r.structure.left_socle_dim
     << ", right " << r.structure.right_socle_dim << (r.structure.is_local ? " (local)" : "")
     << "\n"
     << "verdict          " << to_string(r.verdict.status) << " via " << r.verdict.path << "\n";
  if (r.verdict.witness) {
    os << "witness          [";
    const auto& w = r.verdict.witness->coords;
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i].value;
    os << "]\n";
  }
  if (r.verdict.certificate) {
    const auto& cert = *r.verdict.certificate;
    if (cert.exhausted_search) {
      os << "certificate      exhausted " << cert.functionals_searched << " functionals\n";
    }
    if (cert.local_socle_obstruction) {
      os << "certificate      local algebra, socle dim " << cert.right_socle_dim << " != 1\n";
    }
  }
  os << "notes            " << r.verdict.notes << "\n";
  if (r.schur) {
    os << "schur ring       " << (r.schur->pass() ? "matches" : "MISMATCH") << " ("
       << r.schur->basic_sets << " basic sets)\n";
    for (const auto& l : r.schur->basic_set_labels) os << "                 " << l << "\n";
  }
  os << "cc axioms        " << (r.checks.cc_axioms ? "pass" : "FAIL") << "\n";
  if (r.checks.oracle_dim) os << "oracle dim       " << *r.checks.oracle_dim << "\n";
  if (r.checks.adjacency_products) {
    os << "A_r A_s identity " << (*r.checks.adjacency_products ? "pass" : "FAIL") << "\n";
  }
  return os.str();
}

}  // namespace symcent
