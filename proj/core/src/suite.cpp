#include "symcent/suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "symcent/analysis.hpp"
#include "symcent/coherent.hpp"
#include "symcent/error.hpp"

namespace symcent {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

const std::vector<std::uint32_t> kSmallPrimes = {2, 3, 5, 7, 11, 13};

struct Prepared {
  explicit Prepared(CatalogEntry e)
      : entry(std::move(e)),
        classification(classify_action(entry.group)),
        cc(two_orbits(entry.group)),
        tensor(intersection_tensor(cc)) {}

  CatalogEntry entry;
  ActionClassification classification;
  CoherentConfiguration cc;
  IntersectionTensor tensor;
};

CatalogEntry build_entry(const std::string& spec, bool corrupt) {
  if (spec == "S7pairs") {
    return CatalogEntry{spec, build_alt_on_pairs(7, true), {}, {}, "S_7 on 2-subsets"};
  }
  CatalogEntry e = build_from_spec(spec);
  if (!corrupt) return e;
  if (spec == "example3_2") {
    const auto ex = build_affine_counterexample();
    e.group = PermutationGroup(9, {ex.a, ex.b});
  } else if (spec == "altpairs:7") {
    e.group = build_symmetric(7);
  } else if (spec == "frobenius:7,3") {
    e.group = build_frobenius_affine(7, 6);
  }
  return e;
}

// Groups and their coherent configurations are shared between criteria; the
// large coset actions are costly to rebuild.
const Prepared& prepared(const std::string& spec, bool corrupt) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, bool>, std::unique_ptr<Prepared>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{spec, corrupt}];
  if (!slot) {
    slot = std::make_unique<Prepared>(build_entry(spec, corrupt));
  }
  return *slot;
}

class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}

  void expect(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) {
      r_.pass = false;
      r_.failures.push_back(what);
    }
  }

  void within(Clock::time_point start, double limit_ms, const std::string& what) {
    const double ms = ms_since(start);
    expect(ms < limit_ms, what + " took " + std::to_string(static_cast<long long>(ms)) +
                              " ms, limit " + std::to_string(static_cast<long long>(limit_ms)));
  }

 private:
  CriterionResult& r_;
};

std::string fmt(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string at(const std::string& spec, std::uint32_t p) {
  return spec + " over F_" + std::to_string(p);
}

AnalysisReport run(const std::string& spec, std::uint32_t p, const SuiteOptions& o) {
  return analyze(prepared(spec, o.corrupt).entry, AnalysisOptions{p, o.seed, false});
}

SymmetricVerdict verdict_for(const Prepared& pr, std::uint32_t p, std::uint64_t seed) {
  const Field f = Field::prime(p);
  const auto a = centralizer_algebra(pr.cc, pr.tensor, f);
  return is_symmetric(a, reflexive_form(a, pr.cc), seed);
}

void criterion_altpairs(Recorder& rec, const SuiteOptions& o) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto start = Clock::now();
    const auto r = run("altpairs:7", p, o);
    rec.within(start, 1000, at("altpairs:7", p));
    rec.expect(r.degree == 21, "altpairs:7 degree " + std::to_string(r.degree) + ", want 21");
    rec.expect(r.orbital_count == 3, "altpairs:7 rank " + std::to_string(r.orbital_count) + ", want 3");
    rec.expect(r.classification.subdegrees == std::vector<std::size_t>{1, 10, 10},
               "altpairs:7 subdegrees " + fmt(r.classification.subdegrees) + ", want {1,10,10}");
    rec.expect(r.verdict.certified_positive(),
               at("altpairs:7", p) + " verdict " + to_string(r.verdict.status));
  }
}

void criterion_affine(Recorder& rec, const SuiteOptions& o) {
  const auto start = Clock::now();
  const auto r = run("example3_2", 3, o);
  rec.within(start, 1000, "example3_2 over F_3");
  rec.expect(r.classification.subdegrees == std::vector<std::size_t>{1, 1, 1, 3, 3},
             "subdegrees " + fmt(r.classification.subdegrees) + ", want {1,1,1,3,3}");
  rec.expect(r.algebra_dim == 5, "algebra dim " + std::to_string(r.algebra_dim) + ", want 5");
  rec.expect(r.radical_dims == std::vector<std::size_t>{5, 4, 2, 0},
             "radical dims " + fmt(r.radical_dims) + ", want {5,4,2,0}");
  const std::set<std::string> want = {"1", "a", "a^2", "b+ab+a^2b", "b^2+ab^2+a^2b^2"};
  std::set<std::string> got;
  if (r.schur) got.insert(r.schur->basic_set_labels.begin(), r.schur->basic_set_labels.end());
  rec.expect(got == want, "basic-set sums differ from {1, a, a^2, b+ab+a^2b, b^2+ab^2+a^2b^2}");
  rec.expect(r.schur && r.schur->pass(), "Schur ring does not match the centralizer algebra");
  rec.expect(r.verdict.status == SymmetricStatus::not_symmetric,
             "verdict " + to_string(r.verdict.status) + ", want not_symmetric");
  const auto& cert = r.verdict.certificate;
  rec.expect(cert && cert->exhausted_search && cert->functionals_searched == 243,
             "expected an exhaustive search over 243 functionals");
  rec.expect(cert && cert->local_socle_obstruction, "expected the local-socle obstruction");
}

void criterion_signtwist(Recorder& rec, const SuiteOptions& o) {
  const auto start = Clock::now();
  for (std::size_t n : {3u, 4u, 5u}) {
    const std::string spec = "signtwist:" + std::to_string(n);
    const auto& pr = prepared(spec, o.corrupt);
    const auto& c = pr.classification;
    const std::size_t degree = (n + 1) * (n + 2) / 2;
    std::vector<std::size_t> want = {1, 2 * n, n * (n - 1) / 2};
    std::sort(want.begin(), want.end());
    rec.expect(pr.entry.group.degree() == degree,
               spec + " degree " + std::to_string(pr.entry.group.degree()));
    rec.expect(c.subdegrees == want, spec + " subdegrees " + fmt(c.subdegrees) + ", want " + fmt(want));
    rec.expect(c.faithful, spec + " action not faithful");
  }
  const auto r = run("signtwist:5", 5, o);
  rec.expect(r.verdict.certified_positive(), "signtwist:5 over F_5 verdict " + to_string(r.verdict.status));
  rec.within(start, 2000, "signtwist family");
}

void criterion_psl2(Recorder& rec, const SuiteOptions& o) {
  auto start = Clock::now();
  const auto r = run("psl2cosets:8", 3, o);
  rec.expect(r.degree == 28, "psl2cosets:8 degree " + std::to_string(r.degree));
  rec.expect(r.classification.three_halves_transitive, "psl2cosets:8 not 3/2-transitive");
  rec.expect(r.classification.subdegrees == std::vector<std::size_t>{1, 9, 9, 9},
             "psl2cosets:8 subdegrees " + fmt(r.classification.subdegrees));
  rec.expect(r.group_order == 504, "psl2cosets:8 order " + std::to_string(r.group_order));
  rec.expect(r.verdict.certified_positive(), "psl2cosets:8 over F_3 verdict " + to_string(r.verdict.status));
  const auto gt = group_theoretic_checks(prepared("psl2cosets:8", o.corrupt).entry.group, 0, 3);
  rec.expect(gt.max_conjugate_intersection == 2,
             "max |H cap H^x| = " + std::to_string(gt.max_conjugate_intersection) + ", want 2");
  rec.expect(gt.normalizer_in_stabilizer, "Sylow normalizer not inside the point stabilizer");
  rec.within(start, 5000, "psl2cosets:8");

  start = Clock::now();
  const auto& big = prepared("psl2cosets:32", o.corrupt);
  rec.expect(big.entry.group.degree() == 496, "psl2cosets:32 degree");
  for (std::uint32_t p : {3u, 11u}) {
    const auto v = verdict_for(big, p, o.seed);
    rec.expect(v.certified_positive(), at("psl2cosets:32", p) + " verdict " + to_string(v.status));
  }
  rec.within(start, 60000, "psl2cosets:32 pipeline");
}

void criterion_frobenius(Recorder& rec, const SuiteOptions& o) {
  const auto start = Clock::now();
  for (std::uint32_t p : {3u, 7u}) {
    const auto r = run("frobenius:7,3", p, o);
    rec.expect(r.classification.subdegrees == std::vector<std::size_t>{1, 3, 3},
               "frobenius:7,3 subdegrees " + fmt(r.classification.subdegrees));
    rec.expect(r.verdict.certified_positive(), at("frobenius:7,3", p) + " verdict " + to_string(r.verdict.status));
  }
  const auto& pr = prepared("frobenius:7,3", o.corrupt);
  const auto h = hecke_check(pr.entry.group, 0, Field::prime(7));
  rec.expect(h.hecke_dim == 3 && h.matches_rank,
             "hecke_dim " + std::to_string(h.hecke_dim) + ", rank " + std::to_string(h.permutation_rank));
  rec.within(start, 1000, "frobenius:7,3");
}

void criterion_axioms(Recorder& rec, const SuiteOptions& o) {
  for (const auto& spec : suite_catalog()) {
    const auto& pr = prepared(spec, o.corrupt);
    const auto rep = verify_cc_axioms(pr.cc, pr.tensor, 3, o.seed);
    rec.expect(rep.pass(), spec + ": " + rep.failure);
    if (pr.cc.n <= 100) {
      const auto failure = verify_adjacency_products(pr.cc, pr.tensor);
      rec.expect(failure.empty(), spec + ": " + failure);
    }
  }
}

void criterion_oracle(Recorder& rec, const SuiteOptions& o) {
  for (const auto& spec : suite_catalog()) {
    const auto& pr = prepared(spec, o.corrupt);
    if (pr.cc.n > kOracleDegreeCap) continue;
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      const Field f = Field::prime(p);
      const std::size_t oracle = centralizer_oracle(pr.entry.group, f);
      const std::size_t dim = centralizer_algebra(pr.cc, pr.tensor, f).dim();
      rec.expect(oracle == pr.cc.rank() && dim == pr.cc.rank(),
                 at(spec, p) + ": oracle " + std::to_string(oracle) + ", orbitals " +
                     std::to_string(pr.cc.rank()) + ", algebra " + std::to_string(dim));
    }
  }
}

void criterion_schur(Recorder& rec, const SuiteOptions& o) {
  const std::vector<std::pair<std::string, std::uint32_t>> cases = {{"example3_2", 3}, {"frobenius:7,3", 5}};
  for (const auto& [spec, p] : cases) {
    const auto& e = prepared(spec, o.corrupt).entry;
    const auto rep = schur_vs_centralizer(e.group, e.regular_normal_subgroup, Field::prime(p), 0, e.namer);
    rec.expect(rep.pass(), at(spec, p) + ": " + rep.mismatch);
  }
  const auto& pr = prepared("frobenius:7,3", o.corrupt);
  const auto a = centralizer_algebra(pr.cc, pr.tensor, Field::prime(5));
  rec.expect(nilpotent_free_check(a), "frobenius:7,3 over F_5 has a nonzero nilpotent");
  const auto dims = radical_chain(a).dims;
  rec.expect(dims == std::vector<std::size_t>{3, 0}, "frobenius:7,3 over F_5 radical dims " + fmt(dims));
}

void criterion_overgroup(Recorder& rec, const SuiteOptions& o) {
  const auto& alt = prepared("altpairs:7", o.corrupt);
  const auto& sym = prepared("S7pairs", o.corrupt);
  rec.expect(alt.cc.orbital_of == sym.cc.orbital_of, "orbital tables differ");
  rec.expect(alt.cc.rank() == sym.cc.rank() && alt.tensor == sym.tensor, "intersection tensors differ");
  for (std::uint32_t p : {2u, 5u}) {
    if (alt.cc.n != sym.cc.n) break;
    const auto va = verdict_for(alt, p, o.seed);
    const auto vs = verdict_for(sym, p, o.seed);
    rec.expect(va.status == vs.status, "verdicts differ over F_" + std::to_string(p) + ": " +
                                           to_string(va.status) + " vs " + to_string(vs.status));
  }
}

void criterion_sweep(Recorder& rec, const SuiteOptions& o) {
  const auto start = Clock::now();
  const std::set<std::string> named = {"altpairs:7", "S7pairs", "psl2cosets:8", "frobenius:7,3",
                                       "frobenius:5,2"};
  for (const auto& spec : suite_catalog()) {
    const auto& pr = prepared(spec, o.corrupt);
    const bool two_transitive = pr.classification.transitive && pr.classification.rank == 2;
    if (named.count(spec)) {
      rec.expect(pr.classification.three_halves_transitive, spec + " is not 3/2-transitive");
    }
    if (!pr.classification.three_halves_transitive && !named.count(spec) && !two_transitive) continue;
    for (std::uint32_t p : kSmallPrimes) {
      const auto v = verdict_for(pr, p, o.seed);
      rec.expect(v.status != SymmetricStatus::not_symmetric && v.certified_positive(),
                 at(spec, p) + " verdict " + to_string(v.status));
    }
  }
  rec.within(start, 300000, "sweep");
}

void criterion_reflexive_form(Recorder& rec, const SuiteOptions& o) {
  for (const auto& spec : suite_catalog()) {
    const auto& pr = prepared(spec, o.corrupt);
    for (std::uint32_t p : kSmallPrimes) {
      const bool hypothesis = std::all_of(pr.cc.orbitals.begin(), pr.cc.orbitals.end(),
                                          [&](const OrbitalInfo& s) { return s.valency % p != 0; });
      if (!hypothesis) continue;
      const auto a = centralizer_algebra(pr.cc, pr.tensor, Field::prime(p));
      const auto form = reflexive_form(a, pr.cc);
      rec.expect(form.symmetric && form.nondegenerate, at(spec, p) + ": reflexive form not symmetric and non-degenerate");
      const auto v = is_symmetric(a, form, o.seed);
      rec.expect(v.path == "reflexive", at(spec, p) + ": decided via " + v.path);
    }
  }
}

struct Criterion {
  const char* title;
  void (*body)(Recorder&, const SuiteOptions&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"A_7 on pairs: degree 21, subdegrees {1,10,10}, symmetric for p <= 7", criterion_altpairs},
    {"affine counterexample over F_3: radical [5,4,2,0], not symmetric", criterion_affine},
    {"sign-twisted A_{n+2} on cosets of S_n, n = 3..5", criterion_signtwist},
    {"PSL(2,8) and PSL(2,32) on dihedral cosets", criterion_psl2},
    {"Frobenius group 7:3 over F_3 and F_7, Hecke dimension", criterion_frobenius},
    {"coherent-configuration axioms and adjacency products", criterion_axioms},
    {"linear-solve centralizer dimension = orbital count", criterion_oracle},
    {"Schur rings match centralizer algebras", criterion_schur},
    {"A_7 and S_7 on pairs share orbitals, tensor and verdicts", criterion_overgroup},
    {"3/2-transitive sweep over primes <= 13", criterion_sweep},
    {"invertible valencies give a symmetric non-degenerate reflexive form", criterion_reflexive_form},
};

}  // namespace

const std::vector<std::string>& suite_catalog() {
  static const std::vector<std::string> specs = {
      "sym:3",         "sym:4",         "sym:5",         "sym:6",          "alt:4",
      "alt:5",         "alt:6",         "alt:7",         "altpairs:7",     "S7pairs",
      "signtwist:3",   "signtwist:4",   "signtwist:5",   "frobenius:7,3",  "frobenius:5,2",
      "frobenius:7,6", "frobenius:5,4", "frobenius:13,4", "example3_2",     "psl2line:4",
      "psl2line:8",    "psl2line:32",   "psl2cosets:8",  "psl2cosets:32",
  };
  return specs;
}

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  if (id < 1 || id > kCriterionCount) throw PreconditionError("no criterion " + std::to_string(id));
  const auto& c = kCriteria[id - 1];
  CriterionResult result;
  result.id = id;
  result.title = c.title;
  Recorder rec(result);
  const auto start = Clock::now();
  try {
    c.body(rec, options);
  } catch (const std::exception& e) {
    rec.expect(false, std::string("exception: ") + e.what());
  }
  result.elapsed_ms = ms_since(start);
  return result;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) results.push_back(run_criterion(id, options));
  return results;
}

std::string format_suite(const std::vector<CriterionResult>& results, bool timings) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.pass;
    os << (r.pass ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.title
       << " (" << r.checks << " checks)";
    if (timings) os << " [" << static_cast<long long>(r.elapsed_ms) << " ms]";
    os << "\n";
    for (const auto& f : r.failures) os << "          " << f << "\n";
  }
  os << passed << "/" << results.size() << " criteria passed\n";
  return os.str();
}

}  // namespace symcent
