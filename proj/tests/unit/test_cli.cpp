#include <doctest.h>

#include <json.hpp>

#include "symcent/analysis.hpp"
#include "symcent/error.hpp"
#include "symcent/suite.hpp"

using namespace symcent;
using nlohmann::json;

TEST_CASE("analyze: A_7 on pairs") {
  const auto r = analyze("altpairs:7", {5, 0, true});
  CHECK(r.degree == 21);
  CHECK(r.group_order == 2520);
  CHECK(r.orbital_count == 3);
  CHECK(r.algebra_dim == r.orbital_count);
  CHECK(r.radical_dims.front() == r.algebra_dim);
  CHECK(r.valencies == std::vector<std::size_t>{1, 10, 10});
  CHECK(r.verdict.status == SymmetricStatus::symmetric_with_witness);
  CHECK(r.checks.oracle_dim == std::optional<std::size_t>(3));
  CHECK(r.checks.adjacency_products == std::optional<bool>(true));
}

TEST_CASE("analyze: affine counterexample") {
  const auto r = analyze("example3_2", {3, 0, false});
  CHECK(r.verdict.status == SymmetricStatus::not_symmetric);
  CHECK(r.radical_dims == std::vector<std::size_t>{5, 4, 1, 0});
  REQUIRE(r.schur);
  CHECK(r.schur->pass());
}

TEST_CASE("analyze: PSL(2,8) on 28 points") {
  const auto r = analyze("psl2cosets:8", {3, 0, false});
  CHECK(r.verdict.certified_positive());
  CHECK(r.classification.subdegrees == std::vector<std::size_t>{1, 9, 9, 9});
}

TEST_CASE("analyze: preconditions") {
  CHECK_THROWS_AS(analyze("sym:4", {4, 0, false}), PreconditionError);
  CHECK_THROWS_AS(analyze("bogus", {3, 0, false}), PreconditionError);
  const CatalogEntry intransitive{"intransitive", PermutationGroup(4, {parse_permutation("(1 2)", 4)}), {}, {}, ""};
  CHECK_THROWS_WITH_AS(analyze(intransitive, {3, 0, false}), doctest::Contains("not transitive"), PreconditionError);
}

TEST_CASE("JSON report") {
  const auto r = analyze("frobenius:7,3", {7, 3, false});
  const auto text = to_json(r, false);
  CHECK(text == to_json(analyze("frobenius:7,3", {7, 3, false}), false));
  const auto j = json::parse(text);
  CHECK(j["algebra_dim"] == 3);
  CHECK(j["valencies"] == json::array({1, 3, 3}));
  CHECK(j["symmetric_verdict"]["status"] == "symmetric_with_witness");
  CHECK(j["schur"]["pass"] == true);
  CHECK_FALSE(j.contains("timings_ms"));
  CHECK(json::parse(to_json(r, true)).contains("timings_ms"));
  // Keys are emitted in sorted order.
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  for (const char* key : {"group_spec", "degree", "group_order", "classification", "orbital_count",
                          "valencies", "characteristic", "algebra_dim", "reflexive_form", "radical_dims",
                          "structure", "symmetric_verdict", "schur", "checks"}) {
    CHECK_MESSAGE(j.contains(key), key);
  }
}

TEST_CASE("text report") {
  const auto text = to_text(analyze("example3_2", {3, 0, false}));
  CHECK(text.find("not_symmetric") != std::string::npos);
  CHECK(text.find("b+ab+a^2b") != std::string::npos);
}

TEST_CASE("suite output is deterministic and the negative control fails") {
  const auto a = format_suite({run_criterion(9), run_criterion(11)});
  const auto b = format_suite({run_criterion(9), run_criterion(11)});
  CHECK(a == b);
  SuiteOptions corrupt;
  corrupt.corrupt = true;
  for (int id : {1, 2, 5, 9}) {
    const auto r = run_criterion(id, corrupt);
    CHECK_MESSAGE(!r.pass, id);
    CHECK(!r.failures.empty());
  }
  CHECK(run_criterion(3, corrupt).pass);
}
