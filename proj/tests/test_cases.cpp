#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "liecheck/cases.hpp"
#include "liecheck/report.hpp"

using namespace liecheck;

namespace {

bool has_check(const CaseResult& r, const std::string& name, bool ok) {
  return std::any_of(r.checks.begin(), r.checks.end(),
                     [&](const CheckLine& c) { return c.name == name && c.ok == ok; });
}

const CheckLine& check_named(const CaseResult& r, const std::string& name) {
  for (const CheckLine& c : r.checks)
    if (c.name == name) return c;
  throw std::logic_error("missing check " + name);
}

}  // namespace

TEST_CASE("the registry is stable, sorted and self-describing") {
  const auto cases = list_cases();
  CHECK(cases.size() == 26);
  CHECK(cases.size() >= 14);
  CHECK(std::is_sorted(cases.begin(), cases.end(),
                       [](const CaseInfo& a, const CaseInfo& b) { return a.id < b.id; }));
  const auto has = [&](const std::string& id) {
    return std::any_of(cases.begin(), cases.end(),
                       [&](const CaseInfo& c) { return c.id == id; });
  };
  CHECK(has("d1-diagonal"));
  CHECK(has("coset-dims-d5"));
  CHECK(has("d21-ext"));
  CHECK(has("composed-n2"));
  for (const CaseInfo& c : cases) CHECK(!c.summary.empty());
}

TEST_CASE("builder cases pass with the expected dimension counts") {
  const CaseResult r = run_case("gca-d3");
  CHECK(r.status == CaseStatus::pass);
  CHECK(r.deviations.empty());
  CHECK(has_check(r, "jacobi", true));
  CHECK(has_check(r, "split", true));
  CHECK(has_check(r, "star", true));
  CHECK(check_named(r, "dims").detail == "15 bosonic, 0 fermionic generators");

  const CaseResult o = run_case("ospN2-2");
  CHECK(o.status == CaseStatus::pass);
  CHECK(check_named(o, "dims").detail == "4 bosonic, 4 fermionic generators");
}

TEST_CASE("parametric cases solve their constraint systems uniquely") {
  const CaseResult r = run_case("d21-ext");
  CHECK(r.status == CaseStatus::pass);
  const CheckLine& c = check_named(r, "constraints");
  CHECK(c.ok);
  CHECK(c.detail.find("alpha = 1") != std::string::npos);
  CHECK(c.detail.find("beta = 1") != std::string::npos);
  CHECK(c.detail.find("gamma = 1") != std::string::npos);
  CHECK(c.detail.find("8 equations") != std::string::npos);
  CHECK(has_check(r, "jacobi", true));
  CHECK(has_check(r, "star", true));

  const CaseResult s = run_case("d21-ext-swapped");
  CHECK(s.status == CaseStatus::pass);
  CHECK(check_named(s, "constraints").detail.find("alpha = -2") !=
        std::string::npos);

  const CaseResult o = run_case("osp12-ext");
  CHECK(o.status == CaseStatus::pass);
  CHECK(check_named(o, "constraints").detail.find("beta = 1") !=
        std::string::npos);

  const CaseResult u = run_case("su111-ext");
  CHECK(u.status == CaseStatus::pass);
  CHECK(check_named(u, "constraints").detail.find("gamma = 1") !=
        std::string::npos);
}

TEST_CASE("overrides pin parameters and wrong values are caught") {
  // Partial override: the remaining parameters still solve.
  const CaseResult partial = run_case("d21-ext", {{"alpha", "1"}});
  CHECK(partial.status == CaseStatus::pass);
  CHECK(check_named(partial, "constraints").detail.find("beta = 1") !=
        std::string::npos);

  // Full correct override: nothing left to solve, the system is empty.
  const CaseResult full =
      run_case("d21-ext", {{"alpha", "1"}, {"beta", "1"}, {"gamma", "1"}});
  CHECK(full.status == CaseStatus::pass);
  CHECK(check_named(full, "constraints").detail.find("empty") !=
        std::string::npos);

  // A wrong value makes the system unsatisfiable and the case fail.
  const CaseResult wrong = run_case("osp12-ext", {{"beta", "1/2"}});
  CHECK(wrong.status == CaseStatus::fail);
  CHECK(!check_named(wrong, "constraints").ok);

  const CaseResult wrong2 = run_case("d21-ext", {{"alpha", "-2"}});
  CHECK(wrong2.status == CaseStatus::fail);
}

TEST_CASE("unknown cases and invalid overrides throw typed errors") {
  CHECK_THROWS_AS(run_case("no-such-case"), UnknownCase);
  CHECK_THROWS_AS(case_table("no-such-case"), UnknownCase);
  CHECK_THROWS_AS(run_case("gca-d1", {{"alpha", "1"}}), InvalidOverride);
  CHECK_THROWS_AS(run_case("d21-ext", {{"delta", "1"}}), InvalidOverride);
  CHECK_THROWS_AS(run_case("d21-ext", {{"alpha", "x"}}), InvalidOverride);
  CHECK_THROWS_AS(run_case("d21-ext", {{"alpha", "1/0"}}), InvalidOverride);
  CHECK_THROWS_AS(run_case("d21-ext", {{"alpha", "1/"}}), InvalidOverride);
  CHECK_THROWS_AS(run_case("d21-ext", {{"alpha", ""}}), InvalidOverride);
  CHECK_THROWS_AS(run_case("coset-dims-d2", {{"n", "0"}}), InvalidOverride);
  CHECK_THROWS_AS(run_case("coset-dims-d2", {{"n", "10"}}), InvalidOverride);
  CHECK_THROWS_AS(run_case("coset-dims-d2", {{"beta", "1"}}), InvalidOverride);
  // Negative and fractional values parse.
  CHECK_NOTHROW(run_case("osp12-ext", {{"beta", "-3/7"}}));
}

TEST_CASE("pipeline and coset cases report their expected statuses") {
  const CaseResult phys = run_case("physical-n1");
  CHECK(phys.status == CaseStatus::deviation);
  REQUIRE(phys.deviations.size() == 1);
  CHECK(phys.deviations.front().computed.find("A0") != std::string::npos);
  CHECK(!phys.deviations.front().citation.empty());

  const CaseResult comp = run_case("composed-n1");
  CHECK(comp.status == CaseStatus::pass);
  CHECK(has_check(comp, "golden-diff", true));
  CHECK(has_check(comp, "contraction", true));
  CHECK(has_check(comp, "split-pre", true));
  CHECK(has_check(comp, "split-post", true));

  const CaseResult comp2 = run_case("composed-n2");
  CHECK(comp2.status == CaseStatus::deviation);
  REQUIRE(comp2.deviations.size() == 1);
  CHECK(comp2.deviations.front().paper_value == "6");

  const CaseResult coset = run_case("coset-dims-d4");
  CHECK(coset.status == CaseStatus::pass);
  CHECK(check_named(coset, "dims").detail.find("computed 8") !=
        std::string::npos);
  CHECK(check_named(coset, "dims").detail.find("computed 15") !=
        std::string::npos);

  const CaseResult coset2 = run_case("coset-dims-d2", {{"n", "2"}});
  CHECK(coset2.status == CaseStatus::pass);
}

TEST_CASE("golden cases carry the dictionary diff and the recorded deviation") {
  const CaseResult g1 = run_case("gca3-susy-n1-golden");
  CHECK(g1.status == CaseStatus::pass);
  CHECK(has_check(g1, "golden-diff", true));

  const CaseResult g2 = run_case("gca3-susy-n2-golden");
  CHECK(g2.status == CaseStatus::deviation);
  REQUIRE(g2.deviations.size() == 1);
  CHECK(g2.deviations.front().computed.find("5") != std::string::npos);
  CHECK(g2.deviations.front().paper_value == "6");
}

TEST_CASE("case_table serves builders, families and limits but not cosets") {
  const auto gca = case_table("gca-d1");
  REQUIRE(gca.has_value());
  CHECK(gca->size() == 6);

  const auto fam = case_table("osp12-ext");
  REQUIRE(fam.has_value());
  CHECK(fam->size() == 10);

  const auto lim = case_table("d1-diagonal");
  REQUIRE(lim.has_value());
  CHECK(lim->size() == 10);

  CHECK(!case_table("coset-dims-d2").has_value());
  CHECK_THROWS_AS(case_table("gca-d1", {{"n", "2"}}), InvalidOverride);
}

TEST_CASE("parallel Jacobi evaluation does not change any result") {
  const CaseResult a = run_case("su22-n1", {}, 1);
  const CaseResult b = run_case("su22-n1", {}, 4);
  CHECK(render_json({a}) == render_json({b}));
}

TEST_CASE("JSON reports are schema-complete, sorted and deterministic") {
  CHECK(render_json({}) == "[]\n");

  // Feed out of order; the renderer sorts by id.
  std::vector<CaseResult> results;
  results.push_back(run_case("physical-n1"));
  results.push_back(run_case("gca-d1"));
  const std::string json = render_json(results);
  const auto gca_pos = json.find("\"case\": \"gca-d1\"");
  const auto phys_pos = json.find("\"case\": \"physical-n1\"");
  REQUIRE(gca_pos != std::string::npos);
  REQUIRE(phys_pos != std::string::npos);
  CHECK(gca_pos < phys_pos);

  CHECK(json.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(json.find("\"status\": \"deviation\"") != std::string::npos);
  CHECK(json.find("\"checks\"") != std::string::npos);
  CHECK(json.find("\"deviations\"") != std::string::npos);
  CHECK(json.find("\"paper_value\"") != std::string::npos);
  CHECK(json.find("\"citation\"") != std::string::npos);
  CHECK(json.find("\"millis\": 0") != std::string::npos);

  // Timing is pinned, so two renderings of fresh runs are byte-identical.
  const std::string again =
      render_json({run_case("physical-n1"), run_case("gca-d1")});
  CHECK(json == again);
}

TEST_CASE("text reports carry one block per case and a summary line") {
  const std::string text = render_text({run_case("gca-d1")});
  CHECK(text.find("case gca-d1: pass") != std::string::npos);
  CHECK(text.find("[ok] jacobi") != std::string::npos);
  CHECK(text.find("1 case: 1 pass, 0 deviation, 0 fail") != std::string::npos);

  const std::string dev = render_text({run_case("physical-n1")});
  CHECK(dev.find("deviation:") != std::string::npos);
  CHECK(dev.find("reference value:") != std::string::npos);
}

TEST_CASE("write_file reports IO failures as typed errors") {
  CHECK_THROWS_AS(write_file("/no-such-directory/sub/out.json", "x"),
                  IoFailure);
}
