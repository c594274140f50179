#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liecheck/cases.hpp"
#include "liecheck/report.hpp"
#include "liecheck/table_io.hpp"

namespace {

int cmd_list() {
  for (const liecheck::CaseInfo& info : liecheck::list_cases())
    std::printf("%-22s %s\n", info.id.c_str(), info.summary.c_str());
  return 0;
}

int cmd_dump(const std::string& id, const std::string& out) {
  const auto table = liecheck::case_table(id);
  if (!table) {
    std::fprintf(stderr,
                 "error: case '%s' is dimension bookkeeping only and has no "
                 "table to serialize\n",
                 id.c_str());
    return 2;
  }
  const std::string text = liecheck::serialize_table(*table);
  if (out.empty())
    std::fputs(text.c_str(), stdout);
  else
    liecheck::write_file(out, text);
  return 0;
}

int cmd_verify(std::vector<std::string> ids, const std::string& format,
               const std::string& out, bool allow_deviations, int jobs) {
  if (ids.empty())
    for (const liecheck::CaseInfo& info : liecheck::list_cases())
      ids.push_back(info.id);

  std::vector<liecheck::CaseResult> results;
  results.reserve(ids.size());
  for (const std::string& id : ids)
    results.push_back(liecheck::run_case(id, {}, jobs));

  const std::string rendered = format == "json"
                                   ? liecheck::render_json(results)
                                   : liecheck::render_text(results);
  if (out.empty())
    std::fputs(rendered.c_str(), stdout);
  else
    liecheck::write_file(out, rendered);

  for (const liecheck::CaseResult& r : results) {
    if (r.status == liecheck::CaseStatus::pass) continue;
    if (r.status == liecheck::CaseStatus::deviation && allow_deviations)
      continue;
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of graded bracket tables"};
  app.require_subcommand(1);

  auto* verify =
      app.add_subcommand("verify", "run one case, several, or the full registry");
  std::string positional;
  std::vector<std::string> case_flags;
  std::string format = "text";
  std::string out;
  bool allow_deviations = false;
  int jobs = 1;
  verify->add_option("case-id", positional,
                     "case to run (omit to run the full registry)");
  verify->add_option("--case", case_flags, "case to run (repeatable)");
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out, "write the report to this file");
  verify->add_flag("--allow-deviations", allow_deviations,
                   "exit 0 when a case deviates from the reference values");
  verify->add_option("--jobs", jobs, "parallel Jacobi evaluation degree")
      ->check(CLI::Range(1, 64));

  auto* list = app.add_subcommand("list-cases", "list the registered cases");

  auto* dump =
      app.add_subcommand("dump", "serialize the case's table to text");
  std::string dump_id;
  std::string dump_out;
  dump->add_option("case-id", dump_id, "case whose table to serialize")
      ->required();
  dump->add_option("--out", dump_out, "write the table to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) return cmd_list();
    if (dump->parsed()) return cmd_dump(dump_id, dump_out);
    std::vector<std::string> ids = case_flags;
    if (!positional.empty()) ids.insert(ids.begin(), positional);
    return cmd_verify(std::move(ids), format, out, allow_deviations, jobs);
  } catch (const liecheck::UnknownCase& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const liecheck::InvalidOverride& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const liecheck::IoFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
