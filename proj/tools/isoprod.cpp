// isoprod: command-line front end for the surface pipeline.
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "isoprod/error.hpp"
#include "isoprod/pipeline.hpp"

#ifndef ISOPROD_DATA_DIR
#define ISOPROD_DATA_DIR "data"
#endif

namespace {

using namespace isoprod;

// Stable exit codes.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitAssertion = 4;
constexpr int kExitMismatch = 5;
constexpr int kExitBudget = 6;
constexpr int kExitUnsupported = 7;
constexpr int kExitUsage = 64;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return kExitParse;
    case ErrorKind::Validation: return kExitValidation;
    case ErrorKind::Assertion: return kExitAssertion;
    case ErrorKind::Budget: return kExitBudget;
    case ErrorKind::Unsupported: return kExitUnsupported;
  }
  return kExitAssertion;
}

struct Options {
  RunConfig config;
  std::string path;
  std::string format = "table";
  std::string type;
  std::size_t limit = 10;
  int family = 0;
  std::optional<std::size_t> expect_divisors;
  bool without_extra = false;
  std::string data_dir = ISOPROD_DATA_DIR;
};

int run_group(const Options& o) {
  if (is_presentation_file(o.path)) {
    const auto file = load_presentation_file(o.path);
    const auto tc = todd_coxeter(file.presentation, o.config.coset_budget);
    Assignment assignment;
    for (std::size_t i = 0; i < file.presentation.generators.size(); ++i)
      assignment[file.presentation.generators[i]] = tc.group->index_of(tc.generator_images[i]);
    bool relators_ok = true;
    for (const auto& r : file.presentation.relators)
      relators_ok = relators_ok && evaluate_word(r, *tc.group, assignment) == FiniteGroup::kIdentity;
    std::cout << "presentation: " << file.name << '\n'
              << "order: " << tc.group->order() << " (" << tc.cosets_defined << " cosets defined)\n"
              << "relators evaluate to identity: " << (relators_ok ? "yes" : "no") << '\n'
              << describe(fingerprint(tc.group));
    return relators_ok ? kExitOk : kExitAssertion;
  }
  const auto file = load_group_file(o.path);
  const auto computed = fingerprint(file.build(o.config.closure_budget));
  const bool match = computed == file.expected;
  std::cout << "group: " << file.name << " (claimed " << file.claimed_id << ", degree " << file.degree << ")\n"
            << "-- computed\n" << describe(computed) << "-- expected\n" << describe(file.expected)
            << "fingerprint: " << (match ? "match" : "MISMATCH") << '\n';
  return match ? kExitOk : kExitMismatch;
}

int run_genvec(const Options& o) {
  const auto group = load_group_file(o.path).build(o.config.closure_budget);
  const auto type = CoverType::parse(o.type);
  const auto found = search_generating_vectors(group, type, o.limit);
  std::cout << "order " << group->order() << ", type " << type.to_string() << ": " << found.size()
            << " vector(s) up to simultaneous conjugation (limit " << o.limit << ")\n";
  for (std::size_t i = 0; i < found.size(); ++i) {
    std::cout << '#' << i + 1 << '\n';
    for (auto e : found[i].entries) std::cout << "  " << group->element(e).to_cycle_string() << '\n';
  }
  return kExitOk;
}

RunConfig surface_config(const Options& o) {
  auto config = o.config;
  config.use_extra = !o.without_extra;
  return config;
}

int run_surface(const Options& o) {
  const auto loaded = load_surface(o.path, surface_config(o));
  std::cout << format_surface_report(loaded);
  return loaded.freeness.free() ? kExitOk : kExitValidation;
}

int run_divisors(const Options& o) {
  const auto config = surface_config(o);
  const auto analysis = analyse_divisors(load_surface(o.path, config), config);
  std::cout << (o.format == "record" ? format_record(analysis.table) : format_table(analysis.table));
  return kExitOk;
}

int run_cone(const Options& o) {
  const auto config = surface_config(o);
  const auto analysis = analyse_divisors(load_surface(o.path, config), config);
  std::cout << (o.format == "record" ? format_cone_record(analysis.cone) : format_cone_text(analysis.cone));
  return kExitOk;
}

int run_reproduce(const Options& o) {
  Expectations expectations;
  expectations.divisor_count = o.expect_divisors;
  const auto result = reproduce_family(o.family, o.data_dir, o.config, expectations);
  std::cout << format_reproduce(result);
  if (result.analysis) std::cout << format_table(result.analysis->table) << format_cone_text(result.analysis->cone);
  return result.pass() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isoprod: orbit divisors and cones of surfaces isogenous to a product of mixed type"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--parallel", o.config.parallel, "worker threads (results do not depend on it)")
      ->check(CLI::Range(1, 256));
  app.add_option("--budget-closure", o.config.closure_budget, "maximum group order during closure")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-cosets", o.config.coset_budget, "maximum cosets in Todd-Coxeter")
      ->check(CLI::PositiveNumber);
  app.add_option("--search-limit", o.config.search_limit, "vector search limit for extra-automorphism search")
      ->check(CLI::PositiveNumber);

  auto* group = app.add_subcommand("group", "check a group data file or run a presentation file");
  group->add_option("file", o.path)->required();

  auto* genvec = app.add_subcommand("genvec", "generating vectors");
  genvec->require_subcommand(1);
  auto* search = genvec->add_subcommand("search", "search generating vectors of a type");
  search->add_option("groupfile", o.path)->required();
  search->add_option("--type", o.type, "cover type, e.g. \"[0;2,3,8]\"")->required();
  search->add_option("--limit", o.limit, "maximum number of classes")->check(CLI::PositiveNumber);

  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("spec", o.path)->required();
    cmd->add_flag("--without-extra", o.without_extra, "ignore extra automorphisms (H = G0)");
  };
  auto* surface = app.add_subcommand("surface", "genus, invariants and freeness");
  add_spec(surface);
  auto* divisors = app.add_subcommand("divisors", "orbit divisors and intersection table");
  add_spec(divisors);
  divisors->add_option("--format", o.format)->check(CLI::IsMember({"table", "record"}));
  auto* cone = app.add_subcommand("cone", "numerical classes and Mori-dream verdict");
  add_spec(cone);
  cone->add_option("--format", o.format)->check(CLI::IsMember({"table", "record"}));

  auto* reproduce = app.add_subcommand("reproduce", "full pipeline for a bundled family");
  reproduce->add_option("family", o.family)->required()->check(CLI::Range(1, 5));
  reproduce->add_option("--expect-divisors", o.expect_divisors, "override the expected divisor count");
  reproduce->add_option("--data-dir", o.data_dir, "bundled data directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (group->parsed()) return run_group(o);
    if (search->parsed()) return run_genvec(o);
    if (surface->parsed()) return run_surface(o);
    if (divisors->parsed()) return run_divisors(o);
    if (cone->parsed()) return run_cone(o);
    if (reproduce->parsed()) return run_reproduce(o);
  } catch (const Error& e) {
    std::cerr << "error [" << e.module() << "]: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return kExitUsage;
}
