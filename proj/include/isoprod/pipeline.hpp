#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "isoprod/cone.hpp"
#include "isoprod/data_io.hpp"
#include "isoprod/divisors.hpp"
#include "isoprod/mixed_surface.hpp"

namespace isoprod {

struct RunConfig {
  std::size_t closure_budget = FiniteGroup::kDefaultBudget;
  std::size_t coset_budget = kDefaultMaxCosets;
  std::size_t search_limit = 64;
  int parallel = 1;
  /// When false, the extra-automorphism block is ignored and H = G0.
  bool use_extra = true;
};

struct ExtraTower {
  GroupPtr H;
  GeneratingVector h_vector;  ///< type [0;2,3,8]
  InducedVectors induced;
};

struct LoadedSurface {
  SurfaceSpec spec;
  SurfaceData surface;
  FreenessReport freeness;
  /// Covering data of H on C (the G0 covering when H = G0).
  CoveringData h_cover;
  std::optional<ExtraTower> tower;
};

/// Builds a group from its data file and checks the recorded fingerprint.
GroupPtr load_checked_group(const std::filesystem::path& path, const RunConfig& config);

LoadedSurface load_surface(const std::filesystem::path& spec_path, const RunConfig& config);

struct DivisorAnalysis {
  std::vector<OrbitDivisor> orbits;
  IntersectionTable table;
  ConeReport cone;
};

/// Orbit divisors, intersection table and cone report; needs a free action.
DivisorAnalysis analyse_divisors(const LoadedSurface& loaded, const RunConfig& config);

/// Text report of genus, invariants and freeness.
std::string format_surface_report(const LoadedSurface& loaded);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Expectations {
  /// Overrides the expected number of orbit divisors.
  std::optional<std::size_t> divisor_count;
};

struct ReproduceResult {
  int family = 0;
  std::vector<CheckResult> checks;
  double seconds = 0;
  std::optional<LoadedSurface> loaded;
  std::optional<DivisorAnalysis> analysis;

  bool pass() const;
};

std::filesystem::path family_spec_path(const std::filesystem::path& data_dir, int family);

/// Runs the full pipeline for one bundled family and compares against the
/// expected numbers (up to relabeling of divisors). Pipeline errors become
/// failed checks.
ReproduceResult reproduce_family(int family, const std::filesystem::path& data_dir, const RunConfig& config,
                                 const Expectations& expectations = {});

std::string format_reproduce(const ReproduceResult& r);

}  // namespace isoprod
