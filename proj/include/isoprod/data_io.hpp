#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "isoprod/covering.hpp"
#include "isoprod/fingerprint.hpp"
#include "isoprod/presentation.hpp"

namespace isoprod {

/// A bundled group: permutation generators plus the expected fingerprint.
/// Generators are addressed in words as g1, g2, ... in file order.
struct GroupFile {
  std::filesystem::path path;
  std::string name;
  std::string claimed_id;
  std::uint32_t degree = 0;
  std::vector<Permutation> generators;
  GroupFingerprint expected;
  std::string provenance;

  GroupPtr build(std::size_t closure_budget = FiniteGroup::kDefaultBudget) const;
};

GroupFile load_group_file(const std::filesystem::path& path);
GroupFile parse_group_file(const std::string& text, const std::filesystem::path& origin = {});

/// A finite presentation stored as {"name", "generators": [symbols], "relators": [words]}.
struct PresentationFile {
  std::string name;
  Presentation presentation;
};

bool is_presentation_file(const std::filesystem::path& path);
PresentationFile load_presentation_file(const std::filesystem::path& path);

/// "g1".."gk" for a group with k generators.
Alphabet generator_alphabet(std::size_t count);
Assignment generator_assignment(const FiniteGroup& group);
/// Parses `text` in the g1..gk symbols of `group` and evaluates it.
Elem evaluate_in(const FiniteGroup& group, const std::string& text);

struct ExtraAutomorphismSpec {
  std::filesystem::path group_file;
  /// Empty when the file asks for "search".
  std::vector<std::string> vector;
  bool search = false;
};

/// A surface specification. Relative paths are resolved against the
/// directory of the spec file.
struct SurfaceSpec {
  std::filesystem::path path;
  std::string name;
  int family = 0;
  std::filesystem::path group_file;
  std::vector<std::string> g0_generators;
  std::string tau_prime;
  CoverType cover_type;
  std::vector<std::string> vector;
  std::optional<ExtraAutomorphismSpec> extra;
};

SurfaceSpec load_surface_spec(const std::filesystem::path& path);

}  // namespace isoprod
