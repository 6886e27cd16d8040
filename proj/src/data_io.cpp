#include "isoprod/data_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "isoprod/error.hpp"

namespace isoprod {

namespace {

using nlohmann::json;

const std::string kModule = "data";

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, kModule, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, kModule, origin + ": " + e.what());
  }
}

// Field access with parse errors naming the file and the field.
template <typename T>
T field(const json& j, const char* key, const std::string& origin) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Parse, kModule, origin + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, kModule, origin + ": bad field '" + key + "': " + e.what());
  }
}

GroupFingerprint fingerprint_from_json(const json& j, const std::string& origin) {
  GroupFingerprint fp;
  fp.order = field<std::uint64_t>(j, "order", origin);
  for (const auto& [key, value] : field<std::map<std::string, std::uint64_t>>(j, "element_orders", origin)) {
    std::uint64_t order = 0;
    try {
      std::size_t used = 0;
      order = std::stoull(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, kModule, origin + ": bad element order key '" + key + "'");
    }
    fp.element_orders[order] = value;
  }
  fp.abelian_invariants = field<std::vector<std::uint64_t>>(j, "abelian_invariants", origin);
  fp.derived_series = field<std::vector<std::uint64_t>>(j, "derived_series", origin);
  fp.center_order = field<std::uint64_t>(j, "center_order", origin);
  fp.class_count = field<std::uint64_t>(j, "class_count", origin);
  return fp;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& relative) {
  std::filesystem::path p(relative);
  if (p.is_absolute()) return p;
  return (base.parent_path() / p).lexically_normal();
}

}  // namespace

GroupPtr GroupFile::build(std::size_t closure_budget) const {
  return FiniteGroup::closure(generators, closure_budget);
}

GroupFile parse_group_file(const std::string& text, const std::filesystem::path& origin_path) {
  const std::string origin = origin_path.empty() ? "<group file>" : origin_path.string();
  const auto j = parse_json(text, origin);
  GroupFile file;
  file.path = origin_path;
  file.name = field<std::string>(j, "name", origin);
  file.claimed_id = field<std::string>(j, "claimed_id", origin);
  const auto degree = field<std::int64_t>(j, "degree", origin);
  if (degree < 1) fail(ErrorKind::Parse, kModule, origin + ": degree must be positive");
  file.degree = static_cast<std::uint32_t>(degree);
  const auto gens = field<std::vector<std::vector<std::int64_t>>>(j, "generators", origin);
  if (gens.empty()) fail(ErrorKind::Parse, kModule, origin + ": no generators");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != file.degree)
      fail(ErrorKind::Parse, kModule,
           origin + ": generator g" + std::to_string(i + 1) + " has " + std::to_string(gens[i].size()) +
               " images, expected " + std::to_string(file.degree));
    try {
      file.generators.push_back(Permutation::from_one_based(gens[i]));
    } catch (const Error& e) {
      fail(ErrorKind::Parse, kModule, origin + ": generator g" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  if (!j.contains("fingerprint")) fail(ErrorKind::Parse, kModule, origin + ": missing field 'fingerprint'");
  file.expected = fingerprint_from_json(j.at("fingerprint"), origin + " fingerprint");
  file.provenance = field<std::string>(j, "provenance", origin);
  return file;
}

GroupFile load_group_file(const std::filesystem::path& path) { return parse_group_file(read_text(path), path); }

bool is_presentation_file(const std::filesystem::path& path) {
  const auto j = parse_json(read_text(path), path.string());
  return j.is_object() && j.contains("relators");
}

PresentationFile load_presentation_file(const std::filesystem::path& path) {
  const std::string origin = path.string();
  const auto j = parse_json(read_text(path), origin);
  PresentationFile file;
  file.name = j.is_object() && j.contains("name") ? field<std::string>(j, "name", origin) : path.stem().string();
  file.presentation = parse_presentation(field<std::vector<std::string>>(j, "generators", origin),
                                         field<std::vector<std::string>>(j, "relators", origin));
  return file;
}

Alphabet generator_alphabet(std::size_t count) {
  Alphabet alphabet;
  for (std::size_t i = 1; i <= count; ++i) alphabet.insert("g" + std::to_string(i));
  return alphabet;
}

Assignment generator_assignment(const FiniteGroup& group) {
  Assignment assignment;
  const auto& idx = group.generator_indices();
  for (std::size_t i = 0; i < idx.size(); ++i) assignment["g" + std::to_string(i + 1)] = idx[i];
  return assignment;
}

Elem evaluate_in(const FiniteGroup& group, const std::string& text) {
  const auto word = parse_word(text, generator_alphabet(group.generator_indices().size()));
  return evaluate_word(word, group, generator_assignment(group));
}

SurfaceSpec load_surface_spec(const std::filesystem::path& path) {
  const std::string origin = path.string();
  const auto j = parse_json(read_text(path), origin);
  SurfaceSpec spec;
  spec.path = path;
  spec.name = field<std::string>(j, "name", origin);
  spec.family = j.contains("family") ? field<int>(j, "family", origin) : 0;
  spec.group_file = resolve(path, field<std::string>(j, "group", origin));
  spec.g0_generators = field<std::vector<std::string>>(j, "g0_generators", origin);
  if (spec.g0_generators.empty()) fail(ErrorKind::Parse, kModule, origin + ": g0_generators is empty");
  spec.tau_prime = field<std::string>(j, "tau_prime", origin);
  spec.cover_type = CoverType::parse(field<std::string>(j, "cover_type", origin));
  spec.vector = field<std::vector<std::string>>(j, "vector", origin);
  if (j.contains("extra_automorphisms")) {
    const auto& x = j.at("extra_automorphisms");
    const std::string xo = origin + " extra_automorphisms";
    ExtraAutomorphismSpec extra;
    extra.group_file = resolve(path, field<std::string>(x, "group", xo));
    if (!x.contains("vector")) fail(ErrorKind::Parse, kModule, xo + ": missing field 'vector'");
    if (x.at("vector").is_string()) {
      if (x.at("vector").get<std::string>() != "search")
        fail(ErrorKind::Parse, kModule, xo + ": vector must be a list of words or \"search\"");
      extra.search = true;
    } else {
      extra.vector = field<std::vector<std::string>>(x, "vector", xo);
    }
    spec.extra = std::move(extra);
  }
  return spec;
}

}  // namespace isoprod
