#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "isoprod/finite_group.hpp"

namespace isoprod {

struct Syllable {
  std::string symbol;
  std::int64_t exponent = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A word in named generators. Normalized: adjacent syllables carry distinct
/// symbols and no exponent is zero.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  /// Sum of |exponent| over the syllables.
  std::int64_t length() const;

  Word inverse() const;
  Word power(std::int64_t k) const;
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

  /// Prints in the input grammar, e.g. "x^2*y^-1". The empty word prints as "1".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Syllable> syllables_;
};

using Alphabet = std::set<std::string, std::less<>>;

/// Parses `word := term ('*' term)*`, `term := atom ('^' int)?`,
/// `atom := symbol | '(' word ')'`. The literal "1" denotes the empty word.
Word parse_word(std::string_view text, const Alphabet& alphabet);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Checks that every relator only uses declared generators.
  void validate() const;
};

Presentation parse_presentation(const std::vector<std::string>& generators,
                                const std::vector<std::string>& relators);

struct ToddCoxeterResult {
  GroupPtr group;
  /// Permutation of the cosets for each presentation generator, in order.
  std::vector<Permutation> generator_images;
  std::size_t cosets_defined = 0;
};

inline constexpr std::size_t kDefaultMaxCosets = 100'000;

/// Enumerates the cosets of the trivial subgroup (HLT strategy) and returns
/// the regular permutation representation. Throws ErrorKind::Budget when more
/// than `max_cosets` cosets would be live at once.
ToddCoxeterResult todd_coxeter(const Presentation& presentation,
                               std::size_t max_cosets = kDefaultMaxCosets);

using Assignment = std::map<std::string, Elem, std::less<>>;

/// Evaluates `word` in `group` with the given symbol assignment.
Elem evaluate_word(const Word& word, const FiniteGroup& group, const Assignment& assignment);

}  // namespace isoprod
