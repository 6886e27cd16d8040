#include "isoprod/presentation.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "isoprod/error.hpp"

namespace isoprod {

namespace {

constexpr const char* kModule = "presentation";

}  // namespace

Word::Word(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) { normalize(); }

void Word::normalize() {
  std::vector<Syllable> out;
  for (auto& s : syllables_) {
    if (s.exponent == 0) continue;
    if (!out.empty() && out.back().symbol == s.symbol) {
      out.back().exponent += s.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(std::move(s));
    }
  }
  syllables_ = std::move(out);
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& s : syllables_) n += s.exponent < 0 ? -s.exponent : s.exponent;
  return n;
}

Word Word::inverse() const {
  std::vector<Syllable> out(syllables_.rbegin(), syllables_.rend());
  for (auto& s : out) s.exponent = -s.exponent;
  return Word(std::move(out));
}

Word Word::power(std::int64_t k) const {
  const Word base = k < 0 ? inverse() : *this;
  std::vector<Syllable> out;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i)
    out.insert(out.end(), base.syllables_.begin(), base.syllables_.end());
  return Word(std::move(out));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Syllable> out = a.syllables_;
  out.insert(out.end(), b.syllables_.begin(), b.syllables_.end());
  return Word(std::move(out));
}

std::string Word::to_string() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < syllables_.size(); ++i) {
    if (i) out += '*';
    out += syllables_[i].symbol;
    if (syllables_[i].exponent != 1) out += '^' + std::to_string(syllables_[i].exponent);
  }
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Word parse() {
    skip_space();
    Word w = word();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  Word word() {
    Word w = term();
    for (;;) {
      skip_space();
      if (peek() != '*') return w;
      ++pos_;
      w = w * term();
    }
  }

  Word term() {
    Word a = atom();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      a = a.power(integer());
    }
    return a;
  }

  Word atom() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = word();
      skip_space();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return w;
    }
    if (c == '1') {
      ++pos_;
      return Word();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string symbol(text_.substr(start, pos_ - start));
      if (!alphabet_.contains(symbol)) {
        fail(ErrorKind::Parse, kModule, "unknown symbol '" + symbol + "' at position " + std::to_string(start));
      }
      return Word({Syllable{std::move(symbol), 1}});
    }
    error(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  std::int64_t integer() {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected integer exponent");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) error("exponent overflow");
      v = v * 10 + (text_[pos_++] - '0');
    }
    return negative ? -v : v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, kModule, "syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) { return WordParser(text, alphabet).parse(); }

void Presentation::validate() const {
  if (generators.empty()) fail(ErrorKind::Validation, kModule, "presentation without generators");
  Alphabet alphabet(generators.begin(), generators.end());
  if (alphabet.size() != generators.size()) fail(ErrorKind::Validation, kModule, "duplicate generator symbol");
  for (const auto& r : relators)
    for (const auto& s : r.syllables())
      if (!alphabet.contains(s.symbol))
        fail(ErrorKind::Validation, kModule, "relator uses undeclared symbol '" + s.symbol + "'");
}

Presentation parse_presentation(const std::vector<std::string>& generators,
                                const std::vector<std::string>& relators) {
  Presentation p;
  p.generators = generators;
  Alphabet alphabet(generators.begin(), generators.end());
  for (const auto& r : relators) p.relators.push_back(parse_word(r, alphabet));
  p.validate();
  return p;
}

namespace {

/// Coset table for HLT enumeration. Column 2k is generator k, column 2k+1 its inverse.
class CosetTable {
 public:
  static constexpr std::int64_t kUndefined = -1;

  CosetTable(std::size_t columns, std::size_t max_cosets) : columns_(columns), max_cosets_(max_cosets) {
    new_row();
  }

  std::size_t rows() const { return forward_.size(); }
  bool alive(std::size_t c) const { return forward_[c] == static_cast<std::int64_t>(c); }
  std::int64_t get(std::size_t c, std::size_t col) const { return table_[c * columns_ + col]; }
  void set(std::size_t c, std::size_t col, std::int64_t v) { table_[c * columns_ + col] = v; }
  static std::size_t inverse_column(std::size_t col) { return col ^ 1u; }

  void define(std::size_t c, std::size_t col) {
    const auto d = new_row();
    set(c, col, static_cast<std::int64_t>(d));
    set(d, inverse_column(col), static_cast<std::int64_t>(c));
  }

  void scan_and_fill(std::size_t coset, const std::vector<std::size_t>& relator) {
    if (relator.empty()) return;
    std::int64_t f = static_cast<std::int64_t>(coset);
    std::int64_t b = f;
    std::size_t i = 0;
    std::size_t j = relator.size();  // one past the last unscanned letter
    for (;;) {
      while (i < j && get(f, relator[i]) != kUndefined) f = get(f, relator[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && get(b, inverse_column(relator[j - 1])) != kUndefined)
        b = get(b, inverse_column(relator[--j]));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set(f, relator[i], b);
        set(b, inverse_column(relator[i]), f);
        return;
      }
      define(f, relator[i]);
    }
  }

  void coincidence(std::int64_t a, std::int64_t b) {
    std::vector<std::int64_t> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto gamma = queue[q];
      for (std::size_t col = 0; col < columns_; ++col) {
        const auto delta = get(gamma, col);
        if (delta == kUndefined) continue;
        set(delta, inverse_column(col), kUndefined);
        const auto mu = rep(gamma);
        const auto nu = rep(delta);
        if (get(mu, col) != kUndefined) {
          merge(nu, get(mu, col), queue);
        } else if (get(nu, inverse_column(col)) != kUndefined) {
          merge(mu, get(nu, inverse_column(col)), queue);
        } else {
          set(mu, col, nu);
          set(nu, inverse_column(col), mu);
        }
      }
    }
  }

 private:
  std::size_t new_row() {
    if (forward_.size() >= max_cosets_) {
      fail(ErrorKind::Budget, kModule,
           "coset budget of " + std::to_string(max_cosets_) +
               " exhausted (presentation may define an infinite group)");
    }
    const auto c = forward_.size();
    forward_.push_back(static_cast<std::int64_t>(c));
    table_.resize(table_.size() + columns_, kUndefined);
    return c;
  }

  std::int64_t rep(std::int64_t c) {
    std::int64_t r = c;
    while (forward_[r] != r) r = forward_[r];
    while (forward_[c] != r) {
      const auto next = forward_[c];
      forward_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int64_t a, std::int64_t b, std::vector<std::int64_t>& queue) {
    const auto ra = rep(a);
    const auto rb = rep(b);
    if (ra == rb) return;
    const auto lo = std::min(ra, rb);
    const auto hi = std::max(ra, rb);
    forward_[hi] = lo;
    queue.push_back(hi);
  }

  std::size_t columns_;
  std::size_t max_cosets_;
  std::vector<std::int64_t> forward_;
  std::vector<std::int64_t> table_;
};

}  // namespace

ToddCoxeterResult todd_coxeter(const Presentation& presentation, std::size_t max_cosets) {
  presentation.validate();
  if (max_cosets < 1) fail(ErrorKind::Validation, kModule, "max_cosets must be at least 1");

  std::map<std::string, std::size_t, std::less<>> column_of;
  for (std::size_t k = 0; k < presentation.generators.size(); ++k) column_of[presentation.generators[k]] = 2 * k;

  std::vector<std::vector<std::size_t>> relators;
  for (const auto& r : presentation.relators) {
    std::vector<std::size_t> letters;
    for (const auto& s : r.syllables()) {
      const auto col = column_of.at(s.symbol) + (s.exponent < 0 ? 1 : 0);
      for (std::int64_t e = 0; e < (s.exponent < 0 ? -s.exponent : s.exponent); ++e) letters.push_back(col);
    }
    relators.push_back(std::move(letters));
  }

  const std::size_t columns = 2 * presentation.generators.size();
  CosetTable table(columns, max_cosets);
  for (std::size_t c = 0; c < table.rows(); ++c) {
    for (const auto& r : relators) {
      if (!table.alive(c)) break;
      table.scan_and_fill(c, r);
    }
    for (std::size_t col = 0; col < columns; ++col) {
      if (!table.alive(c)) break;
      if (table.get(c, col) == CosetTable::kUndefined) table.define(c, col);
    }
  }

  // Renumber live cosets in order of first definition.
  std::vector<std::int64_t> renumber(table.rows(), -1);
  std::uint32_t live = 0;
  for (std::size_t c = 0; c < table.rows(); ++c)
    if (table.alive(c)) renumber[c] = live++;

  ToddCoxeterResult result;
  result.cosets_defined = table.rows();
  for (std::size_t k = 0; k < presentation.generators.size(); ++k) {
    // Coset c goes to c x^-1, so words multiply as composed functions.
    std::vector<std::uint32_t> images(live);
    for (std::size_t c = 0; c < table.rows(); ++c) {
      if (!table.alive(c)) continue;
      const auto target = table.get(c, 2 * k + 1);
      if (target == CosetTable::kUndefined || renumber[target] < 0)
        fail(ErrorKind::Assertion, kModule, "incomplete coset table after enumeration");
      images[renumber[c]] = static_cast<std::uint32_t>(renumber[target]);
    }
    result.generator_images.push_back(Permutation::from_zero_based(std::move(images)));
  }
  result.group = FiniteGroup::closure(result.generator_images);
  if (result.group->order() != live) {
    fail(ErrorKind::Assertion, kModule,
         "coset action is not regular: " + std::to_string(live) + " cosets but group order " +
             std::to_string(result.group->order()));
  }
  return result;
}

Elem evaluate_word(const Word& word, const FiniteGroup& group, const Assignment& assignment) {
  Elem acc = FiniteGroup::kIdentity;
  for (const auto& s : word.syllables()) {
    auto it = assignment.find(s.symbol);
    if (it == assignment.end()) fail(ErrorKind::Validation, kModule, "no assignment for symbol '" + s.symbol + "'");
    acc = group.mul(acc, group.pow(it->second, s.exponent));
  }
  return acc;
}

}  // namespace isoprod
