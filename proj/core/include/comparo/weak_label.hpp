#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "comparo/corpus.hpp"
#include "comparo/label.hpp"
#include "comparo/preproc.hpp"

namespace comparo {

/// Set of lowercased, single-space-normalized phrases.
class Dictionary {
 public:
  Dictionary() = default;
  explicit Dictionary(std::string name) : name_(std::move(name)) {}

  /// Adds a phrase after lowercasing and whitespace normalization. Blank
  /// phrases are ignored.
  void add(std::string_view phrase);

  bool contains(std::string_view normalized) const { return entries_.contains(normalized); }

  const std::string& name() const noexcept { return name_; }
  const std::set<std::string, std::less<>>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// Token count of the longest entry.
  std::size_t max_tokens() const noexcept { return max_tokens_; }

 private:
  std::string name_;
  std::set<std::string, std::less<>> entries_;
  std::size_t max_tokens_ = 0;
};

using DictionaryMap = std::map<std::string, Dictionary, std::less<>>;

/// One entry per non-empty line.
Dictionary load_dictionary(std::string_view text, std::string name);

/// Length in tokens of the longest entry of `dictionary` that matches
/// tokens[start..] case-insensitively.
std::optional<std::size_t> match_dictionary(std::span<const std::string> tokens, std::size_t start,
                                            const Dictionary& dictionary);

namespace slot {

struct DictEntry {
  std::string dictionary;
  Label label = Label::kAspect;
  bool operator==(const DictEntry&) const = default;
};

/// A single comparative-tagged token, labeled Predicate.
struct ComparativeWord {
  bool operator==(const ComparativeWord&) const = default;
};

struct LiteralAlternatives {
  std::vector<std::string> words;
  bool operator==(const LiteralAlternatives&) const = default;
};

/// Between 0 and max_tokens arbitrary tokens.
struct WildcardGap {
  std::size_t max_tokens = 0;
  bool operator==(const WildcardGap&) const = default;
};

}  // namespace slot

using SlotMatcher =
    std::variant<slot::DictEntry, slot::ComparativeWord, slot::LiteralAlternatives, slot::WildcardGap>;

struct PatternRule {
  std::string name;
  std::vector<SlotMatcher> slots;

  bool operator==(const PatternRule&) const = default;
};

/// Throws std::invalid_argument unless the rule has a comparative slot, a
/// dictionary slot, no None-labeled dictionary slot and no empty literal set.
void validate_rule(const PatternRule& rule);

/// Parses one `name: slot slot ...` line; see core/data/patterns.txt.
PatternRule parse_pattern_rule(std::string_view line);

/// One rule per line; blank lines and '#' comments are skipped.
std::vector<PatternRule> parse_pattern_file(std::string_view text);

std::string format_pattern_rule(const PatternRule& rule);

/// The shipped rules, in precedence order.
const std::vector<PatternRule>& default_patterns();

/// The shipped `aspects` and `products` dictionaries.
DictionaryMap default_dictionaries();

/// Tries every start offset left to right and returns the labeling of the
/// first full match. Dictionary slots prefer their longest match and gaps
/// their shortest, backtracking when a later slot fails.
std::optional<LabeledSentence> apply_pattern(const PatternRule& rule,
                                             std::span<const std::string> tokens,
                                             std::span<const std::string> penn,
                                             const DictionaryMap& dictionaries);

/// Result of labeling a batch of raw sentences.
struct WeakLabelResult {
  Dataset dataset;
  /// rule_hits[i] counts sentences labeled by rules[i].
  std::vector<std::size_t> rule_hits;
  std::size_t total = 0;
};

/// Tokenizes and tags each raw sentence, labels it with the first matching
/// rule and drops unmatched sentences. Output provenance is "weak".
WeakLabelResult weak_label(std::span<const std::string> raw, std::span<const PatternRule> rules,
                           const DictionaryMap& dictionaries, const TagLexicon& lexicon);

Dataset weak_label_corpus(std::span<const std::string> raw, std::span<const PatternRule> rules,
                          const DictionaryMap& dictionaries, const TagLexicon& lexicon);

}  // namespace comparo
