#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "comparo/corpus.hpp"
#include "comparo/upos.hpp"

namespace comparo {

/// Splits on whitespace, then peels the characters . , ; : ! ? ( ) " '
/// off both ends of each chunk as single-character tokens. Punctuation
/// inside a chunk is left alone.
std::vector<std::string> tokenize(std::string_view raw);

std::string to_lower(std::string_view text);

/// Word and suffix tables for the heuristic Penn tagger.
class TagLexicon {
 public:
  struct SuffixRule {
    std::string suffix;
    std::string tag;
  };

  TagLexicon() = default;

  /// Parses `word<TAB>TAG` and `suffix<TAB>TAG` lines. Blank lines and lines
  /// starting with '#' are skipped. The first entry for a word wins.
  static TagLexicon from_text(std::string_view lexicon_text, std::string_view suffix_text);

  /// The lexicon and suffix rules shipped with the library.
  static const TagLexicon& builtin();

  void add_word(std::string_view word, std::string tag);
  void add_suffix_rule(std::string suffix, std::string tag);

  std::optional<std::string_view> lookup(std::string_view word) const;
  std::optional<std::string_view> match_suffix(std::string_view word) const;

  /// Longest suffix first; equal lengths keep insertion order.
  const std::vector<SuffixRule>& suffix_rules() const noexcept { return suffix_rules_; }
  std::size_t word_count() const noexcept { return words_.size(); }

 private:
  std::unordered_map<std::string, std::string> words_;
  std::vector<SuffixRule> suffix_rules_;
};

/// Per token: lexicon hit, else NNP for a capitalized non-initial token,
/// else the first matching suffix rule, else NN.
std::vector<std::string> pos_tag(const std::vector<std::string>& tokens, const TagLexicon& lexicon);

/// Penn to universal tag table. Unknown Penn tags map to X.
class UposMapping {
 public:
  static UposMapping from_text(std::string_view text);
  static const UposMapping& builtin();

  Upos map(std::string_view penn) const;
  std::size_t size() const noexcept { return table_.size(); }

 private:
  std::unordered_map<std::string, Upos> table_;
};

/// Uses the shipped mapping table.
Upos penn_to_universal(std::string_view penn);

/// JJR, JJS, RBR, RBS.
bool is_comparative(std::string_view penn) noexcept;

/// Fills missing Penn tags with the heuristic tagger (existing tags are kept)
/// and sets upos on every token from its Penn tag.
LabeledSentence annotate_pos(LabeledSentence sentence, const TagLexicon& lexicon,
                             const UposMapping& mapping = UposMapping::builtin());

Dataset annotate_pos(Dataset dataset, const TagLexicon& lexicon,
                     const UposMapping& mapping = UposMapping::builtin());

/// Tokenizes and tags raw text into a sentence labeled all None.
LabeledSentence make_unlabeled_sentence(std::string_view raw, const TagLexicon& lexicon,
                                        const UposMapping& mapping = UposMapping::builtin());

}  // namespace comparo
