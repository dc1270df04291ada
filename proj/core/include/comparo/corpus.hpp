#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "comparo/label.hpp"
#include "comparo/upos.hpp"

namespace comparo {

struct Token {
  std::string text;
  std::optional<std::string> penn_pos;
  std::optional<Upos> upos;

  bool operator==(const Token&) const = default;
};

/// Tokens and their labels, aligned one-to-one.
struct LabeledSentence {
  std::vector<Token> tokens;
  std::vector<Label> labels;

  std::size_t size() const noexcept { return tokens.size(); }
  bool operator==(const LabeledSentence&) const = default;
};

struct Dataset {
  std::vector<LabeledSentence> sentences;
  std::string provenance = "manual";

  std::size_t size() const noexcept { return sentences.size(); }
  bool empty() const noexcept { return sentences.empty(); }
  bool operator==(const Dataset&) const = default;
};

/// Maximal run [start, end) of tokens sharing one non-None label.
struct EntitySpan {
  std::size_t start = 0;
  std::size_t end = 0;
  Label label = Label::kNone;

  bool operator==(const EntitySpan&) const = default;
};

/// Longest sentence, in tokens, kept by filter_trainable.
inline constexpr std::size_t kMaxTrainableLength = 30;

/// Reads the tab-separated corpus format: one token per line as
/// `token<TAB>penn_pos<TAB>label` or `token<TAB>label`, sentences separated
/// by a single blank line. Throws ParseError carrying the offending line.
Dataset parse_corpus(std::string_view text, std::string provenance = "manual");

/// Inverse of parse_corpus. Tokens with a Penn tag are written in the three
/// column form, others in the two column form. Upos is not serialized.
std::string serialize_corpus(const Dataset& dataset);

/// Keeps sentences of at most 30 tokens that contain a comparative Penn tag.
/// Every token must already carry penn_pos; PreconditionError otherwise.
Dataset filter_trainable(const Dataset& dataset);

/// Seeded shuffle, then the first floor(n * train_fraction) sentences become
/// the training part and the remainder the test part.
std::pair<Dataset, Dataset> split_dataset(const Dataset& dataset, double train_fraction,
                                          std::uint64_t seed);

std::vector<EntitySpan> entity_spans(const LabeledSentence& sentence);

/// Throws PreconditionError unless labels and tokens align and are non-empty.
void check_sentence(const LabeledSentence& sentence, std::size_t index);

}  // namespace comparo
