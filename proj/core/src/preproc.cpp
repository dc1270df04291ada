#include "comparo/preproc.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "comparo/errors.hpp"
#include "comparo/resources.hpp"

namespace comparo {
namespace {

constexpr std::array<std::string_view, kNumUpos> kUposNames = {
    "ADJ",  "ADP",  "ADV",   "AUX",   "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X"};

constexpr std::string_view kBoundaryPunct = ".,;:!?()\"'";

bool is_boundary_punct(char c) { return kBoundaryPunct.find(c) != std::string_view::npos; }

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Splits `text` into lines and hands each non-comment line's two tab
// fields to `fn` together with its 1-based line number.
template <typename Fn>
void for_each_pair_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t tab = line.find('\t');
    if (line.empty() || (line.front() == '#' && tab == std::string_view::npos)) continue;
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
      throw ParseError("expected exactly two tab-separated fields", line_no);
    }
    const std::string_view key = line.substr(0, tab);
    const std::string_view value = line.substr(tab + 1);
    if (key.empty() || value.empty()) throw ParseError("empty field", line_no);
    fn(key, value, line_no);
  }
}

}  // namespace

std::string_view to_string(Upos tag) noexcept { return kUposNames[upos_index(tag)]; }

std::optional<Upos> parse_upos(std::string_view text) noexcept {
  for (std::size_t i = 0; i < kUposNames.size(); ++i) {
    if (kUposNames[i] == text) return static_cast<Upos>(i);
  }
  return std::nullopt;
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string> tokenize(std::string_view raw) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < raw.size()) {
    while (pos < raw.size() && is_space(raw[pos])) ++pos;
    std::size_t end = pos;
    while (end < raw.size() && !is_space(raw[end])) ++end;
    std::string_view chunk = raw.substr(pos, end - pos);
    pos = end;
    if (chunk.empty()) continue;

    while (!chunk.empty() && is_boundary_punct(chunk.front())) {
      tokens.emplace_back(1, chunk.front());
      chunk.remove_prefix(1);
    }
    std::size_t core_end = chunk.size();
    while (core_end > 0 && is_boundary_punct(chunk[core_end - 1])) --core_end;
    if (core_end > 0) tokens.emplace_back(chunk.substr(0, core_end));
    for (std::size_t i = core_end; i < chunk.size(); ++i) tokens.emplace_back(1, chunk[i]);
  }
  return tokens;
}

TagLexicon TagLexicon::from_text(std::string_view lexicon_text, std::string_view suffix_text) {
  TagLexicon lexicon;
  for_each_pair_line(lexicon_text, [&](std::string_view word, std::string_view tag, std::size_t) {
    lexicon.add_word(word, std::string(tag));
  });
  for_each_pair_line(suffix_text, [&](std::string_view suffix, std::string_view tag, std::size_t) {
    lexicon.add_suffix_rule(to_lower(suffix), std::string(tag));
  });
  return lexicon;
}

const TagLexicon& TagLexicon::builtin() {
  static const TagLexicon lexicon =
      TagLexicon::from_text(resources::penn_lexicon(), resources::suffix_rules());
  return lexicon;
}

void TagLexicon::add_word(std::string_view word, std::string tag) {
  words_.try_emplace(to_lower(word), std::move(tag));
}

void TagLexicon::add_suffix_rule(std::string suffix, std::string tag) {
  SuffixRule rule{std::move(suffix), std::move(tag)};
  // Insert after every rule whose suffix is at least as long.
  const auto at = std::find_if(suffix_rules_.begin(), suffix_rules_.end(), [&](const SuffixRule& r) {
    return r.suffix.size() < rule.suffix.size();
  });
  suffix_rules_.insert(at, std::move(rule));
}

std::optional<std::string_view> TagLexicon::lookup(std::string_view word) const {
  const auto it = words_.find(to_lower(word));
  if (it == words_.end()) return std::nullopt;
  return std::string_view(it->second);
}

std::optional<std::string_view> TagLexicon::match_suffix(std::string_view word) const {
  const std::string lower = to_lower(word);
  for (const auto& rule : suffix_rules_) {
    if (lower.size() > rule.suffix.size() && lower.ends_with(rule.suffix)) {
      return std::string_view(rule.tag);
    }
  }
  return std::nullopt;
}

std::vector<std::string> pos_tag(const std::vector<std::string>& tokens, const TagLexicon& lexicon) {
  std::vector<std::string> tags;
  tags.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& token = tokens[i];
    if (auto hit = lexicon.lookup(token)) {
      tags.emplace_back(*hit);
    } else if (i > 0 && !token.empty() && std::isupper(static_cast<unsigned char>(token[0]))) {
      tags.emplace_back("NNP");
    } else if (auto rule = lexicon.match_suffix(token)) {
      tags.emplace_back(*rule);
    } else {
      tags.emplace_back("NN");
    }
  }
  return tags;
}

UposMapping UposMapping::from_text(std::string_view text) {
  UposMapping mapping;
  for_each_pair_line(text, [&](std::string_view penn, std::string_view upos, std::size_t line) {
    const auto tag = parse_upos(upos);
    if (!tag) throw ParseError("unknown universal tag '" + std::string(upos) + "'", line);
    mapping.table_.try_emplace(std::string(penn), *tag);
  });
  return mapping;
}

const UposMapping& UposMapping::builtin() {
  static const UposMapping mapping = UposMapping::from_text(resources::penn_to_upos());
  return mapping;
}

Upos UposMapping::map(std::string_view penn) const {
  const auto it = table_.find(std::string(penn));
  return it == table_.end() ? Upos::kX : it->second;
}

Upos penn_to_universal(std::string_view penn) { return UposMapping::builtin().map(penn); }

bool is_comparative(std::string_view penn) noexcept {
  return penn == "JJR" || penn == "JJS" || penn == "RBR" || penn == "RBS";
}

LabeledSentence annotate_pos(LabeledSentence sentence, const TagLexicon& lexicon,
                             const UposMapping& mapping) {
  const bool missing = std::any_of(sentence.tokens.begin(), sentence.tokens.end(),
                                   [](const Token& t) { return !t.penn_pos.has_value(); });
  if (missing) {
    std::vector<std::string> words;
    words.reserve(sentence.tokens.size());
    for (const auto& token : sentence.tokens) words.push_back(token.text);
    auto tags = pos_tag(words, lexicon);
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      if (!sentence.tokens[i].penn_pos) sentence.tokens[i].penn_pos = std::move(tags[i]);
    }
  }
  for (auto& token : sentence.tokens) token.upos = mapping.map(*token.penn_pos);
  return sentence;
}

Dataset annotate_pos(Dataset dataset, const TagLexicon& lexicon, const UposMapping& mapping) {
  for (auto& sentence : dataset.sentences) {
    sentence = annotate_pos(std::move(sentence), lexicon, mapping);
  }
  return dataset;
}

LabeledSentence make_unlabeled_sentence(std::string_view raw, const TagLexicon& lexicon,
                                        const UposMapping& mapping) {
  LabeledSentence sentence;
  for (auto& word : tokenize(raw)) sentence.tokens.push_back(Token{std::move(word), {}, {}});
  sentence.labels.assign(sentence.tokens.size(), Label::kNone);
  return annotate_pos(std::move(sentence), lexicon, mapping);
}

}  // namespace comparo
