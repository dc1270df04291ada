#include "comparo/weak_label.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "comparo/errors.hpp"
#include "comparo/resources.hpp"

namespace comparo {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end > pos) parts.emplace_back(text.substr(pos, end - pos));
    pos = end;
  }
  return parts;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

// "name(args)" -> args, or nullopt when `slot` is not of that form.
std::optional<std::string_view> call_args(std::string_view slot, std::string_view name) {
  if (slot.size() < name.size() + 2 || !slot.starts_with(name) || slot[name.size()] != '(' ||
      slot.back() != ')') {
    return std::nullopt;
  }
  return slot.substr(name.size() + 1, slot.size() - name.size() - 2);
}

SlotMatcher parse_slot(std::string_view text) {
  if (text == "cmp") return slot::ComparativeWord{};
  if (auto args = call_args(text, "gap")) {
    std::size_t n = 0;
    const auto* end = args->data() + args->size();
    const auto [ptr, ec] = std::from_chars(args->data(), end, n);
    if (ec != std::errc{} || ptr != end || args->empty()) {
      throw std::invalid_argument("bad gap bound in '" + std::string(text) + "'");
    }
    return slot::WildcardGap{n};
  }
  if (auto args = call_args(text, "lit")) {
    slot::LiteralAlternatives lit;
    std::size_t begin = 0;
    while (begin <= args->size()) {
      std::size_t bar = args->find('|', begin);
      if (bar == std::string_view::npos) bar = args->size();
      const auto word = args->substr(begin, bar - begin);
      if (word.empty()) throw std::invalid_argument("empty alternative in '" + std::string(text) + "'");
      lit.words.push_back(to_lower(word));
      begin = bar + 1;
    }
    return lit;
  }
  if (auto args = call_args(text, "dict")) {
    const std::size_t eq = args->find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw std::invalid_argument("expected dict(NAME=LABEL), got '" + std::string(text) + "'");
    }
    const auto label = parse_label(args->substr(eq + 1));
    if (!label) throw std::invalid_argument("unknown label in '" + std::string(text) + "'");
    return slot::DictEntry{std::string(args->substr(0, eq)), *label};
  }
  throw std::invalid_argument("unknown slot '" + std::string(text) + "'");
}

class RuleMatcher {
 public:
  RuleMatcher(const PatternRule& rule, std::span<const std::string> tokens,
              std::span<const std::string> penn, const DictionaryMap& dictionaries)
      : rule_(rule), tokens_(tokens), penn_(penn), dictionaries_(dictionaries),
        ranges_(rule.slots.size()) {
    lowered_.reserve(tokens.size());
    for (const auto& t : tokens) lowered_.push_back(to_lower(t));
  }

  bool match(std::size_t slot_index, std::size_t pos) {
    if (slot_index == rule_.slots.size()) return true;
    const std::size_t n = tokens_.size();
    auto consume = [&](std::size_t length) {
      ranges_[slot_index] = {pos, pos + length};
      return match(slot_index + 1, pos + length);
    };
    return std::visit(
        Overloaded{
            [&](const slot::DictEntry& entry) {
              if (pos >= n) return false;
              const Dictionary& dict = dictionaries_.find(entry.dictionary)->second;
              const std::size_t longest = std::min(dict.max_tokens(), n - pos);
              std::string phrase;
              std::vector<std::size_t> lengths;
              for (std::size_t len = 1; len <= longest; ++len) {
                if (len > 1) phrase += ' ';
                phrase += lowered_[pos + len - 1];
                if (dict.contains(phrase)) lengths.push_back(len);
              }
              for (auto it = lengths.rbegin(); it != lengths.rend(); ++it) {
                if (consume(*it)) return true;
              }
              return false;
            },
            [&](const slot::ComparativeWord&) {
              return pos < n && is_comparative(penn_[pos]) && consume(1);
            },
            [&](const slot::LiteralAlternatives& lit) {
              return pos < n &&
                     std::find(lit.words.begin(), lit.words.end(), lowered_[pos]) !=
                         lit.words.end() &&
                     consume(1);
            },
            [&](const slot::WildcardGap& gap) {
              for (std::size_t k = 0; k <= gap.max_tokens && pos + k <= n; ++k) {
                if (consume(k)) return true;
              }
              return false;
            },
        },
        rule_.slots[slot_index]);
  }

  const std::vector<std::pair<std::size_t, std::size_t>>& ranges() const { return ranges_; }

 private:
  const PatternRule& rule_;
  std::span<const std::string> tokens_;
  std::span<const std::string> penn_;
  const DictionaryMap& dictionaries_;
  std::vector<std::string> lowered_;
  std::vector<std::pair<std::size_t, std::size_t>> ranges_;
};

void check_dictionaries(const PatternRule& rule, const DictionaryMap& dictionaries) {
  for (const auto& s : rule.slots) {
    if (const auto* entry = std::get_if<slot::DictEntry>(&s)) {
      if (!dictionaries.contains(entry->dictionary)) {
        throw std::invalid_argument("pattern '" + rule.name + "' references unknown dictionary '" +
                                    entry->dictionary + "'");
      }
    }
  }
}

}  // namespace

void Dictionary::add(std::string_view phrase) {
  const auto words = split_whitespace(phrase);
  if (words.empty()) return;
  std::string normalized;
  for (const auto& word : words) {
    if (!normalized.empty()) normalized += ' ';
    normalized += to_lower(word);
  }
  entries_.insert(std::move(normalized));
  max_tokens_ = std::max(max_tokens_, words.size());
}

Dictionary load_dictionary(std::string_view text, std::string name) {
  Dictionary dictionary(std::move(name));
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    dictionary.add(text.substr(pos, eol - pos));
    pos = eol + 1;
  }
  return dictionary;
}

std::optional<std::size_t> match_dictionary(std::span<const std::string> tokens, std::size_t start,
                                            const Dictionary& dictionary) {
  if (start >= tokens.size()) throw std::out_of_range("match_dictionary: start past the end");
  const std::size_t longest = std::min(dictionary.max_tokens(), tokens.size() - start);
  std::optional<std::size_t> best;
  std::string phrase;
  for (std::size_t len = 1; len <= longest; ++len) {
    if (len > 1) phrase += ' ';
    phrase += to_lower(tokens[start + len - 1]);
    if (dictionary.contains(phrase)) best = len;
  }
  return best;
}

void validate_rule(const PatternRule& rule) {
  if (rule.name.empty()) throw std::invalid_argument("pattern rule has no name");
  bool has_comparative = false;
  bool has_dictionary = false;
  for (const auto& s : rule.slots) {
    if (std::holds_alternative<slot::ComparativeWord>(s)) has_comparative = true;
    if (const auto* entry = std::get_if<slot::DictEntry>(&s)) {
      if (entry->label == Label::kNone) {
        throw std::invalid_argument("pattern '" + rule.name + "': dictionary slot labeled None");
      }
      has_dictionary = true;
    }
    if (const auto* lit = std::get_if<slot::LiteralAlternatives>(&s); lit && lit->words.empty()) {
      throw std::invalid_argument("pattern '" + rule.name + "': empty literal set");
    }
  }
  if (!has_comparative) {
    throw std::invalid_argument("pattern '" + rule.name + "' has no cmp slot");
  }
  if (!has_dictionary) {
    throw std::invalid_argument("pattern '" + rule.name + "' has no dict slot");
  }
}

PatternRule parse_pattern_rule(std::string_view line) {
  const std::size_t colon = line.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected 'name: slots...'", 0);
  PatternRule rule;
  rule.name = std::string(trim(line.substr(0, colon)));
  try {
    for (const auto& text : split_whitespace(line.substr(colon + 1))) {
      rule.slots.push_back(parse_slot(text));
    }
    validate_rule(rule);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
  return rule;
}

std::vector<PatternRule> parse_pattern_file(std::string_view text) {
  std::vector<PatternRule> rules;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    try {
      rules.push_back(parse_pattern_rule(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return rules;
}

std::string format_pattern_rule(const PatternRule& rule) {
  std::string out = rule.name + ":";
  for (const auto& s : rule.slots) {
    out += ' ';
    std::visit(Overloaded{
                   [&](const slot::DictEntry& e) {
                     out += "dict(" + e.dictionary + "=" + std::string(to_string(e.label)) + ")";
                   },
                   [&](const slot::ComparativeWord&) { out += "cmp"; },
                   [&](const slot::LiteralAlternatives& lit) {
                     out += "lit(";
                     for (std::size_t i = 0; i < lit.words.size(); ++i) {
                       if (i > 0) out += '|';
                       out += lit.words[i];
                     }
                     out += ')';
                   },
                   [&](const slot::WildcardGap& gap) {
                     out += "gap(" + std::to_string(gap.max_tokens) + ")";
                   },
               },
               s);
  }
  return out;
}

const std::vector<PatternRule>& default_patterns() {
  static const std::vector<PatternRule> rules = parse_pattern_file(resources::default_patterns());
  return rules;
}

DictionaryMap default_dictionaries() {
  DictionaryMap dictionaries;
  dictionaries.emplace("aspects", load_dictionary(resources::aspects_dictionary(), "aspects"));
  dictionaries.emplace("products", load_dictionary(resources::products_dictionary(), "products"));
  return dictionaries;
}

std::optional<LabeledSentence> apply_pattern(const PatternRule& rule,
                                             std::span<const std::string> tokens,
                                             std::span<const std::string> penn,
                                             const DictionaryMap& dictionaries) {
  if (tokens.size() != penn.size()) {
    throw PreconditionError("apply_pattern: " + std::to_string(tokens.size()) + " tokens but " +
                            std::to_string(penn.size()) + " tags");
  }
  check_dictionaries(rule, dictionaries);

  RuleMatcher matcher(rule, tokens, penn, dictionaries);
  for (std::size_t start = 0; start < tokens.size(); ++start) {
    if (!matcher.match(0, start)) continue;

    LabeledSentence sentence;
    sentence.tokens.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      sentence.tokens.push_back(Token{tokens[i], penn[i], penn_to_universal(penn[i])});
    }
    sentence.labels.assign(tokens.size(), Label::kNone);
    for (std::size_t s = 0; s < rule.slots.size(); ++s) {
      std::optional<Label> label;
      if (const auto* entry = std::get_if<slot::DictEntry>(&rule.slots[s])) label = entry->label;
      if (std::holds_alternative<slot::ComparativeWord>(rule.slots[s])) label = Label::kPredicate;
      if (!label) continue;
      const auto [begin, end] = matcher.ranges()[s];
      std::fill(sentence.labels.begin() + static_cast<std::ptrdiff_t>(begin),
                sentence.labels.begin() + static_cast<std::ptrdiff_t>(end), *label);
    }
    return sentence;
  }
  return std::nullopt;
}

WeakLabelResult weak_label(std::span<const std::string> raw, std::span<const PatternRule> rules,
                           const DictionaryMap& dictionaries, const TagLexicon& lexicon) {
  for (const auto& rule : rules) check_dictionaries(rule, dictionaries);

  WeakLabelResult result;
  result.dataset.provenance = "weak";
  result.rule_hits.assign(rules.size(), 0);
  result.total = raw.size();
  for (const auto& text : raw) {
    const auto tokens = tokenize(text);
    if (tokens.empty()) continue;
    const auto penn = pos_tag(tokens, lexicon);
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if (auto labeled = apply_pattern(rules[r], tokens, penn, dictionaries)) {
        result.dataset.sentences.push_back(std::move(*labeled));
        ++result.rule_hits[r];
        break;
      }
    }
  }
  return result;
}

Dataset weak_label_corpus(std::span<const std::string> raw, std::span<const PatternRule> rules,
                          const DictionaryMap& dictionaries, const TagLexicon& lexicon) {
  return weak_label(raw, rules, dictionaries, lexicon).dataset;
}

}  // namespace comparo
