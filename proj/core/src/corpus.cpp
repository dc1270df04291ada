#include "comparo/corpus.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "comparo/errors.hpp"
#include "comparo/preproc.hpp"
#include "comparo/rng.hpp"

namespace comparo {
namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t begin = 0;
  while (true) {
    const std::size_t tab = line.find('\t', begin);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(begin));
      return fields;
    }
    fields.push_back(line.substr(begin, tab - begin));
    begin = tab + 1;
  }
}

bool has_whitespace(std::string_view text) {
  return text.find_first_of(" \t\r\n\v\f") != std::string_view::npos;
}

}  // namespace

Dataset parse_corpus(std::string_view text, std::string provenance) {
  if (provenance.empty()) throw std::invalid_argument("dataset provenance must not be empty");
  Dataset dataset;
  dataset.provenance = std::move(provenance);

  LabeledSentence current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.empty()) {
      if (current.tokens.empty()) throw ParseError("empty sentence block", line_no);
      dataset.sentences.push_back(std::move(current));
      current = {};
      continue;
    }

    const auto fields = split_tabs(line);
    if (fields.size() != 2 && fields.size() != 3) {
      throw ParseError("expected 2 or 3 tab-separated columns, found " +
                           std::to_string(fields.size()),
                       line_no);
    }
    Token token;
    if (fields[0].empty()) throw ParseError("empty token", line_no);
    if (has_whitespace(fields[0])) throw ParseError("token contains whitespace", line_no);
    token.text = std::string(fields[0]);
    if (fields.size() == 3) {
      if (fields[1].empty() || has_whitespace(fields[1])) {
        throw ParseError("invalid POS column", line_no);
      }
      token.penn_pos = std::string(fields[1]);
    }
    const auto label = parse_label(fields.back());
    if (!label) throw ParseError("unknown label '" + std::string(fields.back()) + "'", line_no);

    current.tokens.push_back(std::move(token));
    current.labels.push_back(*label);
  }
  if (!current.tokens.empty()) dataset.sentences.push_back(std::move(current));
  return dataset;
}

std::string serialize_corpus(const Dataset& dataset) {
  std::string out;
  for (const auto& sentence : dataset.sentences) {
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      const Token& token = sentence.tokens[i];
      out += token.text;
      out += '\t';
      if (token.penn_pos) {
        out += *token.penn_pos;
        out += '\t';
      }
      out += to_string(sentence.labels[i]);
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

Dataset filter_trainable(const Dataset& dataset) {
  Dataset kept;
  kept.provenance = dataset.provenance;
  for (std::size_t i = 0; i < dataset.sentences.size(); ++i) {
    const auto& sentence = dataset.sentences[i];
    bool comparative = false;
    for (std::size_t j = 0; j < sentence.tokens.size(); ++j) {
      const auto& penn = sentence.tokens[j].penn_pos;
      if (!penn) {
        throw PreconditionError("sentence " + std::to_string(i) + ": token " + std::to_string(j) +
                                " has no Penn POS tag");
      }
      comparative = comparative || is_comparative(*penn);
    }
    if (comparative && sentence.size() <= kMaxTrainableLength) kept.sentences.push_back(sentence);
  }
  return kept;
}

std::pair<Dataset, Dataset> split_dataset(const Dataset& dataset, double train_fraction,
                                          std::uint64_t seed) {
  if (dataset.empty()) throw PreconditionError("cannot split an empty dataset");
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw std::invalid_argument("train fraction must lie in (0, 1)");
  }
  std::vector<std::size_t> order(dataset.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  rng.shuffle(order.begin(), order.end());

  const auto train_size = static_cast<std::size_t>(
      std::floor(static_cast<double>(dataset.size()) * train_fraction));
  Dataset train, test;
  train.provenance = test.provenance = dataset.provenance;
  for (std::size_t k = 0; k < order.size(); ++k) {
    (k < train_size ? train : test).sentences.push_back(dataset.sentences[order[k]]);
  }
  return {std::move(train), std::move(test)};
}

std::vector<EntitySpan> entity_spans(const LabeledSentence& sentence) {
  std::vector<EntitySpan> spans;
  const auto& labels = sentence.labels;
  std::size_t i = 0;
  while (i < labels.size()) {
    if (labels[i] == Label::kNone) {
      ++i;
      continue;
    }
    std::size_t end = i + 1;
    while (end < labels.size() && labels[end] == labels[i]) ++end;
    spans.push_back({i, end, labels[i]});
    i = end;
  }
  return spans;
}

void check_sentence(const LabeledSentence& sentence, std::size_t index) {
  if (sentence.tokens.empty()) {
    throw PreconditionError("sentence " + std::to_string(index) + " is empty");
  }
  if (sentence.tokens.size() != sentence.labels.size()) {
    throw PreconditionError("sentence " + std::to_string(index) + " has " +
                            std::to_string(sentence.tokens.size()) + " tokens but " +
                            std::to_string(sentence.labels.size()) + " labels");
  }
}

}  // namespace comparo
