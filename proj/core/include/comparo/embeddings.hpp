#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "comparo/corpus.hpp"
#include "comparo/upos.hpp"

namespace comparo {

/// Frozen word vectors, keyed by lowercased word.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return vectors_.size(); }

  /// Returns false (and keeps the existing vector) when the word is present.
  /// Throws ShapeError on a length mismatch.
  bool insert(std::string_view word, std::vector<double> vector);

  /// Case-insensitive.
  std::optional<std::span<const double>> lookup(std::string_view word) const;

  /// Order-independent FNV-1a digest over words and the exact bits of every
  /// component.
  std::uint64_t checksum() const;

  /// Stored words in sorted order.
  std::vector<std::string> words() const;

 private:
  std::size_t dim_ = 0;
  std::unordered_map<std::string, std::vector<double>> vectors_;
};

/// GloVe text format: `word v1 v2 ... vd` per line, d taken from the first
/// line. No header line.
EmbeddingTable load_glove(std::string_view text);

/// Word vector (zeros when out of vocabulary) followed by a 17-wide one-hot
/// of the universal tag.
Eigen::VectorXd embed_token(std::string_view word, Upos upos, const EmbeddingTable& table);

/// One row per token, width dim + 17. Rows are tokens.
using SentenceEncoding = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Throws PreconditionError when a token has no upos.
SentenceEncoding encode_sentence(const LabeledSentence& sentence, const EmbeddingTable& table);

}  // namespace comparo
