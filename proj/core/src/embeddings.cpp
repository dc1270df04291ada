#include "comparo/embeddings.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

#include "comparo/errors.hpp"
#include "comparo/preproc.hpp"

namespace comparo {
namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& hash, std::uint8_t byte) {
  hash ^= byte;
  hash *= kFnvPrime;
}

void fnv_mix_u64(std::uint64_t& hash, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) fnv_mix(hash, static_cast<std::uint8_t>(value >> (8 * i)));
}

}  // namespace

bool EmbeddingTable::insert(std::string_view word, std::vector<double> vector) {
  if (vector.size() != dim_) {
    throw ShapeError("embedding for '" + std::string(word) + "' has " +
                     std::to_string(vector.size()) + " components, table dim is " +
                     std::to_string(dim_));
  }
  return vectors_.try_emplace(to_lower(word), std::move(vector)).second;
}

std::optional<std::span<const double>> EmbeddingTable::lookup(std::string_view word) const {
  const auto it = vectors_.find(to_lower(word));
  if (it == vectors_.end()) return std::nullopt;
  return std::span<const double>(it->second);
}

std::vector<std::string> EmbeddingTable::words() const {
  std::vector<std::string> out;
  out.reserve(vectors_.size());
  for (const auto& [word, _] : vectors_) out.push_back(word);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t EmbeddingTable::checksum() const {
  std::uint64_t hash = kFnvOffset;
  fnv_mix_u64(hash, dim_);
  for (const auto& word : words()) {
    for (char c : word) fnv_mix(hash, static_cast<std::uint8_t>(c));
    fnv_mix(hash, 0);
    for (double v : vectors_.at(word)) fnv_mix_u64(hash, std::bit_cast<std::uint64_t>(v));
  }
  return hash;
}

EmbeddingTable load_glove(std::string_view text) {
  EmbeddingTable table;
  bool have_dim = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::vector<std::string_view> fields;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    fields.clear();
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t end = i;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      if (end > i) fields.push_back(line.substr(i, end - i));
      i = end;
    }
    if (fields.empty()) continue;

    const std::size_t components = fields.size() - 1;
    if (!have_dim) {
      if (components == 0) throw ParseError("word has no vector components", line_no);
      table = EmbeddingTable(components);
      have_dim = true;
    } else if (components != table.dim()) {
      throw ParseError("expected " + std::to_string(table.dim()) + " components, found " +
                           std::to_string(components),
                       line_no);
    }

    std::vector<double> vector(components);
    for (std::size_t k = 0; k < components; ++k) {
      const std::string_view field = fields[k + 1];
      const char* last = field.data() + field.size();
      const auto [ptr, ec] = std::from_chars(field.data(), last, vector[k]);
      if (ec != std::errc{} || ptr != last) {
        throw ParseError("non-numeric component '" + std::string(field) + "'", line_no);
      }
    }
    table.insert(fields[0], std::move(vector));
  }
  if (!have_dim) throw ParseError("no embedding vectors found", 0);
  return table;
}

Eigen::VectorXd embed_token(std::string_view word, Upos upos, const EmbeddingTable& table) {
  const auto dim = static_cast<Eigen::Index>(table.dim());
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim + static_cast<Eigen::Index>(kNumUpos));
  if (auto vector = table.lookup(word)) {
    out.head(dim) = Eigen::Map<const Eigen::VectorXd>(vector->data(), dim);
  }
  out[dim + static_cast<Eigen::Index>(upos_index(upos))] = 1.0;
  return out;
}

SentenceEncoding encode_sentence(const LabeledSentence& sentence, const EmbeddingTable& table) {
  SentenceEncoding encoding(static_cast<Eigen::Index>(sentence.tokens.size()),
                            static_cast<Eigen::Index>(table.dim() + kNumUpos));
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const Token& token = sentence.tokens[i];
    if (!token.upos) {
      throw PreconditionError("token " + std::to_string(i) + " ('" + token.text +
                              "') has no universal POS tag");
    }
    encoding.row(static_cast<Eigen::Index>(i)) = embed_token(token.text, *token.upos, table);
  }
  return encoding;
}

}  // namespace comparo
