#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "comparo/corpus.hpp"
#include "comparo/embeddings.hpp"
#include "comparo/weak_label.hpp"

namespace comparo {

/// Raw comparative review sentences built from surface templates that the
/// shipped patterns recognize, with products and aspects drawn from
/// `dictionaries` ("products" and "aspects"). About one in ten sentences is
/// deliberately non-comparative and will not match any pattern.
std::vector<std::string> synthetic_reviews(std::size_t count, std::uint64_t seed,
                                           const DictionaryMap& dictionaries);

/// Lowercased token vocabulary of a dataset.
std::set<std::string> vocabulary(const Dataset& dataset);

/// Uniform(-0.5, 0.5) vectors, each drawn from a generator seeded by the
/// word and `seed`, so a word's vector does not depend on the other words.
EmbeddingTable toy_embeddings(const std::set<std::string>& words, std::size_t dim,
                              std::uint64_t seed);

/// Writes a table in GloVe text format, 17 significant digits.
std::string format_glove(const EmbeddingTable& table);

}  // namespace comparo
