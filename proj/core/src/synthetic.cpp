#include "comparo/synthetic.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <stdexcept>

#include "comparo/preproc.hpp"
#include "comparo/rng.hpp"

namespace comparo {
namespace {

constexpr std::array<std::string_view, 12> kComparatives = {
    "better", "worse",   "sharper", "faster",  "cheaper", "brighter",
    "clearer", "smaller", "larger",  "lighter", "louder",  "quieter"};
constexpr std::array<std::string_view, 2> kSuperlatives = {"best", "worst"};
constexpr std::array<std::string_view, 4> kIntensifiers = {"", "far", "much", "really"};

template <typename Container>
std::string pick(const Container& items, Rng& rng) {
  auto it = items.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(rng.index(items.size())));
  return std::string(*it);
}

std::string title_case(const std::string& phrase) {
  std::string out = phrase;
  bool start = true;
  for (char& c : out) {
    if (start) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    start = c == ' ';
  }
  return out;
}

std::string with_intensifier(const std::string& intensifier, const std::string& word) {
  return intensifier.empty() ? word : intensifier + " " + word;
}

const Dictionary& require(const DictionaryMap& dictionaries, const char* name) {
  const auto it = dictionaries.find(name);
  if (it == dictionaries.end() || it->second.size() == 0) {
    throw std::invalid_argument(std::string("synthetic_reviews needs a non-empty '") + name +
                                "' dictionary");
  }
  return it->second;
}

}  // namespace

std::vector<std::string> synthetic_reviews(std::size_t count, std::uint64_t seed,
                                           const DictionaryMap& dictionaries) {
  const auto& products = require(dictionaries, "products").entries();
  const auto& aspects = require(dictionaries, "aspects").entries();
  if (products.size() < 2) throw std::invalid_argument("need at least two products");

  Rng rng(seed);
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const std::string p1 = title_case(pick(products, rng));
    std::string p2 = title_case(pick(products, rng));
    while (p2 == p1) p2 = title_case(pick(products, rng));
    const std::string aspect = pick(aspects, rng);
    const std::string cmp = pick(kComparatives, rng);
    const std::string adv = pick(kIntensifiers, rng);

    switch (rng.index(10)) {
      case 0:
      case 1:
        out.push_back("The " + aspect + " of " + p1 + " is " + with_intensifier(adv, cmp) +
                      " than " + p2 + " .");
        break;
      case 2:
      case 3:
        out.push_back(p1 + (rng.index(2) == 0 ? " has " : " has a ") + cmp + " " + aspect +
                      " than " + p2 + " .");
        break;
      case 4:
      case 5:
        out.push_back("The " + aspect + (rng.index(2) == 0 ? " in " : " of ") + p1 + " is " +
                      with_intensifier(adv, cmp) + " .");
        break;
      case 6:
        out.push_back(p1 + " has a " + cmp + " " + aspect + " .");
        break;
      case 7:
        out.push_back("I think " + p1 + " is " + with_intensifier(adv, cmp) + " .");
        break;
      case 8:
        out.push_back("Honestly , " + p1 + " is the " + pick(kSuperlatives, rng) + " .");
        break;
      default:
        out.push_back("I bought the " + p1 + " last week and the " + aspect + " works fine .");
        break;
    }
  }
  return out;
}

std::set<std::string> vocabulary(const Dataset& dataset) {
  std::set<std::string> words;
  for (const auto& sentence : dataset.sentences) {
    for (const auto& token : sentence.tokens) words.insert(to_lower(token.text));
  }
  return words;
}

EmbeddingTable toy_embeddings(const std::set<std::string>& words, std::size_t dim,
                              std::uint64_t seed) {
  EmbeddingTable table(dim);
  for (const auto& word : words) {
    std::uint64_t hash = 1469598103934665603ULL ^ seed;
    for (char c : word) {
      hash ^= static_cast<unsigned char>(c);
      hash *= 1099511628211ULL;
    }
    Rng rng(hash);
    std::vector<double> vector(dim);
    for (double& v : vector) v = rng.uniform(-0.5, 0.5);
    table.insert(word, std::move(vector));
  }
  return table;
}

std::string format_glove(const EmbeddingTable& table) {
  std::string out;
  char buf[40];
  for (const auto& word : table.words()) {
    out += word;
    const std::span<const double> vector = *table.lookup(word);
    for (double v : vector) {
      std::snprintf(buf, sizeof buf, " %.17g", v);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace comparo
