#include "comparo/resources.hpp"

namespace comparo::resources {

namespace embedded {
extern const std::string_view kPennLexicon;
extern const std::string_view kSuffixRules;
extern const std::string_view kPennToUpos;
extern const std::string_view kAspects;
extern const std::string_view kProducts;
extern const std::string_view kPatterns;
}  // namespace embedded

std::string_view penn_lexicon() { return embedded::kPennLexicon; }
std::string_view suffix_rules() { return embedded::kSuffixRules; }
std::string_view penn_to_upos() { return embedded::kPennToUpos; }
std::string_view aspects_dictionary() { return embedded::kAspects; }
std::string_view products_dictionary() { return embedded::kProducts; }
std::string_view default_patterns() { return embedded::kPatterns; }

}  // namespace comparo::resources
