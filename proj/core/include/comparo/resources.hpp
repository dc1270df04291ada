#pragma once

#include <string_view>

// Text of the data files under core/data, compiled into the library.
namespace comparo::resources {

std::string_view penn_lexicon();
std::string_view suffix_rules();
std::string_view penn_to_upos();
std::string_view aspects_dictionary();
std::string_view products_dictionary();
std::string_view default_patterns();

}  // namespace comparo::resources
