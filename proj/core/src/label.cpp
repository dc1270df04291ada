#include "comparo/label.hpp"

namespace comparo {

std::string_view to_string(Label label) noexcept {
  switch (label) {
    case Label::kProduct1:
      return "Product1";
    case Label::kProduct2:
      return "Product2";
    case Label::kAspect:
      return "Aspect";
    case Label::kPredicate:
      return "Predicate";
    case Label::kNone:
      return "None";
  }
  return "None";
}

std::optional<Label> parse_label(std::string_view text) noexcept {
  for (Label label : kAllLabels) {
    if (to_string(label) == text) return label;
  }
  return std::nullopt;
}

}  // namespace comparo
