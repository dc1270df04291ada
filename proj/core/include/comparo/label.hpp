#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace comparo {

/// Per-token target. The numeric order is the class index used by the
/// tagger's output layer and by the argmax tie-break.
enum class Label : std::uint8_t { kProduct1 = 0, kProduct2, kAspect, kPredicate, kNone };

inline constexpr std::size_t kNumLabels = 5;

inline constexpr std::array<Label, kNumLabels> kAllLabels = {
    Label::kProduct1, Label::kProduct2, Label::kAspect, Label::kPredicate, Label::kNone};

/// The four informing-entity classes, i.e. every label except None.
inline constexpr std::array<Label, 4> kEntityLabels = {
    Label::kProduct1, Label::kProduct2, Label::kAspect, Label::kPredicate};

constexpr std::size_t label_index(Label label) noexcept {
  return static_cast<std::size_t>(label);
}

constexpr Label label_from_index(std::size_t index) noexcept {
  return static_cast<Label>(index);
}

/// Canonical corpus spelling: Product1, Product2, Aspect, Predicate, None.
std::string_view to_string(Label label) noexcept;

std::optional<Label> parse_label(std::string_view text) noexcept;

}  // namespace comparo
