#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace comparo {

/// Universal POS tag set, 17 tags. The enumerator value is the position of
/// the tag in the one-hot POS block of a token embedding.
enum class Upos : std::uint8_t {
  kAdj = 0,
  kAdp,
  kAdv,
  kAux,
  kCconj,
  kDet,
  kIntj,
  kNoun,
  kNum,
  kPart,
  kPron,
  kPropn,
  kPunct,
  kSconj,
  kSym,
  kVerb,
  kX,
};

inline constexpr std::size_t kNumUpos = 17;

constexpr std::size_t upos_index(Upos tag) noexcept { return static_cast<std::size_t>(tag); }

std::string_view to_string(Upos tag) noexcept;

std::optional<Upos> parse_upos(std::string_view text) noexcept;

}  // namespace comparo
