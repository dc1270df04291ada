#include "comparo/checkpoint.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstring>

#include "comparo/errors.hpp"

namespace comparo {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'C', 'M', 'P', 'O'};
constexpr std::size_t kHeaderSize = 8 + 6 * 8 + 2 * 8;

class Writer {
 public:
  void bytes(std::span<const std::uint8_t> data) { out_.insert(out_.end(), data.begin(), data.end()); }
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint8_t u8() {
    need(1);
    return data_[pos_++];
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
    pos_ += 8;
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }
  std::size_t remaining() const { return data_.size() - pos_; }

 private:
  void need(std::size_t n) const {
    if (remaining() < n) {
      throw CheckpointError(CheckpointError::Kind::kTruncated,
                            "checkpoint truncated at byte " + std::to_string(pos_));
    }
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

std::size_t dimension(std::uint64_t value, const char* field) {
  // Generous bound that rejects garbage before any allocation happens.
  if (value > (1ULL << 24)) {
    throw CheckpointError(CheckpointError::Kind::kInvalidField,
                          std::string("checkpoint field ") + field + " out of range");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

std::vector<std::uint8_t> save_params(const TaggerParams& params, const ModelConfig& config) {
  check_shapes(params, config);
  Writer w;
  w.bytes(kMagic);
  w.u8(kCheckpointVersion);
  w.u8(static_cast<std::uint8_t>(config.direction));
  w.u8(config.clip_norm ? 1 : 0);
  w.u8(0);
  w.u64(config.num_layers);
  w.u64(config.input_dim);
  w.u64(config.hidden_dim);
  w.u64(config.num_classes);
  w.u64(config.epochs);
  w.u64(config.seed);
  w.f64(config.learning_rate);
  w.f64(config.clip_norm.value_or(0.0));
  for (const auto& view : tensors(params)) {
    for (double v : view.values) w.f64(v);
  }
  return w.take();
}

Checkpoint load_params(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagic.size() + 1) {
    throw CheckpointError(CheckpointError::Kind::kTruncated, "checkpoint shorter than its header");
  }
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw CheckpointError(CheckpointError::Kind::kBadMagic, "not a comparo checkpoint");
  }
  if (bytes[kCheckpointVersionOffset] != kCheckpointVersion) {
    throw CheckpointError(CheckpointError::Kind::kVersionMismatch,
                          "unsupported checkpoint version " +
                              std::to_string(bytes[kCheckpointVersionOffset]) + " (expected " +
                              std::to_string(kCheckpointVersion) + ")");
  }
  if (bytes.size() < kHeaderSize) {
    throw CheckpointError(CheckpointError::Kind::kTruncated, "checkpoint shorter than its header");
  }

  Reader r(bytes.subspan(kMagic.size() + 1));
  Checkpoint out;
  ModelConfig& config = out.config;
  const std::uint8_t direction = r.u8();
  if (direction > 1) throw CheckpointError(CheckpointError::Kind::kInvalidField, "bad direction byte");
  config.direction = static_cast<Direction>(direction);
  const std::uint8_t has_clip = r.u8();
  if (has_clip > 1) throw CheckpointError(CheckpointError::Kind::kInvalidField, "bad clip flag");
  r.u8();
  config.num_layers = dimension(r.u64(), "num_layers");
  config.input_dim = dimension(r.u64(), "input_dim");
  config.hidden_dim = dimension(r.u64(), "hidden_dim");
  config.num_classes = dimension(r.u64(), "num_classes");
  config.epochs = static_cast<std::size_t>(r.u64());
  config.seed = r.u64();
  config.learning_rate = r.f64();
  const double clip = r.f64();
  config.clip_norm = has_clip ? std::optional<double>(clip) : std::nullopt;
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    throw CheckpointError(CheckpointError::Kind::kInvalidField, e.what());
  }

  out.params = TaggerParams::zeros(config);
  const std::size_t expected = out.params.parameter_count() * 8;
  if (r.remaining() < expected) {
    throw CheckpointError(CheckpointError::Kind::kTruncated,
                          "checkpoint holds " + std::to_string(r.remaining()) +
                              " tensor bytes, expected " + std::to_string(expected));
  }
  if (r.remaining() > expected) {
    throw CheckpointError(CheckpointError::Kind::kTrailingData,
                          "checkpoint has " + std::to_string(r.remaining() - expected) +
                              " trailing bytes");
  }
  for (auto& view : tensors(out.params)) {
    for (double& v : view.values) v = r.f64();
  }
  return out;
}

}  // namespace comparo
