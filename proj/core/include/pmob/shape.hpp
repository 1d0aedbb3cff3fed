#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pmob/permutation.hpp"

namespace pmob {

enum class ShapeKind : std::uint8_t { Single21, Plain, LeftCapped, RightCapped, BothCapped };

inline constexpr ShapeKind kAllShapeKinds[] = {ShapeKind::Single21, ShapeKind::Plain, ShapeKind::LeftCapped,
                                               ShapeKind::RightCapped, ShapeKind::BothCapped};

std::string_view to_string(ShapeKind kind) noexcept;

/// Smallest legal block count for the kind: 2 for Plain, 1 otherwise.
constexpr std::int64_t min_blocks(ShapeKind kind) noexcept { return kind == ShapeKind::Plain ? 2 : 1; }

/// A sum-indecomposable increasing oscillation described by its outline and
/// `k`, the number of 21 blocks in the interleaved chain.
struct Shape {
  ShapeKind kind = ShapeKind::Single21;
  std::int64_t k = 1;

  bool valid() const noexcept {
    return kind == ShapeKind::Single21 ? k == 1 : k >= min_blocks(kind);
  }
  /// Length of the realized permutation.
  std::int64_t length() const noexcept;
  /// Human-readable form, e.g. "1⊙(⊙^3 21)⊙1".
  std::string describe() const;

  friend bool operator==(const Shape&, const Shape&) = default;
};

enum class OscKind : std::uint8_t { W, M };

/// Handle for the increasing oscillation of the given length starting with a
/// descent (W) or an ascent (M).
struct OscillationId {
  OscKind kind = OscKind::W;
  std::int64_t n = 1;

  friend bool operator==(const OscillationId&, const OscillationId&) = default;
};

std::string to_string(const OscillationId& id);

Permutation realize_shape(const Shape& s);
Permutation oscillation(const OscillationId& id);

/// The Shape realizing `pi`, if any.
std::optional<Shape> classify_oscillation(const Permutation& pi);
/// The oscillation id of `pi` (W preferred for lengths 1 and 2), if any.
std::optional<OscillationId> identify_oscillation(const Permutation& pi);

OscillationId to_oscillation(const Shape& s);
/// The Shape of a sum-indecomposable oscillation; empty for length 1.
std::optional<Shape> to_shape(const OscillationId& id);

}  // namespace pmob
