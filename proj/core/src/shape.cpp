#include "pmob/shape.hpp"

#include "pmob/error.hpp"

namespace pmob {

std::string_view to_string(ShapeKind kind) noexcept {
  switch (kind) {
    case ShapeKind::Single21: return "21";
    case ShapeKind::Plain: return "Plain";
    case ShapeKind::LeftCapped: return "LeftCapped";
    case ShapeKind::RightCapped: return "RightCapped";
    case ShapeKind::BothCapped: return "BothCapped";
  }
  return "?";
}

std::int64_t Shape::length() const noexcept {
  switch (kind) {
    case ShapeKind::Single21: return 2;
    case ShapeKind::Plain: return 2 * k;
    case ShapeKind::LeftCapped:
    case ShapeKind::RightCapped: return 2 * k + 1;
    case ShapeKind::BothCapped: return 2 * k + 2;
  }
  return 0;
}

std::string Shape::describe() const {
  const std::string chain = "⊙^" + std::to_string(k) + " 21";
  switch (kind) {
    case ShapeKind::Single21: return "21";
    case ShapeKind::Plain: return chain;
    case ShapeKind::LeftCapped: return "1⊙(" + chain + ")";
    case ShapeKind::RightCapped: return "(" + chain + ")⊙1";
    case ShapeKind::BothCapped: return "1⊙(" + chain + ")⊙1";
  }
  return "?";
}

std::string to_string(const OscillationId& id) {
  return (id.kind == OscKind::W ? "W" : "M") + std::to_string(id.n);
}

Permutation realize_shape(const Shape& s) {
  if (!s.valid()) {
    throw Error(ErrorKind::InvalidShape,
                std::string(to_string(s.kind)) + " with k=" + std::to_string(s.k));
  }
  const Permutation one = Permutation::identity(1);
  const Permutation chain = iterated_interleave_21(s.k);
  switch (s.kind) {
    case ShapeKind::Single21:
    case ShapeKind::Plain: return chain;
    case ShapeKind::LeftCapped: return interleave(one, chain);
    case ShapeKind::RightCapped: return interleave(chain, one);
    case ShapeKind::BothCapped: return interleave(interleave(one, chain), one);
  }
  return chain;
}

OscillationId to_oscillation(const Shape& s) {
  switch (s.kind) {
    case ShapeKind::Single21:
    case ShapeKind::Plain:
    case ShapeKind::RightCapped: return {OscKind::W, s.length()};
    case ShapeKind::LeftCapped:
    case ShapeKind::BothCapped: return {OscKind::M, s.length()};
  }
  return {};
}

std::optional<Shape> to_shape(const OscillationId& id) {
  const std::int64_t len = id.n;
  if (len < 2) return std::nullopt;
  if (len == 2) return Shape{ShapeKind::Single21, 1};
  const std::int64_t half = (len + 1) / 2;
  if (id.kind == OscKind::W) {
    return len % 2 == 0 ? Shape{ShapeKind::Plain, half} : Shape{ShapeKind::RightCapped, half - 1};
  }
  return len % 2 == 1 ? Shape{ShapeKind::LeftCapped, half - 1} : Shape{ShapeKind::BothCapped, half - 1};
}

Permutation oscillation(const OscillationId& id) {
  if (id.n < 1) throw Error(ErrorKind::PreconditionViolation, "oscillation length must be >= 1");
  if (id.n == 1) return Permutation::identity(1);
  return realize_shape(*to_shape(id));
}

std::optional<OscillationId> identify_oscillation(const Permutation& pi) {
  const auto len = static_cast<std::int64_t>(pi.size());
  if (len == 0) return std::nullopt;
  for (OscKind kind : {OscKind::W, OscKind::M}) {
    const OscillationId id{kind, len};
    if (oscillation(id) == pi) return id;
  }
  return std::nullopt;
}

std::optional<Shape> classify_oscillation(const Permutation& pi) {
  auto id = identify_oscillation(pi);
  if (!id) return std::nullopt;
  return to_shape(*id);
}

}  // namespace pmob
