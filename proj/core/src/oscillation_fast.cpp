#include "pmob/oscillation_fast.hpp"

#include <algorithm>

#include "pmob/checked.hpp"
#include "pmob/error.hpp"

namespace pmob {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// min_points(s, r) = slope * r + offset.
struct Linear {
  std::int64_t slope;
  std::int64_t offset;
};

Linear budget(ShapeKind kind, std::int64_t k, PiParity p) {
  using enum PiParity;
  switch (kind) {
    case ShapeKind::Single21:
      return {3, (p == WEven || p == MEven) ? -1 : 0};
    case ShapeKind::Plain:
      return {2 * k + 2, p == WEven ? -2 : 0};
    case ShapeKind::LeftCapped:
      return {2 * k + 2, p == WOdd ? 2 : 0};
    case ShapeKind::RightCapped:
      return {2 * k + 2, p == MOdd ? 2 : 0};
    case ShapeKind::BothCapped:
      return {2 * k + 4, p == MEven ? -2 : 0};
  }
  return {0, 0};
}

std::int64_t raw_min_k_for(const PiClass& sigma, ShapeKind kind, std::int64_t pi_length) {
  using enum PiParity;
  const auto p = sigma.parity;
  const auto n = sigma.n;
  switch (kind) {
    case ShapeKind::Single21: return p == WEven ? n : pi_length;
    case ShapeKind::Plain: return p == MEven ? n + 1 : n;
    case ShapeKind::LeftCapped: return p == MOdd ? n - 1 : n;
    case ShapeKind::RightCapped: return p == WOdd ? n - 1 : n;
    case ShapeKind::BothCapped: return p == WEven ? n : n - 1;
  }
  return n;
}

PiClass sigma_class(const Permutation& sigma) {
  if (sigma.size() < 2) throw Error(ErrorKind::PreconditionViolation, "sigma must have length > 1");
  auto id = identify_oscillation(sigma);
  if (!id) throw Error(ErrorKind::NotAnOscillation, sigma.to_string());
  return PiClass::of(*id);
}

// With r minimal such that the doubly capped sum no longer fits: +1 when a
// single cap already fails, -1 when one cap fits but another copy of α does
// not, and 0 otherwise or when ⊕^r α itself does not fit.
int gated_weight(bool sigma_below_alpha, const Shape& s, const PiClass& pi, std::int64_t* r_out) {
  const std::int64_t r = min_r_osc(s, pi);
  if (r_out != nullptr) *r_out = r;
  if (!sigma_below_alpha) return 0;
  if (!fits_in_pi(s, r, pi, {})) return 0;
  if (!fits_in_pi(s, r, pi, {true, false})) return 1;
  if (!fits_in_pi(s, r + 1, pi, {})) return -1;
  return 0;
}

}  // namespace

PiClass PiClass::of(const OscillationId& id) {
  if (id.n < 1) throw Error(ErrorKind::PreconditionViolation, "oscillation length must be >= 1");
  const bool even = id.n % 2 == 0;
  // Length 2 is both W_2 and M_2; the tables treat it as W.
  const bool w = id.kind == OscKind::W || id.n == 2;
  PiParity parity = w ? (even ? PiParity::WEven : PiParity::WOdd) : (even ? PiParity::MEven : PiParity::MOdd);
  return {parity, (id.n + 1) / 2};
}

std::int64_t PiClass::length() const noexcept { return even() ? 2 * n : 2 * n - 1; }

OscillationId PiClass::id() const noexcept {
  const bool w = parity == PiParity::WEven || parity == PiParity::WOdd;
  return {w ? OscKind::W : OscKind::M, length()};
}

std::int64_t min_points(const Shape& s, std::int64_t r, const PiClass& pi) {
  if (!s.valid()) throw Error(ErrorKind::InvalidShape, s.describe());
  const Linear l = budget(s.kind, s.k, pi.parity);
  return checked_add(checked_mul(l.slope, r), l.offset);
}

bool fits_in_pi(const Shape& s, std::int64_t r, const PiClass& pi, Caps caps) {
  return min_points(s, r, pi) + 2 * caps.count() <= 2 * pi.n;
}

std::int64_t raw_min_k(const Permutation& sigma, ShapeKind kind, std::int64_t pi_length) {
  return raw_min_k_for(sigma_class(sigma), kind, pi_length);
}

std::int64_t min_k(const Permutation& sigma, ShapeKind kind, std::int64_t pi_length) {
  if (sigma.size() == 1) return min_blocks(kind);
  if (sigma.empty()) throw Error(ErrorKind::PreconditionViolation, "sigma must be nonempty");
  const std::int64_t raw = raw_min_k_for(sigma_class(sigma), kind, pi_length);
  if (kind == ShapeKind::Single21) return raw == pi_length ? pi_length : 1;
  return std::max(raw, min_blocks(kind));
}

std::int64_t max_k(ShapeKind kind, const PiClass& pi) {
  if (kind == ShapeKind::Single21) return min_points({kind, 1}, 1, pi) <= 2 * pi.n ? 1 : 0;
  // min_points(k, 1) = 2k + c for every multi-block row.
  const Linear l = budget(kind, 0, pi.parity);
  const std::int64_t c = l.slope + l.offset;
  std::int64_t best = floor_div(2 * pi.n - c, 2);
  if (best < min_blocks(kind)) return 0;
  auto own = to_shape(pi.id());
  if (own && own->kind == kind) --best;
  return best < min_blocks(kind) ? 0 : best;
}

std::int64_t min_r_osc(const Shape& s, const PiClass& pi) {
  if (!s.valid()) throw Error(ErrorKind::InvalidShape, s.describe());
  const Linear l = budget(s.kind, s.k, pi.parity);
  // Smallest r with slope*r + offset + 4 > 2n.
  const std::int64_t r = floor_div(2 * pi.n - l.offset - 4, l.slope) + 1;
  return std::max<std::int64_t>(r, 1);
}

int weight_osc(const Permutation& sigma, const Shape& s, const PiClass& pi) {
  return gated_weight(OscillationEngine::below(sigma, to_oscillation(s)), s, pi, nullptr);
}

OscillationEngine::Sigma OscillationEngine::describe(const Permutation& sigma) {
  if (sigma.size() == 1) return {true, PiClass{PiParity::WOdd, 1}, 1};
  return {false, sigma_class(sigma), static_cast<std::int64_t>(sigma.size())};
}

bool OscillationEngine::below(const Sigma& sigma, const OscillationId& pi) {
  if (sigma.is_one) return pi.n >= 1;
  if (pi.n < sigma.length) return false;
  auto shape = to_shape(pi);
  if (!shape) return false;
  if (shape->kind == ShapeKind::Single21) return sigma.length == 2;
  const std::int64_t needed = std::max(raw_min_k_for(sigma.cls, shape->kind, pi.n), min_blocks(shape->kind));
  return shape->k >= needed;
}

bool OscillationEngine::below(const Permutation& sigma, const OscillationId& pi) {
  if (sigma.empty()) return true;
  return below(describe(sigma), pi);
}

std::int64_t OscillationEngine::min_k(const Sigma& sigma, ShapeKind kind, std::int64_t pi_length) {
  if (sigma.is_one) return min_blocks(kind);
  const std::int64_t raw = raw_min_k_for(sigma.cls, kind, pi_length);
  if (kind == ShapeKind::Single21) return raw == pi_length ? pi_length : 1;
  return std::max(raw, min_blocks(kind));
}

int OscillationEngine::weight(const Sigma& sigma, const Shape& s, const PiClass& pi, std::int64_t* r_out) {
  return gated_weight(below(sigma, to_oscillation(s)), s, pi, r_out);
}

OscillationEngine::Memo& OscillationEngine::memo_for(const Permutation& sigma) {
  auto it = memo_.find(std::string(sigma.key()));
  if (it != memo_.end()) return it->second;
  Memo memo;
  memo.sigma = describe(sigma);
  return memo_.emplace(std::string(sigma.key()), std::move(memo)).first->second;
}

std::int64_t OscillationEngine::lookup(const Memo& memo, const OscillationId& id) const {
  return id.kind == OscKind::W ? memo.w[id.n] : memo.m[id.n];
}

std::int64_t OscillationEngine::evaluate(Memo& memo, const OscillationId& pi, OscTrace* trace) const {
  const Sigma& sigma = memo.sigma;
  if (!below(sigma, pi)) return 0;
  if (sigma.length == pi.n) return 1;
  if (sigma.length + 1 == pi.n && trace == nullptr) return -1;

  const PiClass cls = PiClass::of(pi);
  std::int64_t total = 0;
  for (ShapeKind kind : kAllShapeKinds) {
    const std::int64_t lo = min_k(sigma, kind, pi.n);
    const std::int64_t hi = max_k(kind, cls);
    if (trace != nullptr) trace->ranges.push_back({kind, lo, hi});
    for (std::int64_t k = lo; k <= hi; ++k) {
      const Shape shape{kind, k};
      const OscillationId alpha = to_oscillation(shape);
      if (alpha.n >= pi.n) throw Error(ErrorKind::PreconditionViolation, "summation range reached the upper bound");
      std::int64_t r = 0;
      const int w = weight(sigma, shape, cls, &r);
      if (trace != nullptr && below(sigma, alpha)) {
        trace->rows.push_back({shape, realize_shape(shape), r, w, lookup(memo, alpha)});
      }
      if (w != 0) total = checked_add(total, checked_mul(w, lookup(memo, alpha)));
    }
  }
  if (sigma.length + 1 == pi.n) return -1;
  return checked_neg(total);
}

void OscillationEngine::fill(Memo& memo, std::int64_t length) {
  if (length <= memo.filled) return;
  memo.w.resize(static_cast<std::size_t>(length) + 1, 0);
  memo.m.resize(static_cast<std::size_t>(length) + 1, 0);
  for (std::int64_t len = memo.filled + 1; len <= length; ++len) {
    memo.w[len] = evaluate(memo, {OscKind::W, len}, nullptr);
    memo.m[len] = len <= 2 ? memo.w[len] : evaluate(memo, {OscKind::M, len}, nullptr);
    memo.filled = len;
  }
}

std::int64_t OscillationEngine::mobius(const Permutation& sigma, const OscillationId& pi, OscTrace* trace) {
  if (pi.n < 1) throw Error(ErrorKind::PreconditionViolation, "oscillation length must be >= 1");
  if (sigma.empty()) throw Error(ErrorKind::PreconditionViolation, "sigma must be nonempty");
  Memo& memo = memo_for(sigma);
  if (!below(memo.sigma, pi)) {
    throw Error(ErrorKind::NotContained, sigma.to_string() + " is not contained in " + to_string(pi));
  }
  fill(memo, pi.n - 1);
  if (trace != nullptr) return evaluate(memo, pi, trace);
  fill(memo, pi.n);
  return lookup(memo, pi);
}

std::size_t OscillationEngine::memo_entries() const noexcept {
  std::size_t total = 0;
  for (const auto& [key, memo] : memo_) total += memo.w.size() + memo.m.size();
  return total;
}

}  // namespace pmob
