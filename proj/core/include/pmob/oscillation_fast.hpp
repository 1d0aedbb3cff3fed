#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "pmob/permutation.hpp"
#include "pmob/shape.hpp"

namespace pmob {

enum class PiParity : std::uint8_t { WEven, WOdd, MEven, MOdd };

/// An oscillation upper bound as seen by the inequality tables: W_{2n},
/// W_{2n-1}, M_{2n} or M_{2n-1} together with that n.
struct PiClass {
  PiParity parity = PiParity::WEven;
  std::int64_t n = 1;

  static PiClass of(const OscillationId& id);
  std::int64_t length() const noexcept;
  OscillationId id() const noexcept;
  bool even() const noexcept { return parity == PiParity::WEven || parity == PiParity::MEven; }

  friend bool operator==(const PiClass&, const PiClass&) = default;
};

/// Unit-sum caps 1⊕· and ·⊕1 attached around ⊕^r α.
struct Caps {
  bool leading = false;
  bool trailing = false;
  int count() const noexcept { return int{leading} + int{trailing}; }
};

/// Points of pi consumed by an embedding of ⊕^r(realize(s)).
std::int64_t min_points(const Shape& s, std::int64_t r, const PiClass& pi);

/// Whether the capped sum embeds in pi, decided by point counting alone.
bool fits_in_pi(const Shape& s, std::int64_t r, const PiClass& pi, Caps caps);

/// Smallest k with sigma ≤ realize({kind, k}) according to the lower-bound
/// table; `pi_length` is returned when no k can work. sigma must be an
/// increasing oscillation of length > 1.
std::int64_t raw_min_k(const Permutation& sigma, ShapeKind kind, std::int64_t pi_length);

/// First k in the summation range for the given shape. For the single 21
/// shape the range is {1}, and containment of sigma is checked separately.
std::int64_t min_k(const Permutation& sigma, ShapeKind kind, std::int64_t pi_length);

/// Last k in the summation range; 0 when no k fits.
std::int64_t max_k(ShapeKind kind, const PiClass& pi);

/// Smallest r >= 1 with 1⊕(⊕^r α)⊕1 not fitting in pi, in closed form.
std::int64_t min_r_osc(const Shape& s, const PiClass& pi);

/// Weight of α = realize(s) in the recursion for μ(sigma, pi); one of -1, 0, 1.
int weight_osc(const Permutation& sigma, const Shape& s, const PiClass& pi);

struct OscKRange {
  ShapeKind kind;
  std::int64_t min_k;
  std::int64_t max_k;
};

struct OscTraceRow {
  Shape shape;
  Permutation alpha;
  std::int64_t r = 0;
  int weight = 0;
  std::int64_t mu = 0;  // μ(sigma, alpha)
};

struct OscTrace {
  std::vector<OscKRange> ranges;
  std::vector<OscTraceRow> rows;  // every α in range with sigma ≤ α
};

/// Evaluates μ(σ, π) for oscillation upper bounds from the inequality tables,
/// never materializing π. Values are memoized per σ for every oscillation
/// length up to the largest requested, so a series costs one ascending fill.
class OscillationEngine {
 public:
  /// sigma must be 1 or an increasing oscillation contained in pi.
  std::int64_t mobius(const Permutation& sigma, const OscillationId& pi, OscTrace* trace = nullptr);

  /// Whether sigma (1 or an oscillation) is contained in the oscillation pi.
  static bool below(const Permutation& sigma, const OscillationId& pi);

  std::size_t memo_entries() const noexcept;
  void clear() { memo_.clear(); }

 private:
  struct Sigma {
    bool is_one = false;
    PiClass cls;
    std::int64_t length = 1;
  };
  struct Memo {
    Sigma sigma;
    std::vector<std::int64_t> w, m;  // indexed by length; filled up to filled
    std::int64_t filled = 0;
  };

  static Sigma describe(const Permutation& sigma);
  static bool below(const Sigma& sigma, const OscillationId& pi);
  static std::int64_t min_k(const Sigma& sigma, ShapeKind kind, std::int64_t pi_length);
  static int weight(const Sigma& sigma, const Shape& s, const PiClass& pi, std::int64_t* r_out);

  Memo& memo_for(const Permutation& sigma);
  void fill(Memo& memo, std::int64_t length);
  std::int64_t evaluate(Memo& memo, const OscillationId& pi, OscTrace* trace) const;
  std::int64_t lookup(const Memo& memo, const OscillationId& id) const;

  std::unordered_map<std::string, Memo> memo_;
};

}  // namespace pmob
