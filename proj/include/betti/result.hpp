#pragma once

#include <string>
#include <vector>

#include "betti/combinat.hpp"

namespace betti {

/// Whether a value is the exact invariant or only an upper bound for it.
enum class ValueKind { Exact, Bound };

inline std::string to_string(ValueKind k) { return k == ValueKind::Exact ? "exact" : "bound"; }

struct BoundResult {
  Rational value;
  std::string citation;                  // bound identifier
  std::vector<std::string> assumptions;  // hypotheses checked before evaluation
  std::string branch;                    // arm of a min, or evaluation path
  ValueKind kind = ValueKind::Bound;
  // A complex-side value (exact or bound) also bounds the real points.
  bool real_upper_bound = true;
};

}  // namespace betti
