#pragma once

#include <vector>

#include "nestedpi/precision.hpp"

namespace nestedpi {

/// The depth-k radical pair and the arctangent argument built from it:
///   a_k   = sqrt(2 + a_(k-1)),  a_1 = sqrt(2), a_0 = 0
///   complement = sqrt(2 - a_(k-1))        (= 2*sin(pi/2^(k+1)))
///   argument   = complement / a_k         (= tan(pi/2^(k+1)))
struct RadicalState {
  int k = 0;
  HPReal a_k;
  HPReal complement;
  HPReal argument;
};

/// a_1..a_k in one forward pass; element [i] holds a_(i+1).
std::vector<HPReal> nested_radical_prefix(int k, const PrecisionContext& ctx);

/// a_k by the forward recurrence. k >= 1.
HPReal nested_radical(int k, const PrecisionContext& ctx);

/// sqrt(2 - a_(k-1)) by direct subtraction. The context must carry guard
/// digits for depth k (the subtraction cancels about 0.602*k digits);
/// otherwise a PrecisionError is raised.
HPReal radical_complement(int k, const PrecisionContext& ctx);

/// Full radical state at depth k, sharing one recurrence pass.
RadicalState arctan_argument(int k, const PrecisionContext& ctx);

}  // namespace nestedpi
