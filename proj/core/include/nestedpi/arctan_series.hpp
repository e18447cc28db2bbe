#pragma once

#include "nestedpi/precision.hpp"

namespace nestedpi {

/// Truncation parameters of the two-parameter conjugate-pair identity:
/// node_count outer quadrature nodes, m_max inner series terms per node.
struct SeriesParams {
  int node_count = 1;
  int m_max = 1;
};

/// Single-node conjugate-pair arctangent series:
///   arctan(x) ~ sum_{m=1}^{m_max}  -2 * Im((1 + 2i/x)^-(2m-1)) / (2m-1)
/// evaluated in real form (the two conjugate terms collapse to -2*Im).
/// Inverse powers advance by the recurrence w <- w * (1/z)^2. x must be > 0.
HPReal arctan_nested(const HPReal& x, int m_max, const PrecisionContext& ctx);

/// General form over node_count nodes, z_l = (2l-1) + 2i*node_count/x.
/// Reduces exactly to arctan_nested when node_count == 1.
HPReal arctan_nested_general(const HPReal& x, const SeriesParams& params,
                             const PrecisionContext& ctx);

/// Maclaurin arctangent oracle for 0 < x <= 1, independent of the
/// conjugate-pair route. Arguments above 1/4 are reduced by halving
/// x -> x / (1 + sqrt(1 + x^2)) before summing.
HPReal arctan_taylor(const HPReal& x, const PrecisionContext& ctx);

/// Reference pi: 16*arctan(1/5) - 4*arctan(1/239) via arctan_taylor.
HPReal machin_pi(const PrecisionContext& ctx);

}  // namespace nestedpi
