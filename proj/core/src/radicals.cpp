#include "nestedpi/radicals.hpp"

namespace nestedpi {

namespace {

void require_depth(int k, const PrecisionContext& ctx, const char* op) {
  if (k < 1) {
    throw DomainError(std::string(op) + ": k must be >= 1");
  }
  if (!ctx.covers_radical_depth(k)) {
    throw PrecisionError(std::string(op) + ": context guard digits (" +
                         std::to_string(ctx.guard_digits) + ") do not cover radical depth " +
                         std::to_string(k) + "; build the context with k_hint >= " +
                         std::to_string(k));
  }
}

}  // namespace

std::vector<HPReal> nested_radical_prefix(int k, const PrecisionContext& ctx) {
  if (k < 1) {
    throw DomainError("nested_radical: k must be >= 1");
  }
  std::vector<HPReal> prefix;
  prefix.reserve(static_cast<size_t>(k));
  HPReal two(2, ctx);
  prefix.push_back(sqrt(two, ctx));
  for (int i = 2; i <= k; ++i) {
    prefix.push_back(sqrt(two + prefix.back(), ctx));
  }
  return prefix;
}

HPReal nested_radical(int k, const PrecisionContext& ctx) {
  return nested_radical_prefix(k, ctx).back();
}

HPReal radical_complement(int k, const PrecisionContext& ctx) {
  require_depth(k, ctx, "radical_complement");
  if (k == 1) {
    return sqrt(HPReal(2, ctx), ctx);  // a_0 = 0
  }
  HPReal a_prev = nested_radical(k - 1, ctx);
  return sqrt(2 - a_prev, ctx);
}

RadicalState arctan_argument(int k, const PrecisionContext& ctx) {
  require_depth(k, ctx, "arctan_argument");
  RadicalState state;
  state.k = k;
  if (k == 1) {
    state.a_k = sqrt(HPReal(2, ctx), ctx);
    state.complement = sqrt(HPReal(2, ctx), ctx);
  } else {
    std::vector<HPReal> prefix = nested_radical_prefix(k, ctx);
    state.a_k = prefix[static_cast<size_t>(k) - 1];
    state.complement = sqrt(2 - prefix[static_cast<size_t>(k) - 2], ctx);
  }
  state.argument = state.complement / state.a_k;
  return state;
}

}  // namespace nestedpi
