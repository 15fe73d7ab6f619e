#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mono/qstate.hpp"

namespace mono {

struct NamedState {
  std::string descriptor;
  PureTripartiteState state;
  /// Inline parameters were rescaled to unit norm by more than 1e-9.
  bool renormalized = false;
};

/// Resolves one of: ghz, w, wclass:b0,b1,b2,b3, schmidt:l0,l1,l2,l3,l4,phi,
/// e223, afs. Inline reals accept fixed or scientific notation; parameter
/// vectors are rescaled to unit norm (phi excluded) so truncated decimals work.
NamedState resolve_named_state(std::string_view spec);

/// Names accepted by resolve_named_state (parameterized ones without arguments).
std::vector<std::string> named_state_names();

}  // namespace mono
