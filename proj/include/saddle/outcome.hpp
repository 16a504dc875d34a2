#pragma once

#include <optional>

#include "saddle/value.hpp"

namespace saddle {

/// Final answer of a strict-saddlepoint solve: the located entry, or absence.
struct SspOutcome {
  std::optional<Entry> ssp;         // root coordinates
  std::optional<Position> local;    // coordinates in the solved view

  [[nodiscard]] bool found() const { return ssp.has_value(); }

  static SspOutcome absent() { return {}; }
  static SspOutcome at(const Entry& e, Position local) { return {e, local}; }
};

}  // namespace saddle
