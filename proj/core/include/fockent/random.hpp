#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "fockent/fock_state.hpp"
#include "fockent/partition.hpp"

namespace fockent {

/// Shape of the random states drawn for property suites: small uniform
/// occupation-basis supports with amplitudes bounded away from zero.
struct RandomStateOptions {
  int min_modes = 2;
  int max_modes = 6;
  int max_terms = 6;
  /// Fixes the particle number (e.g. 2 for one-body measure suites);
  /// otherwise drawn from [1, 4] capped by what the modes can hold.
  std::optional<int> particle_number;
  bool real_amplitudes = false;
  /// Redraw until the occupied Alice-particle-number sectors form an
  /// integer interval. Super-additivity is strict exactly on such states,
  /// so the equality-condition suite samples from this family.
  bool contiguous_local_support = false;
};

struct RandomState {
  FockState state;
  ModePartition partition;
};

/// Draws a state and a non-trivial partition (both blocks non-empty).
/// Fully determined by the engine state, so suites recording their seed
/// reproduce exactly.
RandomState random_state(std::mt19937_64& engine, Statistics stats,
                         const RandomStateOptions& options = {});

}  // namespace fockent
