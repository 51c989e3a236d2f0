#include "fockent/random.hpp"

#include <algorithm>
#include <cmath>

namespace fockent {

namespace {

// Hand-rolled draws keep the stream identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
  return engine() % bound;
}

double uniform_signed(std::mt19937_64& engine) {
  return 2.0 * double(engine() >> 11) * 0x1.0p-53 - 1.0;
}

Amplitude draw_amplitude(std::mt19937_64& engine, bool real_only) {
  while (true) {
    double re = uniform_signed(engine);
    double im = real_only ? 0.0 : uniform_signed(engine);
    Amplitude amp{re, im};
    if (std::abs(amp) >= 0.05) return amp;
  }
}

Occupation draw_occupation(std::mt19937_64& engine, Statistics stats,
                           int modes, int particles) {
  Occupation occ(modes, 0);
  if (stats == Statistics::boson) {
    for (int i = 0; i < particles; ++i) {
      int mode;
      do {
        mode = int(uniform_below(engine, modes));
      } while (occ[mode] >= FockState::max_occupation);
      ++occ[mode];
    }
  } else {
    // random particle-count subset of the modes
    int placed = 0;
    while (placed < particles) {
      int mode = int(uniform_below(engine, modes));
      if (occ[mode] == 0) {
        occ[mode] = 1;
        ++placed;
      }
    }
  }
  return occ;
}

}  // namespace

RandomState random_state(std::mt19937_64& engine, Statistics stats,
                         const RandomStateOptions& options) {
  while (true) {
    int modes = options.min_modes +
                int(uniform_below(
                    engine, options.max_modes - options.min_modes + 1));
    int capacity = stats == Statistics::fermion
                       ? modes
                       : modes * FockState::max_occupation;
    int particles =
        options.particle_number
            ? *options.particle_number
            : 1 + int(uniform_below(engine, std::min(4, capacity)));
    if (particles > capacity) continue;

    int term_count = 1 + int(uniform_below(engine, options.max_terms));
    std::vector<std::pair<Occupation, Amplitude>> terms;
    for (int t = 0; t < term_count; ++t) {
      terms.emplace_back(draw_occupation(engine, stats, modes, particles),
                         draw_amplitude(engine, options.real_amplitudes));
    }
    FockState state(stats, modes, terms);
    if (state.is_zero()) continue;

    int alice = 1 + int(uniform_below(engine, modes - 1));
    if (options.contiguous_local_support) {
      int lowest = particles + 1, highest = -1;
      for (const auto& [occ, amp] : state.terms()) {
        int total = 0;
        for (int j = 0; j < alice; ++j) total += occ[j];
        lowest = std::min(lowest, total);
        highest = std::max(highest, total);
      }
      std::vector<bool> seen(highest - lowest + 1, false);
      for (const auto& [occ, amp] : state.terms()) {
        int total = 0;
        for (int j = 0; j < alice; ++j) total += occ[j];
        seen[total - lowest] = true;
      }
      if (std::find(seen.begin(), seen.end(), false) != seen.end()) continue;
    }
    return {std::move(state), ModePartition{alice, modes - alice}};
  }
}

}  // namespace fockent
