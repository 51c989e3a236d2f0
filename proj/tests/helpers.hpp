#pragma once

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "doctest.h"
#include "fockent/fock_state.hpp"
#include "fockent/partition.hpp"

namespace testutil {

using fockent::Amplitude;
using fockent::FockState;
using fockent::ModePartition;
using fockent::Occupation;
using fockent::Statistics;

inline Occupation occ(std::initializer_list<int> values) {
  Occupation result;
  for (int v : values) result.push_back(static_cast<std::uint8_t>(v));
  return result;
}

inline FockState state(
    Statistics stats, int modes,
    std::initializer_list<std::pair<std::initializer_list<int>, Amplitude>>
        terms) {
  std::vector<std::pair<Occupation, Amplitude>> built;
  for (const auto& [occupations, amp] : terms) {
    built.emplace_back(occ(occupations), amp);
  }
  return FockState(stats, modes, built);
}

/// |0,1> + |1,0>: one particle split equally between the parties.
inline FockState split_single(Statistics stats = Statistics::boson) {
  return state(stats, 2, {{{0, 1}, 1.0}, {{1, 0}, 1.0}});
}

inline ModePartition split_single_partition() { return {1, 1}; }

/// The four-term two-particle state (|0,1>+|1,0>)(|0,1>+|1,0>).
inline std::pair<FockState, ModePartition> two_split_singles(
    Statistics stats = Statistics::boson) {
  return fockent::compose(split_single(stats), split_single(stats),
                          split_single_partition(), split_single_partition());
}

/// n independent split singles composed together.
inline std::pair<FockState, ModePartition> composed_singles(
    int n, Statistics stats = Statistics::boson) {
  FockState current = split_single(stats);
  ModePartition partition = split_single_partition();
  for (int i = 1; i < n; ++i) {
    auto [next, joined] = fockent::compose(current, split_single(stats),
                                           partition,
                                           split_single_partition());
    current = std::move(next);
    partition = joined;
  }
  return {std::move(current), partition};
}

inline doctest::Approx approx(double value, double eps = 1e-9) {
  return doctest::Approx(value).epsilon(eps);
}

inline bool amp_near(Amplitude a, Amplitude b, double tol = 1e-12) {
  return std::abs(a - b) <= tol;
}

}  // namespace testutil
