#pragma once

#include <optional>
#include <vector>

#include "fockent/fock_state.hpp"
#include "fockent/partition.hpp"

namespace fockent {

/// Entanglement of particles for N single particles prepared independently
/// in N distinct modes, each split equally between the parties:
/// 2^-N * sum_n C(N,n) log2 C(N,n). Binomials use exact integer arithmetic.
double ep_split_singles_exact(int n);

/// Large-N form of the same quantity: N - log2(N)/2 - delta.
double ep_split_singles_asymptote(int n);

/// delta = (-1 + log2(pi) + 1/ln 2) / 2, evaluated at run time.
double split_singles_delta();

/// Variance of Alice's particle count under the sector distribution.
double alice_number_variance(const FockState& s, const ModePartition& p);

struct SuperadditivityReport {
  double lhs = 0.0;  // E_P of the composed state
  double rhs = 0.0;  // sum of the parts
  double gap = 0.0;  // lhs - rhs
  double v_psi = 0.0;
  double v_phi = 0.0;
  bool equality_predicted = false;  // min(v_psi, v_phi) vanishes
};

/// Composes the two states and compares E_P of the whole against the sum
/// of the parts. The gap is non-negative, and vanishes whenever either
/// state has zero Alice-number variance.
SuperadditivityReport check_superadditivity(const FockState& x,
                                            const FockState& y,
                                            const ModePartition& px,
                                            const ModePartition& py);

struct ScalingRow {
  int count = 0;
  double exact = 0.0;
  /// C * E_M - log2(V * C)/2; absent when the base variance vanishes.
  std::optional<double> asymptote;
  /// exact / (C * E_M); absent when the base state has no mode entanglement.
  std::optional<double> ratio_to_mode_entanglement;
};

/// Composes up to max_copies copies of the state and reports the exact
/// entanglement of particles per copy count, the large-C estimate, and the
/// ratio to the accumulated mode entanglement. Throws too_large when the
/// composed state would exceed the term budget.
std::vector<ScalingRow> copies_scaling(const FockState& s,
                                       const ModePartition& p, int max_copies);

}  // namespace fockent
