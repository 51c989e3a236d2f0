#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fockent/errors.hpp"
#include "fockent/partition.hpp"

namespace fockent {

enum class Statistics { boson, fermion };

const char* to_string(Statistics stats);

/// Per-mode particle counts. The global mode order is Alice's modes in
/// index order followed by Bob's; all fermionic signs derive from this
/// single canonical order.
using Occupation = std::vector<std::uint8_t>;

using Amplitude = std::complex<double>;

/// A pure state of N identical particles over M modes, stored as a sparse
/// map from occupation vectors to complex amplitudes. States are not
/// required to be normalized; norms are divided out only inside measures.
///
/// Values are immutable after construction: every operation returns a new
/// state, so instances are safe to share across threads.
class FockState {
 public:
  using TermMap = std::map<Occupation, Amplitude>;

  /// Amplitudes with magnitude at or below this are dropped.
  static constexpr double prune_tolerance = 1e-12;
  /// Largest per-mode occupation; keeps single-digit ket notation bijective.
  static constexpr int max_occupation = 9;

  /// Builds a state from (occupation, amplitude) terms. Duplicate
  /// occupation vectors have their amplitudes summed; near-zero results
  /// are pruned. Throws length_mismatch, fermion_occupancy_violation,
  /// occupation_overflow, or mixed_particle_number.
  FockState(Statistics stats, int mode_count,
            const std::vector<std::pair<Occupation, Amplitude>>& terms);

  /// The zero vector (empty term map). Its particle number is recorded
  /// but carries no meaning.
  static FockState zero(Statistics stats, int mode_count, int particles = 0);

  /// The no-particle state |0...0> with amplitude 1.
  static FockState vacuum(Statistics stats, int mode_count);

  Statistics statistics() const noexcept { return stats_; }
  int mode_count() const noexcept { return mode_count_; }
  /// Total particle number N shared by all terms (meaningless for the
  /// zero state).
  int particle_number() const noexcept { return particles_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }

  double norm_squared() const;

  /// Returns this state with every amplitude multiplied by factor.
  FockState scaled(Amplitude factor) const;

 private:
  FockState(Statistics stats, int mode_count, int particles, TermMap terms)
      : stats_(stats),
        mode_count_(mode_count),
        particles_(particles),
        terms_(std::move(terms)) {}

  static FockState unchecked(Statistics stats, int mode_count, int particles,
                             TermMap terms);

  Statistics stats_;
  int mode_count_;
  int particles_;
  TermMap terms_;

  friend std::complex<double> inner_product(const FockState&, const FockState&);
  friend FockState apply_annihilation(const FockState&, int);
  friend FockState apply_creation(const FockState&, int);
  friend FockState add(const FockState&, const FockState&);
  friend std::pair<FockState, ModePartition> compose(const FockState&,
                                                     const FockState&,
                                                     const ModePartition&,
                                                     const ModePartition&);
};

/// <x|y> over the orthonormal occupation basis. Throws shape_mismatch if
/// the states differ in statistics or mode count.
std::complex<double> inner_product(const FockState& x, const FockState& y);

/// Annihilation operator for one mode. Bosons pick up sqrt(n); fermions
/// pick up (-1)^(sum of occupations of modes before mode_index) and terms
/// with the mode empty vanish. Total if the result is the zero state.
FockState apply_annihilation(const FockState& s, int mode_index);

/// Creation operator for one mode; adjoint of apply_annihilation. Bosons
/// pick up sqrt(n+1); fermions kill doubly-occupied terms and use the same
/// sign rule.
FockState apply_creation(const FockState& s, int mode_index);

/// Term-wise sum of two states on the same mode set.
FockState add(const FockState& x, const FockState& y);

/// Tensor composition on disjoint mode sets. The result lives on the
/// concatenated modes reordered Alice-block-first: Alice gets x's Alice
/// modes then y's, Bob likewise. For fermions the reordering sign
/// (-1)^(n_B(x-term) * n_A(y-term)) is applied per term pair.
std::pair<FockState, ModePartition> compose(const FockState& x,
                                            const FockState& y,
                                            const ModePartition& px,
                                            const ModePartition& py);

}  // namespace fockent
