#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fockent/bipartite.hpp"
#include "fockent/fock_state.hpp"

namespace fockent {

/// Binary Shannon entropy of a probability list, with 0 log 0 = 0.
double shannon_entropy(std::span<const double> probabilities);

/// -Tr[rho log2 rho] in bits. Validates the density-matrix invariants
/// (Hermitian within 1e-12, unit trace within 1e-9, eigenvalues above
/// -1e-9) and throws not_density_matrix on violation.
double von_neumann_entropy(const DensityMatrix& rho);

/// Entanglement of modes: entropy of Alice's reduced state across the
/// partition, in ebits. Normalization- and local-basis-invariant.
double mode_entanglement(const FockState& s, const ModePartition& p);

/// Entanglement of particles: the sector-probability-weighted average of
/// sector mode entanglements. The operationally extractable entanglement
/// once local operations must conserve local particle number.
double particle_entanglement(const FockState& s, const ModePartition& p);

/// One-body matrix <Psi|c+_mu c_mu'|Psi> over all modes, normalized to unit
/// trace. Defined for two-particle states only (wrong_particle_number
/// otherwise); basis labels are mode indices.
DensityMatrix single_particle_dm(const FockState& s);

/// Entropy of the one-body matrix: S_b for bosons, S_f for fermions.
double single_particle_entropy(const FockState& s);

/// Quantum correlation between two fermions, S_f - 1 bits.
double qc_fermions(const FockState& s);

/// Canonical-decomposition weights of a two-particle state. Bosons: the
/// eigenvalues of the one-body matrix. Fermions: eigenvalues come in
/// degenerate pairs; returns the pair sums. Throws degeneracy_violation if
/// the fermionic pairing fails beyond tolerance (a numerical failure, since
/// the pairing is guaranteed analytically).
std::vector<double> py_spectrum(const FockState& s);

/// One-body matrix restricted to Alice's modes, built from the n=1 sector
/// projection, plus P_1. P_1 * S of this matrix equals the entanglement of
/// particles for any two-particle state.
std::pair<DensityMatrix, double> modified_single_particle_dm(
    const FockState& s, const ModePartition& p);

struct SectorSummary {
  int alice_particles = 0;
  double probability = 0.0;
  double mode_entanglement = 0.0;
};

/// Aggregate of every measure defined for a state. Inapplicable entries
/// (one-body entropy away from N=2, QC for bosons) are absent, never 0.
struct MeasureReport {
  double e_m = 0.0;
  double e_p = 0.0;
  std::optional<double> s_single;
  std::optional<double> qc_fermion;
  double variance_alice = 0.0;
  std::vector<SectorSummary> sectors;
};

MeasureReport full_report(const FockState& s, const ModePartition& p);

}  // namespace fockent
