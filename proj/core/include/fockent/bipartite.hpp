#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "fockent/fock_state.hpp"
#include "fockent/partition.hpp"

namespace fockent {

/// Small dense Hermitian positive-semidefinite matrix with unit trace.
/// basis_labels name the rows/columns: occupation strings like "01" for
/// reduced states, mode indices like "2" for one-body matrices. Labels are
/// ordered lexicographically so matrices reproduce bit-for-bit across runs.
struct DensityMatrix {
  Eigen::MatrixXcd entries;
  std::vector<std::string> basis_labels;

  int dim() const { return static_cast<int>(entries.rows()); }
};

struct Sector {
  int alice_particles = 0;
  double probability = 0.0;
  FockState state;  // unnormalized projection
};

/// Decomposition over Alice-local particle number; entries ascending in n,
/// restricted to sectors with probability above threshold.
struct SectorDecomposition {
  static constexpr double probability_threshold = 1e-12;
  std::vector<Sector> entries;
};

enum class Side { alice, bob };

std::string occupation_label(const Occupation& occ);

/// Keeps the terms whose Alice-block occupation totals n, with unchanged
/// amplitudes, along with P_n = <psi_n|psi_n>/<Psi|Psi>. A sector outside
/// the support yields the zero state with probability 0. Throws empty_state.
std::pair<FockState, double> project_local_number(const FockState& s,
                                                  const ModePartition& p,
                                                  int n);

SectorDecomposition sector_decomposition(const FockState& s,
                                         const ModePartition& p);

/// Coefficient matrix of the state grouped by (Alice occupation, Bob
/// occupation), with both local bases sorted lexicographically.
struct CoefficientMatrix {
  Eigen::MatrixXcd m;
  std::vector<Occupation> alice_basis;
  std::vector<Occupation> bob_basis;
};

CoefficientMatrix coefficient_matrix(const FockState& s, const ModePartition& p);

/// Traced-out reduced state of one party: M M^dag / Tr for Alice,
/// M^T conj(M) / Tr for Bob, where M is the coefficient matrix.
DensityMatrix reduced_density_matrix(const FockState& s, const ModePartition& p,
                                     Side side);

/// Normalized squared singular values of a coefficient matrix, descending;
/// values below the prune tolerance are dropped.
std::vector<double> schmidt_probabilities(const Eigen::MatrixXcd& m);

/// Schmidt probabilities of a state across the partition, computed from a
/// Gram matrix on the smaller local basis without forming the full
/// coefficient matrix. Agrees with the reduced-density-matrix eigenvalues.
std::vector<double> schmidt_spectrum(const FockState& s, const ModePartition& p);

}  // namespace fockent
