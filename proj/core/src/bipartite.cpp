#include "fockent/bipartite.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fockent {

namespace {

// Dense spectra beyond this dimension are refused rather than attempted.
constexpr int dense_dimension_limit = 4096;

void require_usable(const FockState& s, const ModePartition& p) {
  if (p.alice_modes < 0 || p.bob_modes < 0 || p.total() != s.mode_count()) {
    throw Error(errc::shape_mismatch,
                "partition does not match state mode count");
  }
  if (s.is_zero()) {
    throw Error(errc::empty_state, "operation undefined on the zero state");
  }
}

int alice_total(const Occupation& occ, const ModePartition& p) {
  return std::accumulate(occ.begin(), occ.begin() + p.alice_modes, 0);
}

std::vector<double> normalized_descending(std::vector<double> values,
                                          double trace) {
  for (auto& v : values) v /= trace;
  std::sort(values.begin(), values.end(), std::greater<>());
  while (!values.empty() && values.back() < FockState::prune_tolerance) {
    values.pop_back();
  }
  return values;
}

}  // namespace

std::string occupation_label(const Occupation& occ) {
  std::string label;
  label.reserve(occ.size());
  for (auto n : occ) label.push_back(static_cast<char>('0' + n));
  return label;
}

std::pair<FockState, double> project_local_number(const FockState& s,
                                                  const ModePartition& p,
                                                  int n) {
  require_usable(s, p);
  std::vector<std::pair<Occupation, Amplitude>> kept;
  double norm_kept = 0.0;
  for (const auto& [occ, amp] : s.terms()) {
    if (alice_total(occ, p) == n) {
      kept.emplace_back(occ, amp);
      norm_kept += std::norm(amp);
    }
  }
  if (kept.empty()) {
    return {FockState::zero(s.statistics(), s.mode_count(), n), 0.0};
  }
  return {FockState(s.statistics(), s.mode_count(), kept),
          norm_kept / s.norm_squared()};
}

SectorDecomposition sector_decomposition(const FockState& s,
                                         const ModePartition& p) {
  require_usable(s, p);
  SectorDecomposition decomposition;
  for (int n = 0; n <= s.particle_number(); ++n) {
    auto [state, probability] = project_local_number(s, p, n);
    if (probability > SectorDecomposition::probability_threshold) {
      decomposition.entries.push_back({n, probability, std::move(state)});
    }
  }
  return decomposition;
}

CoefficientMatrix coefficient_matrix(const FockState& s,
                                     const ModePartition& p) {
  require_usable(s, p);
  std::map<Occupation, int> alice_index;
  std::map<Occupation, int> bob_index;
  for (const auto& [occ, amp] : s.terms()) {
    alice_index.emplace(Occupation(occ.begin(), occ.begin() + p.alice_modes), 0);
    bob_index.emplace(Occupation(occ.begin() + p.alice_modes, occ.end()), 0);
  }
  if (static_cast<int>(alice_index.size()) > dense_dimension_limit ||
      static_cast<int>(bob_index.size()) > dense_dimension_limit) {
    throw Error(errc::too_large, "coefficient matrix dimension exceeds limit");
  }
  CoefficientMatrix result;
  int i = 0;
  for (auto& [occ, idx] : alice_index) {
    idx = i++;
    result.alice_basis.push_back(occ);
  }
  int j = 0;
  for (auto& [occ, idx] : bob_index) {
    idx = j++;
    result.bob_basis.push_back(occ);
  }
  result.m = Eigen::MatrixXcd::Zero(alice_index.size(), bob_index.size());
  for (const auto& [occ, amp] : s.terms()) {
    Occupation a(occ.begin(), occ.begin() + p.alice_modes);
    Occupation b(occ.begin() + p.alice_modes, occ.end());
    result.m(alice_index[a], bob_index[b]) = amp;
  }
  return result;
}

DensityMatrix reduced_density_matrix(const FockState& s, const ModePartition& p,
                                     Side side) {
  auto coeff = coefficient_matrix(s, p);
  double trace = coeff.m.squaredNorm();
  DensityMatrix rho;
  if (side == Side::alice) {
    rho.entries = (coeff.m * coeff.m.adjoint()) / trace;
    for (const auto& occ : coeff.alice_basis) {
      rho.basis_labels.push_back(occupation_label(occ));
    }
  } else {
    rho.entries = (coeff.m.transpose() * coeff.m.conjugate()) / trace;
    for (const auto& occ : coeff.bob_basis) {
      rho.basis_labels.push_back(occupation_label(occ));
    }
  }
  return rho;
}

std::vector<double> schmidt_probabilities(const Eigen::MatrixXcd& m) {
  const bool alice_smaller = m.rows() <= m.cols();
  Eigen::MatrixXcd gram = alice_smaller ? Eigen::MatrixXcd(m * m.adjoint())
                                        : Eigen::MatrixXcd(m.adjoint() * m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      gram, Eigen::EigenvaluesOnly);
  std::vector<double> values(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + gram.rows());
  for (auto& v : values) v = std::max(v, 0.0);
  return normalized_descending(std::move(values), m.squaredNorm());
}

std::vector<double> schmidt_spectrum(const FockState& s,
                                     const ModePartition& p) {
  require_usable(s, p);

  std::map<Occupation, int> alice_index;
  std::map<Occupation, int> bob_index;
  for (const auto& [occ, amp] : s.terms()) {
    alice_index.emplace(Occupation(occ.begin(), occ.begin() + p.alice_modes), 0);
    bob_index.emplace(Occupation(occ.begin() + p.alice_modes, occ.end()), 0);
  }
  const bool alice_smaller = alice_index.size() <= bob_index.size();
  auto& small_index = alice_smaller ? alice_index : bob_index;
  auto& other_index = alice_smaller ? bob_index : alice_index;
  int i = 0;
  for (auto& [occ, idx] : small_index) idx = i++;
  int j = 0;
  for (auto& [occ, idx] : other_index) idx = j++;

  // Group terms by the larger side; terms in one group interfere in the
  // Gram matrix of the smaller side.
  std::vector<std::vector<std::pair<int, Amplitude>>> groups(other_index.size());
  for (const auto& [occ, amp] : s.terms()) {
    Occupation a(occ.begin(), occ.begin() + p.alice_modes);
    Occupation b(occ.begin() + p.alice_modes, occ.end());
    int small = alice_smaller ? alice_index[a] : bob_index[b];
    int other = alice_smaller ? bob_index[b] : alice_index[a];
    groups[other].emplace_back(small, amp);
  }

  const int dim = static_cast<int>(small_index.size());
  double trace = s.norm_squared();

  bool diagonal = true;
  for (const auto& group : groups) {
    if (group.size() > 1) {
      diagonal = false;
      break;
    }
  }
  if (diagonal) {
    std::vector<double> values(dim, 0.0);
    for (const auto& group : groups) {
      values[group.front().first] += std::norm(group.front().second);
    }
    return normalized_descending(std::move(values), trace);
  }

  if (dim > dense_dimension_limit) {
    throw Error(errc::too_large, "Schmidt spectrum dimension exceeds limit");
  }
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& group : groups) {
    for (const auto& [row, amp_row] : group) {
      for (const auto& [col, amp_col] : group) {
        gram(row, col) += amp_row * std::conj(amp_col);
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      gram, Eigen::EigenvaluesOnly);
  std::vector<double> values(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + dim);
  for (auto& v : values) v = std::max(v, 0.0);
  return normalized_descending(std::move(values), trace);
}

}  // namespace fockent
