#include "fockent/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fockent {

namespace {

// Tolerance ladder: representation error, solver error, analytic structure.
constexpr double hermiticity_tolerance = 1e-12;
constexpr double trace_tolerance = 1e-9;
constexpr double negativity_floor = -1e-9;
constexpr double pairing_tolerance = 1e-6;

void require_nonzero(const FockState& s) {
  if (s.is_zero()) {
    throw Error(errc::empty_state, "measure undefined on the zero state");
  }
}

void require_two_particles(const FockState& s) {
  require_nonzero(s);
  if (s.particle_number() != 2) {
    throw Error(errc::wrong_particle_number,
                "one-body measures are defined for N = 2, not N = " +
                    std::to_string(s.particle_number()));
  }
}

// One-body matrix over the given annihilated states, normalized to unit
// trace; entry (mu', mu) is <psi_mu | psi_mu'>.
Eigen::MatrixXcd one_body_matrix(const std::vector<FockState>& annihilated) {
  const int dim = static_cast<int>(annihilated.size());
  Eigen::MatrixXcd g(dim, dim);
  for (int mu = 0; mu < dim; ++mu) {
    for (int nu = 0; nu < dim; ++nu) {
      g(nu, mu) = inner_product(annihilated[mu], annihilated[nu]);
    }
  }
  double trace = g.trace().real();
  if (trace <= 0.0) {
    throw Error(errc::empty_state, "one-body matrix has vanishing trace");
  }
  return g / trace;
}

std::vector<double> density_matrix_eigenvalues(const DensityMatrix& rho) {
  const auto& m = rho.entries;
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(errc::not_density_matrix, "matrix is not square");
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > hermiticity_tolerance) {
    throw Error(errc::not_density_matrix, "matrix is not Hermitian");
  }
  if (std::abs(m.trace().real() - 1.0) > trace_tolerance ||
      std::abs(m.trace().imag()) > trace_tolerance) {
    throw Error(errc::not_density_matrix, "trace differs from one");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      m, Eigen::EigenvaluesOnly);
  std::vector<double> values(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + m.rows());
  for (double v : values) {
    if (v < negativity_floor) {
      throw Error(errc::not_density_matrix, "negative eigenvalue beyond floor");
    }
  }
  for (auto& v : values) v = std::clamp(v, 0.0, 1.0);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace

double shannon_entropy(std::span<const double> probabilities) {
  double entropy = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) entropy -= p * std::log2(p);
  }
  return entropy;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  auto values = density_matrix_eigenvalues(rho);
  return shannon_entropy(values);
}

double mode_entanglement(const FockState& s, const ModePartition& p) {
  auto spectrum = schmidt_spectrum(s, p);
  return shannon_entropy(spectrum);
}

double particle_entanglement(const FockState& s, const ModePartition& p) {
  auto sectors = sector_decomposition(s, p);
  double total = 0.0;
  for (const auto& sector : sectors.entries) {
    total += sector.probability * mode_entanglement(sector.state, p);
  }
  return total;
}

DensityMatrix single_particle_dm(const FockState& s) {
  require_two_particles(s);
  std::vector<FockState> annihilated;
  annihilated.reserve(s.mode_count());
  for (int mu = 0; mu < s.mode_count(); ++mu) {
    annihilated.push_back(apply_annihilation(s, mu));
  }
  DensityMatrix rho;
  rho.entries = one_body_matrix(annihilated);
  for (int mu = 0; mu < s.mode_count(); ++mu) {
    rho.basis_labels.push_back(std::to_string(mu));
  }
  return rho;
}

double single_particle_entropy(const FockState& s) {
  return von_neumann_entropy(single_particle_dm(s));
}

double qc_fermions(const FockState& s) {
  if (s.statistics() != Statistics::fermion) {
    throw Error(errc::wrong_statistics, "QC is a fermionic measure");
  }
  return single_particle_entropy(s) - 1.0;
}

std::vector<double> py_spectrum(const FockState& s) {
  auto values = density_matrix_eigenvalues(single_particle_dm(s));
  std::vector<double> weights;
  if (s.statistics() == Statistics::boson) {
    for (double v : values) {
      if (v > FockState::prune_tolerance) weights.push_back(v);
    }
    return weights;
  }
  // Fermion eigenvalues are doubly degenerate; consecutive descending
  // values pair up and each pair sum is one canonical weight.
  std::size_t i = 0;
  while (i + 1 < values.size()) {
    if (std::abs(values[i] - values[i + 1]) > pairing_tolerance) {
      throw Error(errc::degeneracy_violation,
                  "fermion one-body eigenvalues failed to pair");
    }
    double pair = values[i] + values[i + 1];
    if (pair > FockState::prune_tolerance) weights.push_back(pair);
    i += 2;
  }
  if (i < values.size() && values[i] > pairing_tolerance) {
    throw Error(errc::degeneracy_violation,
                "unpaired fermion one-body eigenvalue");
  }
  return weights;
}

std::pair<DensityMatrix, double> modified_single_particle_dm(
    const FockState& s, const ModePartition& p) {
  require_two_particles(s);
  auto [projected, probability] = project_local_number(s, p, 1);
  if (projected.is_zero()) {
    throw Error(errc::empty_sector, "state has no n = 1 sector");
  }
  std::vector<FockState> annihilated;
  annihilated.reserve(p.alice_modes);
  for (int k = 0; k < p.alice_modes; ++k) {
    annihilated.push_back(apply_annihilation(projected, k));
  }
  DensityMatrix rho;
  rho.entries = one_body_matrix(annihilated);
  for (int k = 0; k < p.alice_modes; ++k) {
    rho.basis_labels.push_back(std::to_string(k));
  }
  return {std::move(rho), probability};
}

MeasureReport full_report(const FockState& s, const ModePartition& p) {
  require_nonzero(s);
  MeasureReport report;
  report.e_m = mode_entanglement(s, p);
  auto sectors = sector_decomposition(s, p);
  double mean = 0.0;
  double mean_square = 0.0;
  for (const auto& sector : sectors.entries) {
    double e_m_sector = mode_entanglement(sector.state, p);
    report.e_p += sector.probability * e_m_sector;
    report.sectors.push_back(
        {sector.alice_particles, sector.probability, e_m_sector});
    mean += sector.probability * sector.alice_particles;
    mean_square +=
        sector.probability * sector.alice_particles * sector.alice_particles;
  }
  report.variance_alice = mean_square - mean * mean;
  if (s.particle_number() == 2) {
    report.s_single = single_particle_entropy(s);
    if (s.statistics() == Statistics::fermion) {
      report.qc_fermion = *report.s_single - 1.0;
    }
  }
  return report;
}

}  // namespace fockent
