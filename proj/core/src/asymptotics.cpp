#include "fockent/asymptotics.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fockent/bipartite.hpp"
#include "fockent/measures.hpp"

namespace fockent {

namespace {

using boost::multiprecision::cpp_int;

constexpr double variance_zero_tolerance = 1e-12;
constexpr long long composed_term_limit = 1'000'000;

// log2 of a positive integer, from its bit length and leading bits. Exact
// enough (relative error ~1e-18) for any width.
double log2_integer(const cpp_int& value) {
  std::size_t bits = msb(value) + 1;
  if (bits <= 62) return std::log2(value.convert_to<double>());
  cpp_int top = value >> (bits - 62);
  return std::log2(top.convert_to<double>()) + double(bits - 62);
}

}  // namespace

double split_singles_delta() {
  return (-1.0 + std::log2(std::numbers::pi) + 1.0 / std::numbers::ln2) / 2.0;
}

double ep_split_singles_exact(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  double total = 0.0;
  cpp_int binomial = 1;
  for (int k = 0; k <= n; ++k) {
    double log2_binomial = log2_integer(binomial);
    // probability C(n,k)/2^n, assembled in log space to avoid overflow
    double probability = std::exp2(log2_binomial - double(n));
    total += probability * log2_binomial;
    if (k < n) {
      binomial *= (n - k);
      binomial /= (k + 1);
    }
  }
  return total;
}

double ep_split_singles_asymptote(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  return double(n) - 0.5 * std::log2(double(n)) - split_singles_delta();
}

double alice_number_variance(const FockState& s, const ModePartition& p) {
  auto sectors = sector_decomposition(s, p);
  double mean = 0.0;
  double mean_square = 0.0;
  for (const auto& sector : sectors.entries) {
    mean += sector.probability * sector.alice_particles;
    mean_square +=
        sector.probability * sector.alice_particles * sector.alice_particles;
  }
  return mean_square - mean * mean;
}

SuperadditivityReport check_superadditivity(const FockState& x,
                                            const FockState& y,
                                            const ModePartition& px,
                                            const ModePartition& py) {
  auto [composed, joined] = compose(x, y, px, py);
  SuperadditivityReport report;
  report.lhs = particle_entanglement(composed, joined);
  report.rhs = particle_entanglement(x, px) + particle_entanglement(y, py);
  report.gap = report.lhs - report.rhs;
  report.v_psi = alice_number_variance(x, px);
  report.v_phi = alice_number_variance(y, py);
  report.equality_predicted =
      std::min(report.v_psi, report.v_phi) < variance_zero_tolerance;
  return report;
}

std::vector<ScalingRow> copies_scaling(const FockState& s,
                                       const ModePartition& p,
                                       int max_copies) {
  if (max_copies < 1) throw std::invalid_argument("max_copies must be >= 1");
  if (s.is_zero()) {
    throw Error(errc::empty_state, "copies scaling undefined on the zero state");
  }
  const double term_count = double(s.terms().size());
  if (max_copies * std::log(term_count) > std::log(double(composed_term_limit))) {
    throw Error(errc::too_large, "composed state would exceed the term budget");
  }
  if (static_cast<long long>(max_copies) * s.mode_count() > 4096) {
    throw Error(errc::too_large, "composed state would exceed the mode budget");
  }

  const double base_e_m = mode_entanglement(s, p);
  const double base_variance = alice_number_variance(s, p);

  std::vector<ScalingRow> rows;
  FockState current = s;
  ModePartition current_partition = p;
  for (int c = 1; c <= max_copies; ++c) {
    if (c > 1) {
      auto [next, joined] = compose(current, s, current_partition, p);
      current = std::move(next);
      current_partition = joined;
    }
    ScalingRow row;
    row.count = c;
    row.exact = particle_entanglement(current, current_partition);
    if (base_variance >= variance_zero_tolerance) {
      row.asymptote =
          c * base_e_m - 0.5 * std::log2(base_variance * double(c));
    }
    if (base_e_m > 0.0) {
      row.ratio_to_mode_entanglement = row.exact / (c * base_e_m);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fockent
