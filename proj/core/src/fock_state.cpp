#include "fockent/fock_state.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace fockent {

namespace {

int occupation_total(const Occupation& occ) {
  return std::accumulate(occ.begin(), occ.end(), 0);
}

void prune(FockState::TermMap& terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (std::abs(it->second) <= FockState::prune_tolerance) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
}

// Parity of the occupation total over modes 0 .. mode_index-1; the source
// of every fermionic sign in the library.
int sign_before(const Occupation& occ, int mode_index) {
  int parity = 0;
  for (int j = 0; j < mode_index; ++j) parity += occ[j];
  return (parity % 2 == 0) ? 1 : -1;
}

}  // namespace

const char* to_string(Statistics stats) {
  return stats == Statistics::boson ? "boson" : "fermion";
}

const char* to_string(errc code) {
  switch (code) {
    case errc::length_mismatch: return "length_mismatch";
    case errc::fermion_occupancy_violation: return "fermion_occupancy_violation";
    case errc::mixed_particle_number: return "mixed_particle_number";
    case errc::occupation_overflow: return "occupation_overflow";
    case errc::shape_mismatch: return "shape_mismatch";
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::stats_mismatch: return "stats_mismatch";
    case errc::empty_state: return "empty_state";
    case errc::empty_sector: return "empty_sector";
    case errc::not_density_matrix: return "not_density_matrix";
    case errc::wrong_particle_number: return "wrong_particle_number";
    case errc::wrong_statistics: return "wrong_statistics";
    case errc::degeneracy_violation: return "degeneracy_violation";
    case errc::syntax_error: return "syntax_error";
    case errc::arity_mismatch: return "arity_mismatch";
    case errc::too_large: return "too_large";
  }
  return "unknown";
}

FockState::FockState(Statistics stats, int mode_count,
                     const std::vector<std::pair<Occupation, Amplitude>>& terms)
    : stats_(stats), mode_count_(mode_count), particles_(0) {
  if (mode_count < 0) {
    throw Error(errc::length_mismatch, "mode count must be non-negative");
  }
  for (const auto& [occ, amp] : terms) {
    if (static_cast<int>(occ.size()) != mode_count) {
      throw Error(errc::length_mismatch,
                  "occupation vector length " + std::to_string(occ.size()) +
                      " does not match mode count " + std::to_string(mode_count));
    }
    for (auto n : occ) {
      if (n > max_occupation) {
        throw Error(errc::occupation_overflow,
                    "occupation " + std::to_string(int(n)) + " exceeds cap " +
                        std::to_string(max_occupation));
      }
      if (stats == Statistics::fermion && n > 1) {
        throw Error(errc::fermion_occupancy_violation,
                    "fermion occupation numbers are limited to 0 or 1");
      }
    }
    terms_[occ] += amp;
  }
  prune(terms_);
  bool first = true;
  for (const auto& [occ, amp] : terms_) {
    int total = occupation_total(occ);
    if (first) {
      particles_ = total;
      first = false;
    } else if (total != particles_) {
      throw Error(errc::mixed_particle_number,
                  "terms with differing particle totals " +
                      std::to_string(particles_) + " and " + std::to_string(total));
    }
  }
}

FockState FockState::zero(Statistics stats, int mode_count, int particles) {
  return FockState(stats, mode_count, particles, TermMap{});
}

FockState FockState::vacuum(Statistics stats, int mode_count) {
  TermMap terms;
  terms[Occupation(mode_count, 0)] = 1.0;
  return FockState(stats, mode_count, 0, std::move(terms));
}

FockState FockState::unchecked(Statistics stats, int mode_count, int particles,
                               TermMap terms) {
  prune(terms);
  return FockState(stats, mode_count, particles, std::move(terms));
}

double FockState::norm_squared() const {
  double total = 0.0;
  for (const auto& [occ, amp] : terms_) total += std::norm(amp);
  return total;
}

FockState FockState::scaled(Amplitude factor) const {
  TermMap scaled_terms;
  for (const auto& [occ, amp] : terms_) scaled_terms[occ] = amp * factor;
  return unchecked(stats_, mode_count_, particles_, std::move(scaled_terms));
}

std::complex<double> inner_product(const FockState& x, const FockState& y) {
  if (x.stats_ != y.stats_ || x.mode_count_ != y.mode_count_) {
    throw Error(errc::shape_mismatch,
                "inner product requires matching statistics and mode count");
  }
  std::complex<double> result = 0.0;
  const auto& small = x.terms_.size() <= y.terms_.size() ? x.terms_ : y.terms_;
  const auto& large = x.terms_.size() <= y.terms_.size() ? y.terms_ : x.terms_;
  const bool small_is_x = x.terms_.size() <= y.terms_.size();
  for (const auto& [occ, amp] : small) {
    auto it = large.find(occ);
    if (it == large.end()) continue;
    if (small_is_x) {
      result += std::conj(amp) * it->second;
    } else {
      result += std::conj(it->second) * amp;
    }
  }
  return result;
}

FockState apply_annihilation(const FockState& s, int mode_index) {
  if (mode_index < 0 || mode_index >= s.mode_count_) {
    throw Error(errc::index_out_of_range,
                "mode index " + std::to_string(mode_index) + " out of range");
  }
  FockState::TermMap result;
  for (const auto& [occ, amp] : s.terms_) {
    int n = occ[mode_index];
    if (n == 0) continue;
    Occupation lowered = occ;
    lowered[mode_index] = static_cast<std::uint8_t>(n - 1);
    if (s.stats_ == Statistics::boson) {
      result[lowered] += amp * std::sqrt(double(n));
    } else {
      result[lowered] += amp * double(sign_before(occ, mode_index));
    }
  }
  int particles = s.is_zero() ? s.particles_ : s.particles_ - 1;
  return FockState::unchecked(s.stats_, s.mode_count_, particles,
                              std::move(result));
}

FockState apply_creation(const FockState& s, int mode_index) {
  if (mode_index < 0 || mode_index >= s.mode_count_) {
    throw Error(errc::index_out_of_range,
                "mode index " + std::to_string(mode_index) + " out of range");
  }
  FockState::TermMap result;
  for (const auto& [occ, amp] : s.terms_) {
    int n = occ[mode_index];
    if (s.stats_ == Statistics::fermion && n == 1) continue;
    if (n >= FockState::max_occupation) {
      throw Error(errc::occupation_overflow,
                  "occupation cap " + std::to_string(FockState::max_occupation) +
                      " exceeded on mode " + std::to_string(mode_index));
    }
    Occupation raised = occ;
    raised[mode_index] = static_cast<std::uint8_t>(n + 1);
    if (s.stats_ == Statistics::boson) {
      result[raised] += amp * std::sqrt(double(n + 1));
    } else {
      result[raised] += amp * double(sign_before(occ, mode_index));
    }
  }
  int particles = s.is_zero() ? s.particles_ : s.particles_ + 1;
  return FockState::unchecked(s.stats_, s.mode_count_, particles,
                              std::move(result));
}

FockState add(const FockState& x, const FockState& y) {
  if (x.stats_ != y.stats_ || x.mode_count_ != y.mode_count_) {
    throw Error(errc::shape_mismatch,
                "sum requires matching statistics and mode count");
  }
  if (!x.is_zero() && !y.is_zero() && x.particles_ != y.particles_) {
    throw Error(errc::mixed_particle_number,
                "summands carry " + std::to_string(x.particles_) + " and " +
                    std::to_string(y.particles_) + " particles");
  }
  FockState::TermMap result = x.terms_;
  for (const auto& [occ, amp] : y.terms_) result[occ] += amp;
  int particles = x.is_zero() ? y.particles_ : x.particles_;
  return FockState::unchecked(x.stats_, x.mode_count_, particles,
                              std::move(result));
}

std::pair<FockState, ModePartition> compose(const FockState& x,
                                            const FockState& y,
                                            const ModePartition& px,
                                            const ModePartition& py) {
  if (x.stats_ != y.stats_) {
    throw Error(errc::stats_mismatch,
                "cannot compose states of different statistics");
  }
  if (px.total() != x.mode_count_ || py.total() != y.mode_count_) {
    throw Error(errc::shape_mismatch,
                "partition does not match state mode count");
  }
  ModePartition joined{px.alice_modes + py.alice_modes,
                       px.bob_modes + py.bob_modes};
  FockState::TermMap result;
  for (const auto& [xocc, xamp] : x.terms_) {
    int x_bob = 0;
    for (int j = px.alice_modes; j < px.total(); ++j) x_bob += xocc[j];
    for (const auto& [yocc, yamp] : y.terms_) {
      Occupation occ;
      occ.reserve(joined.total());
      occ.insert(occ.end(), xocc.begin(), xocc.begin() + px.alice_modes);
      occ.insert(occ.end(), yocc.begin(), yocc.begin() + py.alice_modes);
      occ.insert(occ.end(), xocc.begin() + px.alice_modes, xocc.end());
      occ.insert(occ.end(), yocc.begin() + py.alice_modes, yocc.end());
      Amplitude amp = xamp * yamp;
      if (x.stats_ == Statistics::fermion) {
        int y_alice = 0;
        for (int j = 0; j < py.alice_modes; ++j) y_alice += yocc[j];
        // y's Alice-block operators move left past x's Bob-block operators.
        if ((x_bob * y_alice) % 2 != 0) amp = -amp;
      }
      result[occ] += amp;
    }
  }
  int particles = x.particles_ + y.particles_;
  return {FockState::unchecked(x.stats_, joined.total(), particles,
                               std::move(result)),
          joined};
}

}  // namespace fockent
