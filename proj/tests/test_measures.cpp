#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "fockent/measures.hpp"
#include "fockent/random.hpp"
#include "helpers.hpp"

using namespace fockent;
using namespace testutil;

namespace {

DensityMatrix diagonal(std::initializer_list<double> values) {
  DensityMatrix rho;
  rho.entries = Eigen::MatrixXcd::Zero(values.size(), values.size());
  int i = 0;
  for (double v : values) {
    rho.entries(i, i) = v;
    rho.basis_labels.push_back(std::to_string(i));
    ++i;
  }
  return rho;
}

Eigen::MatrixXcd random_unitary(std::mt19937_64& engine, int dim) {
  Eigen::MatrixXcd gaussian(dim, dim);
  std::normal_distribution<double> normal;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      gaussian(r, c) = Amplitude{normal(engine), normal(engine)};
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gaussian);
  return qr.householderQ();
}

}  // namespace

TEST_CASE("von Neumann entropy of explicit matrices") {
  CHECK(von_neumann_entropy(diagonal({0.5, 0.5})) == approx(1.0, 1e-12));
  CHECK(von_neumann_entropy(diagonal({1.0})) == approx(0.0, 1e-12));
  CHECK(von_neumann_entropy(diagonal({0.25, 0.25, 0.25, 0.25})) ==
        approx(2.0, 1e-12));
}

TEST_CASE("von Neumann entropy rejects invalid matrices") {
  CHECK_THROWS_AS(von_neumann_entropy(diagonal({0.5, 0.6})), Error);
  CHECK_THROWS_AS(von_neumann_entropy(diagonal({1.5, -0.5})), Error);
  DensityMatrix skewed = diagonal({0.5, 0.5});
  skewed.entries(0, 1) = 0.1;
  CHECK_THROWS_AS(von_neumann_entropy(skewed), Error);
}

TEST_CASE("mode entanglement golden values") {
  CHECK(mode_entanglement(split_single(), {1, 1}) == approx(1.0));

  auto [composed, partition] = two_split_singles();
  CHECK(mode_entanglement(composed, partition) == approx(2.0));

  FockState condensate = state(
      Statistics::boson, 2,
      {{{0, 2}, 1.0}, {{1, 1}, std::sqrt(2.0)}, {{2, 0}, 1.0}});
  CHECK(mode_entanglement(condensate, {1, 1}) == approx(1.5));
}

TEST_CASE("particle entanglement golden values") {
  CHECK(particle_entanglement(split_single(), {1, 1}) == approx(0.0));

  auto [composed, partition] = two_split_singles();
  CHECK(particle_entanglement(composed, partition) == approx(0.5));

  FockState swapped = state(Statistics::boson, 4,
                            {{{0, 1, 1, 0}, 1.0}, {{1, 0, 0, 1}, 1.0}});
  CHECK(particle_entanglement(swapped, {2, 2}) == approx(1.0));
  CHECK(mode_entanglement(swapped, {2, 2}) == approx(1.0));

  FockState both_or_neither = state(
      Statistics::boson, 4, {{{1, 1, 0, 0}, 1.0}, {{0, 0, 1, 1}, 1.0}});
  CHECK(particle_entanglement(both_or_neither, {2, 2}) == approx(0.0));
  CHECK(mode_entanglement(both_or_neither, {2, 2}) == approx(1.0));
}

TEST_CASE("one-body matrix of two-particle states") {
  FockState pair = state(Statistics::boson, 2, {{{1, 1}, 1.0}});
  auto rho = single_particle_dm(pair);
  REQUIRE(rho.dim() == 2);
  CHECK(rho.basis_labels == std::vector<std::string>{"0", "1"});
  CHECK(amp_near(rho.entries(0, 0), 0.5));
  CHECK(amp_near(rho.entries(1, 1), 0.5));
  CHECK(amp_near(rho.entries(0, 1), 0.0));

  FockState condensate = state(
      Statistics::boson, 2,
      {{{0, 2}, 1.0}, {{1, 1}, std::sqrt(2.0)}, {{2, 0}, 1.0}});
  auto projector = single_particle_dm(condensate);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      CHECK(amp_near(projector.entries(r, c), 0.5, 1e-9));
    }
  }

  FockState swapped = state(Statistics::boson, 4,
                            {{{0, 1, 1, 0}, 1.0}, {{1, 0, 0, 1}, 1.0}});
  auto quarter = single_particle_dm(swapped);
  REQUIRE(quarter.dim() == 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      CHECK(amp_near(quarter.entries(r, c), r == c ? 0.25 : 0.0, 1e-9));
    }
  }

  CHECK_THROWS_AS(single_particle_dm(split_single()), Error);
  CHECK_THROWS_AS(single_particle_dm(FockState::zero(Statistics::boson, 2)),
                  Error);
}

TEST_CASE("one-body entropies") {
  FockState pair = state(Statistics::boson, 2, {{{1, 1}, 1.0}});
  CHECK(single_particle_entropy(pair) == approx(1.0));

  FockState swapped = state(Statistics::fermion, 4,
                            {{{0, 1, 1, 0}, 1.0}, {{1, 0, 0, 1}, 1.0}});
  CHECK(single_particle_entropy(swapped) == approx(2.0));

  auto [composed, partition] = two_split_singles();
  CHECK(single_particle_entropy(composed) == approx(1.0));

  // The signed fermionic composition is what keeps S_f at 1 here; the
  // same term map with all-positive amplitudes would give S_f = 2.
  auto [fermion_composed, fermion_partition] =
      two_split_singles(Statistics::fermion);
  CHECK(single_particle_entropy(fermion_composed) == approx(1.0));
}

TEST_CASE("fermionic quantum correlation") {
  FockState pair = state(Statistics::fermion, 2, {{{1, 1}, 1.0}});
  CHECK(qc_fermions(pair) == approx(0.0));

  FockState swapped = state(Statistics::fermion, 4,
                            {{{0, 1, 1, 0}, 1.0}, {{1, 0, 0, 1}, 1.0}});
  CHECK(qc_fermions(swapped) == approx(1.0));

  FockState both_or_neither = state(
      Statistics::fermion, 4, {{{1, 1, 0, 0}, 1.0}, {{0, 0, 1, 1}, 1.0}});
  CHECK(qc_fermions(both_or_neither) == approx(1.0));

  CHECK_THROWS_AS(qc_fermions(state(Statistics::boson, 2, {{{1, 1}, 1.0}})),
                  Error);
  CHECK_THROWS_AS(
      qc_fermions(state(Statistics::fermion, 3, {{{1, 1, 1}, 1.0}})), Error);
}

TEST_CASE("canonical-decomposition weights") {
  FockState condensate = state(
      Statistics::boson, 2,
      {{{0, 2}, 1.0}, {{1, 1}, std::sqrt(2.0)}, {{2, 0}, 1.0}});
  auto weights = py_spectrum(condensate);
  REQUIRE(weights.size() == 1);
  CHECK(weights[0] == approx(1.0));

  FockState swapped = state(Statistics::fermion, 4,
                            {{{0, 1, 1, 0}, 1.0}, {{1, 0, 0, 1}, 1.0}});
  auto pairs = py_spectrum(swapped);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == approx(0.5));
  CHECK(pairs[1] == approx(0.5));

  FockState fermion_pair = state(Statistics::fermion, 2, {{{1, 1}, 1.0}});
  auto single = py_spectrum(fermion_pair);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == approx(1.0));
}

TEST_CASE("one-body matrix restricted to Alice") {
  auto [composed, partition] = two_split_singles();
  auto [rho, p1] = modified_single_particle_dm(composed, partition);
  CHECK(p1 == approx(0.5, 1e-12));
  REQUIRE(rho.dim() == 2);
  CHECK(amp_near(rho.entries(0, 0), 0.5));
  CHECK(amp_near(rho.entries(1, 1), 0.5));
  CHECK(amp_near(rho.entries(0, 1), 0.0));

  FockState pair = state(Statistics::boson, 2, {{{1, 1}, 1.0}});
  auto [pure, p_pure] = modified_single_particle_dm(pair, {1, 1});
  CHECK(p_pure == approx(1.0, 1e-12));
  REQUIRE(pure.dim() == 1);
  CHECK(amp_near(pure.entries(0, 0), 1.0));

  FockState both_or_neither = state(
      Statistics::boson, 4, {{{1, 1, 0, 0}, 1.0}, {{0, 0, 1, 1}, 1.0}});
  CHECK_THROWS_AS(modified_single_particle_dm(both_or_neither, {2, 2}), Error);
}

TEST_CASE("full measure reports") {
  auto single = full_report(split_single(), {1, 1});
  CHECK(single.e_m == approx(1.0));
  CHECK(single.e_p == approx(0.0));
  CHECK_FALSE(single.s_single.has_value());
  CHECK_FALSE(single.qc_fermion.has_value());
  CHECK(single.variance_alice == approx(0.25));

  FockState two_mode_pair =
      state(Statistics::boson, 2, {{{0, 2}, 1.0}, {{2, 0}, 1.0}});
  auto report = full_report(two_mode_pair, {1, 1});
  CHECK(report.e_m == approx(1.0));
  REQUIRE(report.s_single.has_value());
  CHECK(*report.s_single == approx(1.0));
  CHECK(report.e_p == approx(0.0));
  CHECK_FALSE(report.qc_fermion.has_value());

  FockState pair = state(Statistics::boson, 2, {{{1, 1}, 1.0}});
  auto product = full_report(pair, {1, 1});
  CHECK(product.e_m == approx(0.0));
  REQUIRE(product.s_single.has_value());
  CHECK(*product.s_single == approx(1.0));
  CHECK(product.e_p == approx(0.0));
  CHECK(product.variance_alice == approx(0.0));

  FockState fermion_pair = state(Statistics::fermion, 2, {{{1, 1}, 1.0}});
  auto fermionic = full_report(fermion_pair, {1, 1});
  REQUIRE(fermionic.qc_fermion.has_value());
  CHECK(*fermionic.qc_fermion == approx(0.0));
}

TEST_CASE("particle entanglement never exceeds mode entanglement") {
  std::mt19937_64 engine(37);
  for (auto stats : {Statistics::boson, Statistics::fermion}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto drawn = random_state(engine, stats);
      double e_m = mode_entanglement(drawn.state, drawn.partition);
      double e_p = particle_entanglement(drawn.state, drawn.partition);
      CHECK(e_p <= e_m + 1e-9);
    }
  }
}

TEST_CASE("weighted Alice one-body entropy equals particle entanglement") {
  std::mt19937_64 engine(41);
  RandomStateOptions options;
  options.particle_number = 2;
  for (auto stats : {Statistics::boson, Statistics::fermion}) {
    for (int trial = 0; trial < 60; ++trial) {
      auto drawn = random_state(engine, stats, options);
      double e_p = particle_entanglement(drawn.state, drawn.partition);
      auto [middle, p1] = project_local_number(drawn.state, drawn.partition, 1);
      if (middle.is_zero()) {
        CHECK(e_p == approx(0.0));
        continue;
      }
      auto [rho, probability] =
          modified_single_particle_dm(drawn.state, drawn.partition);
      CHECK(probability * von_neumann_entropy(rho) == approx(e_p));
    }
  }
}

TEST_CASE("uncorrelated boson pairs carry no particle entanglement") {
  // a single mode split between the parties with coefficients alpha, beta:
  // alpha^2 |2,0> + sqrt(2) alpha beta |1,1> + beta^2 |0,2>
  std::mt19937_64 engine(43);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 50; ++trial) {
    Amplitude alpha{normal(engine), normal(engine)};
    Amplitude beta{normal(engine), normal(engine)};
    FockState split_pair(Statistics::boson, 2,
                         {{occ({2, 0}), alpha * alpha},
                          {occ({1, 1}), std::sqrt(2.0) * alpha * beta},
                          {occ({0, 2}), beta * beta}});
    if (split_pair.is_zero()) continue;
    CHECK(particle_entanglement(split_pair, {1, 1}) == approx(0.0));
    CHECK(py_spectrum(split_pair).size() == 1);
  }
}

TEST_CASE("one-body entropy matches the canonical weights") {
  std::mt19937_64 engine(47);
  RandomStateOptions options;
  options.particle_number = 2;
  for (int trial = 0; trial < 60; ++trial) {
    auto boson = random_state(engine, Statistics::boson, options);
    auto weights = py_spectrum(boson.state);
    CHECK(single_particle_entropy(boson.state) ==
          approx(shannon_entropy(weights)));

    auto fermion = random_state(engine, Statistics::fermion, options);
    auto pair_weights = py_spectrum(fermion.state);
    CHECK(single_particle_entropy(fermion.state) ==
          approx(1.0 + shannon_entropy(pair_weights)));
    CHECK(qc_fermions(fermion.state) >= -1e-9);
  }
}

TEST_CASE("mode entanglement agrees across statistics on shared term maps") {
  std::mt19937_64 engine(53);
  RandomStateOptions options;
  for (int trial = 0; trial < 60; ++trial) {
    auto fermion = random_state(engine, Statistics::fermion, options);
    std::vector<std::pair<Occupation, Amplitude>> terms(
        fermion.state.terms().begin(), fermion.state.terms().end());
    FockState boson(Statistics::boson, fermion.state.mode_count(), terms);
    CHECK(mode_entanglement(boson, fermion.partition) ==
          approx(mode_entanglement(fermion.state, fermion.partition)));
    CHECK(particle_entanglement(boson, fermion.partition) ==
          approx(particle_entanglement(fermion.state, fermion.partition)));
  }
}

TEST_CASE("one-body entropies coincide on the shared reference states") {
  // S_b = S_f on every reference state where both are defined. This is a
  // feature of those states, not of arbitrary term maps: the three-term
  // state |1100>+|0110>+|1010> has S_b = 1.2516... but S_f = 1, because
  // the annihilation signs form a loop no mode relabeling can undo.
  for (auto terms : {std::vector<std::pair<Occupation, Amplitude>>{
                         {{1, 1}, 1.0}},
                     {{{0, 1, 1, 0}, 1.0}, {{1, 0, 0, 1}, 1.0}},
                     {{{1, 1, 0, 0}, 1.0}, {{0, 0, 1, 1}, 1.0}}}) {
    int modes = int(terms.front().first.size());
    FockState boson(Statistics::boson, modes, terms);
    FockState fermion(Statistics::fermion, modes, terms);
    CHECK(single_particle_entropy(boson) ==
          approx(single_particle_entropy(fermion)));
  }

  FockState frustrated(Statistics::fermion, 4,
                       {{occ({1, 1, 0, 0}), 1.0},
                        {occ({0, 1, 1, 0}), 1.0},
                        {occ({1, 0, 1, 0}), 1.0}});
  CHECK(single_particle_entropy(frustrated) == approx(1.0));
  FockState frustrated_boson(Statistics::boson, 4,
                             {{occ({1, 1, 0, 0}), 1.0},
                              {occ({0, 1, 1, 0}), 1.0},
                              {occ({1, 0, 1, 0}), 1.0}});
  double p_major = 2.0 / 3.0, p_minor = 1.0 / 6.0;
  double expected = -(p_major * std::log2(p_major) +
                      2.0 * p_minor * std::log2(p_minor));
  CHECK(single_particle_entropy(frustrated_boson) == approx(expected));
}

TEST_CASE("measures are invariant under rescaling") {
  std::mt19937_64 engine(59);
  RandomStateOptions options;
  options.particle_number = 2;
  for (auto stats : {Statistics::boson, Statistics::fermion}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto drawn = random_state(engine, stats, options);
      Amplitude factor{0.3 + double(engine() % 100) / 25.0,
                       double(engine() % 100) / 50.0};
      FockState scaled = drawn.state.scaled(factor);
      CHECK(mode_entanglement(scaled, drawn.partition) ==
            approx(mode_entanglement(drawn.state, drawn.partition)));
      CHECK(particle_entanglement(scaled, drawn.partition) ==
            approx(particle_entanglement(drawn.state, drawn.partition)));
      CHECK(single_particle_entropy(scaled) ==
            approx(single_particle_entropy(drawn.state)));
    }
  }
}

TEST_CASE("measures are invariant under local basis changes") {
  std::mt19937_64 engine(61);
  for (auto stats : {Statistics::boson, Statistics::fermion}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto drawn = random_state(engine, stats);
      auto coeff = coefficient_matrix(drawn.state, drawn.partition);
      auto unitary = random_unitary(engine, int(coeff.m.rows()));
      double before = shannon_entropy(schmidt_probabilities(coeff.m));
      double after =
          shannon_entropy(schmidt_probabilities(Eigen::MatrixXcd(
              unitary * coeff.m)));
      CHECK(before == approx(mode_entanglement(drawn.state, drawn.partition)));
      CHECK(after == approx(before));

      // sector-preserving rotations leave E_P unchanged
      auto sectors = sector_decomposition(drawn.state, drawn.partition);
      double e_p_rotated = 0.0;
      for (const auto& sector : sectors.entries) {
        auto sector_coeff = coefficient_matrix(sector.state, drawn.partition);
        auto sector_unitary =
            random_unitary(engine, int(sector_coeff.m.rows()));
        e_p_rotated +=
            sector.probability *
            shannon_entropy(schmidt_probabilities(
                Eigen::MatrixXcd(sector_unitary * sector_coeff.m)));
      }
      CHECK(e_p_rotated ==
            approx(particle_entanglement(drawn.state, drawn.partition)));
    }
  }
}
