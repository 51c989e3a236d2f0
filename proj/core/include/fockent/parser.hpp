#pragma once

#include <string>
#include <string_view>

#include "fockent/fock_state.hpp"
#include "fockent/partition.hpp"

namespace fockent {

struct ParsedState {
  FockState state;
  ModePartition partition;
};

/// Parses ket notation ("|01,10>+|10,01>", "(|0,1>+|1,0>)^2",
/// "|0,2>+sqrt(2)|1,1>+|2,0>") into a state and its mode partition. Digits
/// left of the comma are Alice-mode occupations, digits right of it Bob's.
/// Adjacent factors compose on fresh modes; "^k" composes k fresh copies.
/// The full grammar lives in docs/state_grammar.md.
///
/// Throws Error with code syntax_error (position-annotated),
/// fermion_occupancy_violation, mixed_particle_number, arity_mismatch, or
/// too_large. Never crashes on malformed input.
ParsedState parse_state(std::string_view text, Statistics stats);

/// Canonical text for a state: terms in lexicographic occupation order,
/// amplitudes as shortest round-trip decimals, "0" for the zero state.
/// parse_state(format_state(s, p)) reproduces any state with real
/// amplitudes and non-empty blocks on both sides of the partition.
std::string format_state(const FockState& s, const ModePartition& p);

}  // namespace fockent
