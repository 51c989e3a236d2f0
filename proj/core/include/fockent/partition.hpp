#pragma once

namespace fockent {

/// Split of the global mode list into Alice's block and Bob's block.
/// Modes 0 .. alice_modes-1 belong to Alice, the rest to Bob.
struct ModePartition {
  int alice_modes = 0;
  int bob_modes = 0;

  int total() const noexcept { return alice_modes + bob_modes; }

  friend bool operator==(const ModePartition&, const ModePartition&) = default;
};

}  // namespace fockent
