#pragma once

#include <cstdint>
#include <vector>

namespace gmv {

// Partition of template indices [0, N) into nonempty groups. `assignments`
// is authoritative; the per-group member lists keep enrollment order and
// are rebuilt from it.
struct GroupPartition {
  std::vector<int> assignments;       // size N, values in [0, M)
  std::vector<std::vector<int>> members;  // size M, each nonempty

  int group_count() const { return static_cast<int>(members.size()); }
  int total() const { return static_cast<int>(assignments.size()); }
  std::vector<int> sizes() const;

  /// Every index in exactly one nonempty group.
  void validate() const;

  static GroupPartition from_assignments(std::vector<int> assignments);
  static GroupPartition from_members(std::vector<std::vector<int>> members, int total);
};

/// Seeded random permutation of [0, N) chunked into groups of m. When m does
/// not divide N the final group is short; it is never empty.
GroupPartition partition_groups(int n, int m, std::uint64_t seed);

}  // namespace gmv
