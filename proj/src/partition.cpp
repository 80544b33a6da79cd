#include "gmv/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gmv/errors.hpp"
#include "gmv/rng.hpp"

namespace gmv {

std::vector<int> GroupPartition::sizes() const {
  std::vector<int> out(members.size());
  for (std::size_t g = 0; g < members.size(); ++g) out[g] = static_cast<int>(members[g].size());
  return out;
}

void GroupPartition::validate() const {
  const int n = total();
  const int m = group_count();
  if (n < 1) throw ParameterError("partition: empty");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int counted = 0;
  for (int g = 0; g < m; ++g) {
    if (members[static_cast<std::size_t>(g)].empty())
      throw ParameterError("partition: group " + std::to_string(g) + " is empty");
    for (int idx : members[static_cast<std::size_t>(g)]) {
      if (idx < 0 || idx >= n)
        throw ParameterError("partition: member index " + std::to_string(idx) + " out of range");
      if (seen[static_cast<std::size_t>(idx)])
        throw ParameterError("partition: index " + std::to_string(idx) + " appears twice");
      if (assignments[static_cast<std::size_t>(idx)] != g)
        throw ParameterError("partition: assignment/member mismatch at index " +
                             std::to_string(idx));
      seen[static_cast<std::size_t>(idx)] = 1;
      ++counted;
    }
  }
  if (counted != n) throw ParameterError("partition: group sizes do not sum to N");
}

GroupPartition GroupPartition::from_assignments(std::vector<int> assignments) {
  GroupPartition p;
  p.assignments = std::move(assignments);
  int m = 0;
  for (int a : p.assignments) m = std::max(m, a + 1);
  p.members.resize(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < p.assignments.size(); ++i)
    p.members[static_cast<std::size_t>(p.assignments[i])].push_back(static_cast<int>(i));
  p.validate();
  return p;
}

GroupPartition GroupPartition::from_members(std::vector<std::vector<int>> members, int total) {
  GroupPartition p;
  p.members = std::move(members);
  p.assignments.assign(static_cast<std::size_t>(total), -1);
  for (std::size_t g = 0; g < p.members.size(); ++g)
    for (int idx : p.members[g]) {
      if (idx < 0 || idx >= total)
        throw ParameterError("partition: member index " + std::to_string(idx) + " out of range");
      p.assignments[static_cast<std::size_t>(idx)] = static_cast<int>(g);
    }
  p.validate();
  return p;
}

GroupPartition partition_groups(int n, int m, std::uint64_t seed) {
  if (n < 1) throw ParameterError("partition_groups: N must be positive");
  if (m < 1 || m > n)
    throw ParameterError("partition_groups: group size m=" + std::to_string(m) +
                         " must be in [1, N=" + std::to_string(n) + "]");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  SeededRng rng(seed);
  rng.shuffle(perm);

  std::vector<std::vector<int>> members;
  for (int start = 0; start < n; start += m) {
    const int end = std::min(start + m, n);
    members.emplace_back(perm.begin() + start, perm.begin() + end);
  }
  return GroupPartition::from_members(std::move(members), n);
}

}  // namespace gmv
