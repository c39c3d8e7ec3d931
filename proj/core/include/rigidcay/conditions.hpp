#pragma once

#include <string>
#include <vector>

#include "rigidcay/group.hpp"

namespace rigidcay {

/// Outcome of one subgroup-intersection condition. When holds is false,
/// witnesses lists the elements realizing the violation.
struct ConditionReport {
  std::string condition_name;
  bool holds = false;
  std::vector<int> witnesses;
};

/// <s, s^-1> meets S \ {s, s^-1} in nothing, and {s, s^-1} meets
/// <S \ {s, s^-1}> in nothing. Sufficient for a flexible Cayley graph.
ConditionReport check_flexible_condition(const FiniteGroup& group,
                                         const std::vector<int>& s_set, int s);

/// <s, s^-1> and <S \ {s, s^-1}> intersect in exactly the identity.
/// Sufficient for a movable Cayley graph.
ConditionReport check_movable_condition(const FiniteGroup& group,
                                        const std::vector<int>& s_set, int s);

struct PartitionConditionReport {
  ConditionReport flexible;
  ConditionReport movable;
};

/// Class form of the two conditions for a partition S = S1 | rest, where
/// rest = S \ (S1 u S1^-1).
PartitionConditionReport check_partition_condition(const FiniteGroup& group,
                                                   const std::vector<int>& s_set,
                                                   const std::vector<int>& s1);

/// <s_i> meets <s_j> only in the identity for every pair; |S| >= 2.
ConditionReport check_pairwise_trivial(const FiniteGroup& group,
                                       const std::vector<int>& s_set);

}  // namespace rigidcay
