#include "rigidcay/conditions.hpp"

#include <algorithm>

#include "rigidcay/errors.hpp"

namespace rigidcay {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void validate_s_set(const FiniteGroup& group, const std::vector<int>& s_set) {
  if (!group.valid()) throw InvalidParameterError("invalid group");
  for (int s : s_set) {
    if (s < 0 || s >= group.order())
      throw InvalidParameterError("element id " + std::to_string(s) + " out of range");
    if (s == group.identity())
      throw InvalidGeneratorError("identity is not allowed in a generating set");
  }
}

// S with the removed class taken out.
std::vector<int> rest_of(const std::vector<int>& s_set,
                         const std::vector<int>& removed_class) {
  std::vector<int> rest;
  for (int t : s_set)
    if (!std::binary_search(removed_class.begin(), removed_class.end(), t))
      rest.push_back(t);
  return sorted_unique(std::move(rest));
}

}  // namespace

ConditionReport check_flexible_condition(const FiniteGroup& group,
                                         const std::vector<int>& s_set, int s) {
  validate_s_set(group, s_set);
  if (std::find(s_set.begin(), s_set.end(), s) == s_set.end())
    throw InvalidParameterError("chosen element is not in the generating set");

  const std::vector<int> s_class = sorted_unique({s, group.invert(s)});
  const std::vector<int> rest = rest_of(s_set, s_class);
  const std::vector<int> s_closure = subgroup_closure(group, {s});
  const std::vector<int> rest_closure = subgroup_closure(group, rest);

  ConditionReport report;
  report.condition_name = "single-generator-flexible";
  const auto first = intersect(s_closure, rest);
  const auto second = intersect(s_class, rest_closure);
  report.witnesses = sorted_unique([&] {
    std::vector<int> w = first;
    w.insert(w.end(), second.begin(), second.end());
    return w;
  }());
  report.holds = report.witnesses.empty();
  return report;
}

ConditionReport check_movable_condition(const FiniteGroup& group,
                                        const std::vector<int>& s_set, int s) {
  validate_s_set(group, s_set);
  if (std::find(s_set.begin(), s_set.end(), s) == s_set.end())
    throw InvalidParameterError("chosen element is not in the generating set");

  const std::vector<int> s_class = sorted_unique({s, group.invert(s)});
  const std::vector<int> rest = rest_of(s_set, s_class);
  const std::vector<int> s_closure = subgroup_closure(group, {s});
  const std::vector<int> rest_closure = subgroup_closure(group, rest);

  ConditionReport report;
  report.condition_name = "single-generator-movable";
  for (int g : intersect(s_closure, rest_closure))
    if (g != group.identity()) report.witnesses.push_back(g);
  report.holds = report.witnesses.empty();
  return report;
}

PartitionConditionReport check_partition_condition(const FiniteGroup& group,
                                                   const std::vector<int>& s_set,
                                                   const std::vector<int>& s1) {
  validate_s_set(group, s_set);
  const std::vector<int> s_sorted = sorted_unique(s_set);
  const std::vector<int> s1_sorted = sorted_unique(s1);
  if (s1_sorted.empty()) throw InvalidPartitionError("partition class is empty");
  for (int t : s1_sorted)
    if (!std::binary_search(s_sorted.begin(), s_sorted.end(), t))
      throw InvalidPartitionError("partition class is not a subset of S");

  std::vector<int> s1_class = s1_sorted;
  for (int t : s1_sorted) s1_class.push_back(group.invert(t));
  s1_class = sorted_unique(std::move(s1_class));

  const std::vector<int> rest = rest_of(s_sorted, s1_class);
  if (rest.empty()) throw InvalidPartitionError("partition leaves no second class");

  const std::vector<int> s1_closure = subgroup_closure(group, s1_sorted);
  const std::vector<int> rest_closure = subgroup_closure(group, rest);

  PartitionConditionReport report;
  report.flexible.condition_name = "partition-flexible";
  {
    const auto first = intersect(s1_closure, rest);
    const auto second = intersect(s1_class, rest_closure);
    std::vector<int> w = first;
    w.insert(w.end(), second.begin(), second.end());
    report.flexible.witnesses = sorted_unique(std::move(w));
    report.flexible.holds = report.flexible.witnesses.empty();
  }
  report.movable.condition_name = "partition-movable";
  for (int g : intersect(s1_closure, rest_closure))
    if (g != group.identity()) report.movable.witnesses.push_back(g);
  report.movable.holds = report.movable.witnesses.empty();
  return report;
}

ConditionReport check_pairwise_trivial(const FiniteGroup& group,
                                       const std::vector<int>& s_set) {
  validate_s_set(group, s_set);
  const std::vector<int> s_sorted = sorted_unique(s_set);
  if (s_sorted.size() < 2)
    throw InvalidParameterError("pairwise condition needs at least two generators");

  ConditionReport report;
  report.condition_name = "pairwise-trivial";
  std::vector<std::vector<int>> closures;
  closures.reserve(s_sorted.size());
  for (int s : s_sorted) closures.push_back(subgroup_closure(group, {s}));
  std::vector<int> witnesses;
  for (std::size_t i = 0; i < closures.size(); ++i)
    for (std::size_t j = i + 1; j < closures.size(); ++j)
      for (int g : intersect(closures[i], closures[j]))
        if (g != group.identity()) witnesses.push_back(g);
  report.witnesses = sorted_unique(std::move(witnesses));
  report.holds = report.witnesses.empty();
  return report;
}

}  // namespace rigidcay
