#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace adsim {

using UserId = std::uint64_t;
using PageId = std::uint32_t;

// Sorted, duplicate-free vector of user ids. All set algebra below
// assumes (and preserves) that invariant.
using UserIdSet = std::vector<UserId>;

inline UserIdSet make_id_set(std::vector<UserId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

inline bool id_set_contains(const UserIdSet& set, UserId id) {
  return std::binary_search(set.begin(), set.end(), id);
}

inline UserIdSet id_set_intersect(const UserIdSet& a, const UserIdSet& b) {
  UserIdSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline UserIdSet id_set_union(const UserIdSet& a, const UserIdSet& b) {
  UserIdSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline UserIdSet id_set_difference(const UserIdSet& a, const UserIdSet& b) {
  UserIdSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool id_set_subset(const UserIdSet& inner, const UserIdSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

}  // namespace adsim
