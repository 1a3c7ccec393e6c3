#include "committee/types.hpp"

#include <algorithm>
#include <iterator>

namespace committee {

CandidateSet make_set(std::vector<Candidate> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

CandidateSet set_union(const CandidateSet& a, const CandidateSet& b) {
  CandidateSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t intersection_size(const CandidateSet& a, const CandidateSet& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

bool contains(const CandidateSet& set, Candidate c) {
  return std::binary_search(set.begin(), set.end(), c);
}

}  // namespace committee
