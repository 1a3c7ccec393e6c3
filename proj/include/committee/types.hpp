#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace committee {

using Rational = boost::multiprecision::cpp_rational;

/// Index of a candidate inside an ElectionProfile. Index order is identifier order.
using Candidate = int;

/// Sorted, duplicate-free list of candidate indices.
using CandidateSet = std::vector<Candidate>;

/// Malformed or inconsistent user input.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A solver was called outside of its preconditions.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Exhaustive search would exceed the configured limits.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CandidateSet make_set(std::vector<Candidate> members);

/// Union of two sorted sets.
CandidateSet set_union(const CandidateSet& a, const CandidateSet& b);

std::size_t intersection_size(const CandidateSet& a, const CandidateSet& b);

bool contains(const CandidateSet& set, Candidate c);

}  // namespace committee
