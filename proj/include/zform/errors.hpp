#pragma once

#include <stdexcept>
#include <string>

namespace zform {

// Caller passed inconsistent arguments (mismatched truncation, bad config).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A size, degree or enumeration cap would be exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Orthogonalization hit a Gram minor whose grade-0 part vanishes.
struct DegenerateFormError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal identity that must hold did not (non-integer genus, surviving
// half power of N, nonzero remainder where none is possible...).
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw UsageError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw ConsistencyError(what);
}

}  // namespace zform
