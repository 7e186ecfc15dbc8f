#pragma once

#include <stdexcept>
#include <string>

namespace kpvc {

// Contract violation by the caller: bad index, bad parameter, failed precondition.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text input (edge list, graph6, family spec, rational literal).
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact solver was asked to work above its configured size cap.
class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant did not hold. Always a bug.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw invalid_input(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw internal_error(what);
}

}  // namespace kpvc
