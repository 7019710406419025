#pragma once

#include <stdexcept>
#include <string>

namespace thhcheck {

// Composing arrows whose source and target do not match.
class CompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Tuple lengths, block sizes or injection arities that do not fit together.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Face/degeneracy index outside 0..k.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A sweep bound that is too large to enumerate. Carries the largest value
// the caller may retry with.
class BoundError : public std::out_of_range {
 public:
  BoundError(const std::string& what, int suggested_max) : std::out_of_range(what), suggested_max_(suggested_max) {}

  int suggested_max() const noexcept { return suggested_max_; }

 private:
  int suggested_max_;
};

}  // namespace thhcheck
