#pragma once

// Two-sided identity results: every *_check operation returns both sides so
// harnesses can compare, print, and diff them.

#include "statsum/ring.hpp"
#include "statsum/unipoly.hpp"

namespace statsum {

struct CheckPair {
  RingElem lhs, rhs;
  bool ok() const { return lhs == rhs; }
};

struct UniPolyCheck {
  UniPoly lhs, rhs;
  bool ok() const { return lhs == rhs; }
};

}  // namespace statsum
