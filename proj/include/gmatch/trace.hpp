#pragma once

#include <iosfwd>
#include <string_view>

#include "gmatch/graph.hpp"

namespace gmatch {

/// Line-delimited JSON step records, one object per grow/blossom/augment step.
/// Phase 1 records carry the current dual offset; Phase 2 records carry the
/// outer-time clock instead.
class TraceSink {
 public:
  explicit TraceSink(std::ostream& out) : out_(&out) {}

  void phase1(std::string_view step, int delta, EdgeId edge, int blossom);
  void phase2(std::string_view step, long clock, EdgeId edge, int blossom);

 private:
  std::ostream* out_;
};

}  // namespace gmatch
