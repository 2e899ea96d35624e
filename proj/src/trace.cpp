#include "gmatch/trace.hpp"

#include <ostream>

namespace gmatch {

void TraceSink::phase1(std::string_view step, int delta, EdgeId edge, int blossom) {
  *out_ << R"({"phase":1,"step":")" << step << R"(","delta":)" << delta << R"(,"edge":)" << edge
        << R"(,"blossom":)" << blossom << "}\n";
}

void TraceSink::phase2(std::string_view step, long clock, EdgeId edge, int blossom) {
  *out_ << R"({"phase":2,"step":")" << step << R"(","clock":)" << clock << R"(,"edge":)" << edge
        << R"(,"blossom":)" << blossom << "}\n";
}

}  // namespace gmatch
