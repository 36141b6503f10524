#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qcircle::cli {

inline constexpr const char* kSchemaVersion = "1";

struct Options {
  std::uint64_t seed = 0;
  int precision = 20;
  int samples = 1000;
};

// Handles one line-delimited JSON request and returns the single-line JSON
// response. Never throws: failures become {"status":"error"|"undecided"}
// responses. Responses are byte-deterministic given the request (including
// its seed).
std::string dispatch_line(const std::string& request_line, const Options& defaults);

// Request loop over line-delimited records. Returns 0 when every request
// answered with status "ok", 1 otherwise.
int run(std::istream& in, std::ostream& out, const Options& defaults);

}  // namespace qcircle::cli
