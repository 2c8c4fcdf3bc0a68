#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace inselim {

struct Violation {
  std::string inputs;
  std::string expected;
  std::string got;
};

// Outcome of one verification sweep.  With a fixed suite, parameters, and
// seed the violation list and case count are bit-for-bit reproducible;
// elapsed time is measured but excluded from serialization by default so
// identical invocations stay byte-identical.
struct Report {
  std::string suite;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  long long cases = 0;
  std::vector<Violation> violations;
  std::chrono::milliseconds elapsed{0};

  bool pass() const noexcept { return violations.empty(); }
  nlohmann::ordered_json to_json(bool include_elapsed = false) const;
};

// Runs fn(i) for i in [0, n) across `jobs` worker threads.  The work must
// only touch its own index's state; results are deterministic regardless of
// the worker count.
void parallel_for(long long n, int jobs, const std::function<void(long long)>& fn);

}  // namespace inselim
