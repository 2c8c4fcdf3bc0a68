#include "inselim/report.hpp"

#include <atomic>
#include <functional>
#include <thread>

namespace inselim {

nlohmann::ordered_json Report::to_json(bool include_elapsed) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["params"] = params;
  j["cases"] = cases;
  auto vs = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    nlohmann::ordered_json jv;
    jv["inputs"] = v.inputs;
    jv["expected"] = v.expected;
    jv["got"] = v.got;
    vs.push_back(std::move(jv));
  }
  j["violations"] = std::move(vs);
  if (include_elapsed) j["elapsed_ms"] = elapsed.count();
  j["pass"] = pass();
  return j;
}

void parallel_for(long long n, int jobs, const std::function<void(long long)>& fn) {
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || n <= 1) {
    for (long long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (;;) {
          long long i = next.fetch_add(1);
          if (i >= n) break;
          fn(i);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace inselim
