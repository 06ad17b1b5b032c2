#include "hsa/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace hsa {

bool CheckReport::all_pass() const {
  return std::all_of(records_.begin(), records_.end(),
                     [](const CheckRecord& r) { return r.pass; });
}

size_t CheckReport::fail_count() const {
  return static_cast<size_t>(
      std::count_if(records_.begin(), records_.end(), [](const CheckRecord& r) { return !r.pass; }));
}

void CheckReport::sort() {
  std::stable_sort(records_.begin(), records_.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
}

std::string CheckReport::to_jsonl() const {
  std::string out;
  for (const auto& r : records_) {
    nlohmann::json j;
    j["id"] = r.id;
    j["anchor"] = r.anchor;
    j["status"] = r.pass ? "pass" : "fail";
    j["detail"] = r.detail;
    j["seed"] = r.seed;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string CheckReport::failure_summary(size_t limit) const {
  std::string out;
  size_t shown = 0;
  for (const auto& r : records_) {
    if (r.pass) continue;
    if (shown++ >= limit) {
      out += "  ...\n";
      break;
    }
    out += "  " + r.id + ": " + r.detail + "\n";
  }
  return out;
}

}  // namespace hsa
