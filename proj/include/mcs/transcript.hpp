#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace mcs {

// Flat record log of protocol messages and recruitment stage outcomes, one
// JSON object per line when emitted. Confidentiality-posture tests assert on
// the keys present per sender/receiver.
class Transcript {
 public:
  void add(std::string task_id, int iteration, std::string sender, std::string receiver,
           nlohmann::json payload) {
    nlohmann::json rec;
    rec["task"] = std::move(task_id);
    rec["iteration"] = iteration;
    rec["sender"] = std::move(sender);
    rec["receiver"] = std::move(receiver);
    rec["payload"] = std::move(payload);
    records_.push_back(std::move(rec));
  }

  const std::vector<nlohmann::json>& records() const { return records_; }

  void write_jsonl(std::ostream& os) const {
    for (const auto& r : records_) os << r.dump() << '\n';
  }

  void clear() { records_.clear(); }

 private:
  std::vector<nlohmann::json> records_;
};

}  // namespace mcs
