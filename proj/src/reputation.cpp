#include "mcs/reputation.hpp"

#include <cmath>
#include <stdexcept>

namespace mcs {

double ReputationRecord::value() const {
  double total = successes + failures;
  if (total <= 0.0) throw std::domain_error("ReputationRecord: zero count total");
  return successes / total;
}

ReputationRecord ReputationRecord::with_value(double target, double mass) {
  if (target < 0.0 || target > 1.0) throw std::domain_error("with_value: target outside [0, 1]");
  if (mass < 2.0) throw std::domain_error("with_value: mass below prior");
  return ReputationRecord{target * mass, (1.0 - target) * mass};
}

ReputationRecord apply_feedback(ReputationRecord rec, int bit) {
  if (bit != 0 && bit != 1) throw std::domain_error("apply_feedback: bit must be 0 or 1");
  if (bit == 1) {
    rec.successes += 1.0;
  } else {
    rec.failures += 1.0;
  }
  return rec;
}

bool gate(const ReputationRecord& rec, double threshold) {
  if (threshold < 0.0 || threshold > 1.0) throw std::domain_error("gate: threshold outside [0, 1]");
  return rec.value() >= threshold;
}

double reputation_mae(const std::map<Pseudonym, double>& estimates,
                      const std::map<Pseudonym, double>& truths) {
  if (estimates.empty() || estimates.size() != truths.size()) {
    throw std::domain_error("reputation_mae: key sets differ");
  }
  double sum = 0.0;
  for (const auto& [who, est] : estimates) {
    auto it = truths.find(who);
    if (it == truths.end()) throw std::domain_error("reputation_mae: key sets differ");
    sum += std::abs(est - it->second);
  }
  return sum / static_cast<double>(estimates.size());
}

void ReputationStore::enroll(const Pseudonym& who, ReputationRecord rec) {
  records_[who] = rec;
}

bool ReputationStore::known(const Pseudonym& who) const { return records_.count(who) > 0; }

const ReputationRecord& ReputationStore::record(const Pseudonym& who) const {
  auto it = records_.find(who);
  if (it == records_.end()) throw std::domain_error("ReputationStore: unknown pseudonym");
  return it->second;
}

double ReputationStore::value(const Pseudonym& who) const { return record(who).value(); }

void ReputationStore::update(const FeedbackBit& fb) {
  auto it = records_.find(fb.who);
  if (it == records_.end()) throw std::domain_error("ReputationStore: unknown pseudonym");
  it->second = apply_feedback(it->second, fb.bit);
}

int ReputationStore::band(const Pseudonym& who) const {
  double v = value(who);
  int b = static_cast<int>(v * 10.0);
  return b > 9 ? 9 : b;
}

std::map<Pseudonym, double> ReputationStore::values() const {
  std::map<Pseudonym, double> out;
  for (const auto& [who, rec] : records_) out[who] = rec.value();
  return out;
}

void ReputationStore::snapshot_csv(std::ostream& os) const {
  os << "pseudonym,successes,failures,value\n";
  char buf[128];
  for (const auto& [who, rec] : records_) {
    std::snprintf(buf, sizeof(buf), "%s,%.10g,%.10g,%.10g\n", who.hex().c_str(), rec.successes,
                  rec.failures, rec.value());
    os << buf;
  }
}

}  // namespace mcs
