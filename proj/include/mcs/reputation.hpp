#pragma once

#include <map>
#include <ostream>

#include "mcs/pseudonym.hpp"

namespace mcs {

// Beta-count reputation: value = successes / (successes + failures), starting
// from a uniform prior of one success and one failure.
struct ReputationRecord {
  double successes = 1.0;
  double failures = 1.0;

  double value() const;

  // Pseudo-counts of mass `mass` whose value equals `target` exactly.
  static ReputationRecord with_value(double target, double mass = 40.0);
};

struct FeedbackBit {
  Pseudonym who;
  int bit = 0;  // 1 success, 0 failure
};

ReputationRecord apply_feedback(ReputationRecord rec, int bit);
bool gate(const ReputationRecord& rec, double threshold);

// Mean absolute error between two maps with identical key sets.
double reputation_mae(const std::map<Pseudonym, double>& estimates,
                      const std::map<Pseudonym, double>& truths);

// TA-side store keyed by pseudonym; real identities never enter.
class ReputationStore {
 public:
  void enroll(const Pseudonym& who, ReputationRecord rec = {});
  bool known(const Pseudonym& who) const;
  const ReputationRecord& record(const Pseudonym& who) const;
  double value(const Pseudonym& who) const;
  void update(const FeedbackBit& fb);

  // Reputation decile in [0, 9], disclosed for stratified sampling in place
  // of the raw value.
  int band(const Pseudonym& who) const;

  std::map<Pseudonym, double> values() const;
  std::size_t size() const { return records_.size(); }

  // Rows (pseudonym, successes, failures, value).
  void snapshot_csv(std::ostream& os) const;

 private:
  std::map<Pseudonym, ReputationRecord> records_;
};

}  // namespace mcs
