#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mcs/pseudonym.hpp"
#include "mcs/range_commitment.hpp"
#include "mcs/reputation.hpp"
#include "mcs/rng.hpp"
#include "mcs/transcript.hpp"

namespace mcs {

struct Window {
  double lo = 0.0;
  double hi = 0.0;
};

struct TaskSpec {
  std::string task_id;
  int round = 0;
  Window time_window;
  Window lon_window;
  Window lat_window;
  double rep_threshold = 0.0;  // in [0, 1]
  double budget = 0.0;
  int workers_needed = 2;
  double gamma = 0.0;  // feedback threshold; <= 0 selects the scale-based default

  void validate() const;
};

struct WorkerAttributes {
  double time_point = 0.0;  // seconds
  double lon = 0.0;
  double lat = 0.0;
};

// Fixed-point scaling of attributes and the public positivity shifts for the
// interval check. eps is twice the encoding of the largest magnitude in the
// configured domain, so T + eps stays positive.
struct CommitmentDomain {
  long time_scale = 1;         // seconds are already integral
  long geo_scale = 1000000;    // 1e-6 degrees
  double max_time_abs = 4.0e9; // epoch-seconds headroom
  double max_geo_abs = 180.0;

  mpz_class scale_time(double seconds) const;
  mpz_class scale_geo(double degrees) const;
  mpz_class eps_time() const;
  mpz_class eps_geo() const;
};

struct WorkerState {
  Pseudonym pseudonym;
  WorkerAttributes attrs;
  CommitmentKey key;  // per worker per task
};

struct CandidateFile {
  Pseudonym pseudonym;
  std::array<Commitment, 3> commitments;  // time, lon, lat
  bool gate_passed = false;
  std::optional<std::array<CheckResponse, 3>> responses;
  bool verified = false;
};

struct MaskPair {
  double add = 0.0;
  double mul = 1.0;  // never zero
};

struct MaskParams {
  double add_halfwidth = 2000.0;  // additive mask uniform in [-A, A]
  double mul_max = 8.0;           // multiplicative mask uniform in [1, B]
};

struct RecruitmentDecision {
  Pseudonym pseudonym;
  int selected = 0;  // psi
  std::optional<MaskPair> mask;
};

CandidateFile submit_commitments(const WorkerState& worker, const TaskSpec& task,
                                 const CommitmentDomain& domain, Rng& rng);

// r = 1 iff the stored value passes the threshold; unknown pseudonyms are
// rejected and logged.
int reputation_gate(const Pseudonym& who, double threshold, const ReputationStore& store,
                    std::vector<std::string>* audit_log = nullptr);

// The worker checks its own attributes against the dispatched windows and
// responds only when all three are inside. `dishonest` forces a response
// regardless; verification still rejects it.
std::optional<std::array<CheckResponse, 3>> self_check_and_respond(
    const WorkerState& worker, const TaskSpec& task, const CommitmentDomain& domain, Rng& rng,
    bool dishonest = false);

// Marks candidates verified when the gate passed and all three inner products
// are nonnegative. Returns indices of the verified subset.
std::vector<std::size_t> verify_candidates(std::vector<CandidateFile>& files);

struct VerifiedCandidate {
  Pseudonym pseudonym;
  int band = 0;  // TA-reported reputation decile
};

// Take-all when supply is short; otherwise proportional allocation across
// reputation-decile strata with largest-remainder rounding, uniform within
// each stratum. Throws on an empty verified set.
std::vector<std::size_t> stratified_select(const std::vector<VerifiedCandidate>& verified,
                                           int k, Rng& rng);

std::vector<RecruitmentDecision> issue_masks(const std::vector<Pseudonym>& selected,
                                             const std::vector<Pseudonym>& rejected,
                                             const MaskParams& params, Rng& rng);

// End-to-end recruitment for one task over a candidate set of workers.
struct RecruitmentOutcome {
  std::vector<RecruitmentDecision> decisions;
  std::vector<Pseudonym> selected;
  bool shortfall = false;  // fewer verified than requested
  std::vector<std::string> audit_log;
};

RecruitmentOutcome run_recruitment(const TaskSpec& task,
                                   const std::vector<WorkerState>& candidates,
                                   const ReputationStore& store, const CommitmentDomain& domain,
                                   const MaskParams& masks, Rng& rng,
                                   Transcript* transcript = nullptr,
                                   const std::vector<bool>* dishonest = nullptr);

}  // namespace mcs
