#pragma once

#include <vector>

#include <Eigen/Core>

#include "mcs/elgamal.hpp"
#include "mcs/fixed_point.hpp"
#include "mcs/recruitment.hpp"
#include "mcs/reputation.hpp"
#include "mcs/transcript.hpp"
#include "mcs/truth_discovery.hpp"

namespace mcs {

// Four-party masked aggregation round. The worker masks its reading with the
// pair it shares with SP and encrypts both channels to DR. Each iteration is
// the strictly ordered exchange DR -> SP -> TA -> DR; the mask algebra makes
// the DR-side update equal the plaintext reputation-weighted update.

struct MaskedReading {
  double y = 0.0;  // x + add mask
  double z = 0.0;  // x * mul mask
  Ciphertext ct_y;
  Ciphertext ct_z;
};

MaskedReading mask_and_encrypt(double x, const MaskPair& mask, const PublicKey& dr_pk,
                               const FixedPointCodec& codec, Rng& rng);

// Signed distance DR reports per worker.
double dr_distance(double y, double estimate);

struct SpWeightResult {
  std::vector<double> weights;
  std::vector<double> residuals;  // x_i - estimate, after removing the add mask
  std::vector<double> mul_masks;
};

// SP removes the additive masks and computes distance-ratio log weights.
SpWeightResult sp_weight(const std::vector<double>& dr_values,
                         const std::vector<MaskPair>& masks, double distance_floor);

struct TaAdjustResult {
  std::vector<double> adjusted;  // w_i * C_i / mul_i
  double sigma = 0.0;            // sum of w_i * C_i
};

TaAdjustResult ta_adjust(const std::vector<double>& weights,
                         const std::vector<double>& mul_masks,
                         const std::vector<Pseudonym>& who, const ReputationStore& store);

// x_next = sum z_i * adjusted_i / sigma; throws when sigma is not positive.
double dr_update(const std::vector<double>& z_values, const TaAdjustResult& adj);

struct RecruitedInput {
  Pseudonym pseudonym;
  MaskPair mask;          // held by SP and the worker
  MaskedReading reading;  // ciphertexts travel to DR
};

struct RoundOutcome {
  double estimate = 0.0;
  double init_estimate = 0.0;
  Eigen::VectorXd weights;
  Eigen::VectorXd rewards;
  std::vector<FeedbackBit> feedback;
  int iterations = 0;
  bool converged = false;
  bool fallback = false;
};

// Runs the full iterative exchange for one task, then allocates the budget
// proportionally to the final weights and derives feedback bits from the
// final unmasked residuals against gamma.
RoundOutcome run_round(const TaskSpec& task, const std::vector<RecruitedInput>& workers,
                       const IterationConfig& cfg, const KeyPair& dr_keys,
                       const FixedPointCodec& codec, const ReputationStore& store,
                       Transcript* transcript = nullptr);

// gamma used for feedback: the task's own value when positive, otherwise
// 5% of the final estimate magnitude with an absolute floor of 0.5.
double resolve_gamma(const TaskSpec& task, double final_estimate);

}  // namespace mcs
