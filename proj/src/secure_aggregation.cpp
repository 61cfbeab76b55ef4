#include "mcs/secure_aggregation.hpp"

#include <cmath>
#include <stdexcept>

namespace mcs {

MaskedReading mask_and_encrypt(double x, const MaskPair& mask, const PublicKey& dr_pk,
                               const FixedPointCodec& codec, Rng& rng) {
  if (mask.mul == 0.0) throw std::domain_error("mask_and_encrypt: zero multiplicative mask");
  MaskedReading out;
  out.y = x + mask.add;
  out.z = x * mask.mul;
  out.ct_y = encrypt(dr_pk, codec.encode(out.y), rng);
  out.ct_z = encrypt(dr_pk, codec.encode(out.z), rng);
  return out;
}

double dr_distance(double y, double estimate) { return y - estimate; }

SpWeightResult sp_weight(const std::vector<double>& dr_values,
                         const std::vector<MaskPair>& masks, double distance_floor) {
  if (dr_values.size() != masks.size()) throw std::domain_error("sp_weight: arity mismatch");
  if (dr_values.size() < 2) throw std::runtime_error("sp_weight: need at least 2 workers");
  const std::size_t k = dr_values.size();
  SpWeightResult out;
  out.residuals.resize(k);
  out.weights.resize(k);
  out.mul_masks.resize(k);
  double dist_sum = 0.0;
  std::vector<double> dist(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.residuals[i] = dr_values[i] - masks[i].add;
    dist[i] = std::max(std::abs(out.residuals[i]), distance_floor);
    dist_sum += dist[i];
    out.mul_masks[i] = masks[i].mul;
  }
  for (std::size_t i = 0; i < k; ++i) {
    out.weights[i] = std::log(dist_sum / dist[i]);
  }
  return out;
}

TaAdjustResult ta_adjust(const std::vector<double>& weights,
                         const std::vector<double>& mul_masks,
                         const std::vector<Pseudonym>& who, const ReputationStore& store) {
  if (weights.size() != mul_masks.size() || weights.size() != who.size()) {
    throw std::domain_error("ta_adjust: arity mismatch");
  }
  TaAdjustResult out;
  out.adjusted.resize(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!store.known(who[i])) {
      throw std::runtime_error("ta_adjust: unknown pseudonym " + who[i].hex());
    }
    double c = store.value(who[i]);
    out.adjusted[i] = weights[i] * c / mul_masks[i];
    out.sigma += weights[i] * c;
  }
  return out;
}

double dr_update(const std::vector<double>& z_values, const TaAdjustResult& adj) {
  if (z_values.size() != adj.adjusted.size()) throw std::domain_error("dr_update: arity mismatch");
  if (adj.sigma <= 0.0) throw std::domain_error("dr_update: nonpositive weight mass");
  double num = 0.0;
  for (std::size_t i = 0; i < z_values.size(); ++i) {
    num += z_values[i] * adj.adjusted[i];
  }
  return num / adj.sigma;
}

double resolve_gamma(const TaskSpec& task, double final_estimate) {
  if (task.gamma > 0.0) return task.gamma;
  return std::max(0.05 * std::abs(final_estimate), 0.5);
}

RoundOutcome run_round(const TaskSpec& task, const std::vector<RecruitedInput>& workers,
                       const IterationConfig& cfg, const KeyPair& dr_keys,
                       const FixedPointCodec& codec, const ReputationStore& store,
                       Transcript* transcript) {
  const std::size_t k = workers.size();
  if (k < 2) throw std::runtime_error("run_round: need at least 2 recruited workers");

  // DR decrypts both channels.
  std::vector<double> y(k), z(k);
  std::vector<Pseudonym> who(k);
  std::vector<MaskPair> masks(k);
  for (std::size_t i = 0; i < k; ++i) {
    y[i] = codec.decode(decrypt(dr_keys, workers[i].reading.ct_y));
    z[i] = codec.decode(decrypt(dr_keys, workers[i].reading.ct_z));
    who[i] = workers[i].pseudonym;
    masks[i] = workers[i].mask;
  }

  RoundOutcome out;
  double estimate = mean(y);
  if (estimate == 0.0) estimate = 1e-9;
  out.init_estimate = estimate;

  SpWeightResult sp;
  for (int n = 1; n <= cfg.max_iters; ++n) {
    out.iterations = n;

    std::vector<double> distances(k);
    for (std::size_t i = 0; i < k; ++i) distances[i] = dr_distance(y[i], estimate);
    if (transcript) {
      transcript->add(task.task_id, n, "DR", "SP", {{"distances", distances}});
    }

    sp = sp_weight(distances, masks, cfg.distance_floor);
    if (transcript) {
      transcript->add(task.task_id, n, "SP", "TA",
                      {{"weights", sp.weights}, {"mul_masks", sp.mul_masks}});
    }

    TaAdjustResult adj = ta_adjust(sp.weights, sp.mul_masks, who, store);
    if (transcript) {
      transcript->add(task.task_id, n, "TA", "DR",
                      {{"adjusted_weights", adj.adjusted}, {"sigma", adj.sigma}});
    }

    double next;
    if (adj.sigma <= 0.0) {
      // Degenerate weight mass: fall back to the reputation-weighted mean of
      // the masked channel, flagged.
      out.fallback = true;
      TaAdjustResult flat;
      flat.adjusted.resize(k);
      for (std::size_t i = 0; i < k; ++i) {
        flat.adjusted[i] = store.value(who[i]) / sp.mul_masks[i];
        flat.sigma += store.value(who[i]);
      }
      if (flat.sigma <= 0.0) throw std::runtime_error("run_round: zero reputation mass");
      next = dr_update(z, flat);
      estimate = next;
      break;
    }
    next = dr_update(z, adj);

    bool done = std::abs(next - estimate) < cfg.delta;
    estimate = next;
    if (done) {
      out.converged = true;
      break;
    }
  }
  out.estimate = estimate;

  // One final distance pass at the converged estimate: SP derives the
  // final-iterate weights for rewards and residuals for feedback.
  std::vector<double> final_distances(k);
  for (std::size_t i = 0; i < k; ++i) final_distances[i] = dr_distance(y[i], estimate);
  if (transcript) {
    transcript->add(task.task_id, out.iterations + 1, "DR", "SP",
                    {{"distances", final_distances}});
  }
  sp = sp_weight(final_distances, masks, cfg.distance_floor);

  out.weights = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(k));
  out.rewards = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(k));
  double weight_sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    out.weights(static_cast<Eigen::Index>(i)) = sp.weights[i];
    weight_sum += sp.weights[i];
  }
  if (weight_sum > 0.0) {
    for (std::size_t i = 0; i < k; ++i) {
      out.rewards(static_cast<Eigen::Index>(i)) = sp.weights[i] / weight_sum * task.budget;
    }
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      out.rewards(static_cast<Eigen::Index>(i)) = task.budget / static_cast<double>(k);
    }
  }

  double gamma = resolve_gamma(task, estimate);
  out.feedback.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    int bit = std::abs(sp.residuals[i]) <= gamma ? 1 : 0;
    out.feedback.push_back({who[i], bit});
    if (transcript) {
      transcript->add(task.task_id, out.iterations + 1, "SP", "TA",
                      {{"pseudonym", who[i].hex()}, {"bit", bit}});
    }
  }
  return out;
}

}  // namespace mcs
