#include "mcs/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <stdexcept>

#include "mcs/elgamal.hpp"
#include "mcs/fixed_point.hpp"
#include "mcs/metrics.hpp"
#include "mcs/population.hpp"
#include "mcs/pseudonym.hpp"
#include "mcs/recruitment.hpp"
#include "mcs/reputation.hpp"
#include "mcs/secure_aggregation.hpp"
#include "mcs/truth_discovery.hpp"

namespace mcs {

namespace {

// Canonical processing order; reputation updates happen in this order, so a
// fixed order keeps runs deterministic regardless of config list order.
const std::vector<std::string> kMethodOrder = {"mean",    "median", "weighted_mean",
                                               "crh",     "rtd",    "rdpp_td"};

std::vector<std::string> ordered_methods(const ScenarioConfig& cfg) {
  std::vector<std::string> out;
  for (const std::string& m : kMethodOrder) {
    if (std::find(cfg.methods.begin(), cfg.methods.end(), m) != cfg.methods.end()) {
      out.push_back(m);
    }
  }
  return out;
}

// First k of a deterministic partial Fisher-Yates shuffle.
std::vector<std::size_t> sample_without_replacement(std::vector<std::size_t> items, int k,
                                                    Rng& rng) {
  if (k > static_cast<int>(items.size())) {
    throw std::runtime_error("sample_without_replacement: not enough items");
  }
  for (int j = 0; j < k; ++j) {
    std::int64_t pick = rng.uniform_int(j, static_cast<std::int64_t>(items.size()) - 1);
    std::swap(items[static_cast<std::size_t>(j)], items[static_cast<std::size_t>(pick)]);
  }
  items.resize(static_cast<std::size_t>(k));
  return items;
}

std::vector<WorkerProfile> build_pool(const ScenarioConfig& cfg, Rng& rng) {
  if (!cfg.planted_reputations.empty()) {
    std::vector<WorkerProfile> pool;
    int serial = 0;
    for (double r : cfg.planted_reputations) {
      for (int c = 0; c < cfg.planted_copies; ++c) {
        WorkerProfile w;
        w.id = "P-" + std::to_string(serial++);
        w.category = WorkerCategory::AW;
        w.true_reputation = r;
        pool.push_back(w);
      }
    }
    return pool;
  }
  std::optional<double> cap;
  if (cfg.colluded) cap = cfg.xi;
  return generate_pool(cfg.pool_size, cap, rng);
}

std::vector<GroundTruthRecord> build_truth(const ScenarioConfig& cfg, Rng& rng) {
  if (!cfg.truth_csv.empty()) return load_ground_truth(cfg.truth_csv);
  SyntheticTruthParams params;
  params.count = cfg.truth_count > 0 ? cfg.truth_count : cfg.tasks;
  params.value_min = cfg.truth_min;
  params.value_max = cfg.truth_max;
  return synthetic_ground_truth(params, rng);
}

double feedback_gamma(const ScenarioConfig& cfg, double estimate) {
  if (cfg.gamma > 0.0) return cfg.gamma;
  return std::max(0.05 * std::abs(estimate), 0.5);
}

struct MethodState {
  std::vector<MetricSample> samples;  // current round
  int aborted = 0;                    // current round
};

// One seed's full simulation, appending rows.
void run_seed(const ScenarioConfig& cfg, std::uint64_t seed, Transcript* transcript,
              std::vector<ResultRow>& rows) {
  Rng root(seed);
  Rng pool_rng = root.child("pool");
  Rng truth_rng = root.child("truth");
  Rng ta_rng = root.child("ta");
  Rng dr_rng = root.child("dr");

  const std::vector<WorkerProfile> pool = build_pool(cfg, pool_rng);
  const std::vector<GroundTruthRecord> truth = build_truth(cfg, truth_rng);
  const std::vector<std::string> methods = ordered_methods(cfg);
  const IterationConfig itcfg = cfg.iteration_config();
  const AttackConfig atk = cfg.attack_config();
  const QualityParams quality{cfg.lambda};
  const bool run_rdpp =
      std::find(methods.begin(), methods.end(), "rdpp_td") != methods.end();

  // Registration: the authority derives unlinkable pseudonyms once per seed.
  mpz_class two128 = mpz_class(1) << 128;
  mpz_class ta_secret = ta_rng.uniform_mpz(2, two128);
  std::vector<Pseudonym> nyms(pool.size());
  std::map<Pseudonym, double> true_reps;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    mpz_class salt = ta_rng.uniform_mpz(1, two128);
    nyms[i] = make_pseudonym(identity_bytes(pool[i].id), ta_secret, salt);
    true_reps[nyms[i]] = pool[i].true_reputation;
  }

  auto seeded_record = [&](std::size_t i) {
    if (cfg.reputation_seeding == "true_value") {
      return ReputationRecord::with_value(pool[i].true_reputation);
    }
    return ReputationRecord{};
  };
  ReputationStore plain_store;  // consumed by weighted_mean and the plaintext iterations
  ReputationStore rdpp_store;   // consumed by the full pipeline
  for (std::size_t i = 0; i < pool.size(); ++i) {
    plain_store.enroll(nyms[i], seeded_record(i));
    if (run_rdpp) rdpp_store.enroll(nyms[i], seeded_record(i));
  }

  double prior_mae = reputation_mae(plain_store.values(), true_reps);

  KeyPair dr_keys;
  FixedPointCodec codec(GroupParams::default_group());
  CommitmentDomain domain;
  MaskParams mask_params{cfg.mask_add_halfwidth, cfg.mask_mul_max};
  if (run_rdpp) dr_keys = keygen(GroupParams::default_group(), dr_rng);

  std::vector<std::size_t> mw_idx, honest_idx, all_idx;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    all_idx.push_back(i);
    if (pool[i].category == WorkerCategory::MW) mw_idx.push_back(i);
    else honest_idx.push_back(i);
  }
  const int k = cfg.workers_per_task;
  const int colluders_per_task =
      cfg.colluded ? static_cast<int>(std::lround(cfg.theta * k)) : 0;
  if (colluders_per_task > static_cast<int>(mw_idx.size()) ||
      k - colluders_per_task > static_cast<int>(honest_idx.size())) {
    throw std::invalid_argument("run_scenario: pool too small for the per-task split");
  }

  std::map<std::string, MethodState> state;
  for (const std::string& m : methods) state[m] = {};

  auto flush_round = [&](int round) {
    for (const std::string& m : methods) {
      MethodState& st = state[m];
      ResultRow row;
      row.scenario = cfg.scenario;
      row.seed = seed;
      row.round = round;
      row.method = m;
      int zero_excluded = 0;
      if (!st.samples.empty()) {
        row.rmse = rmse(st.samples);
        QualitySummary qs{};
        bool all_zero = true;
        for (const MetricSample& s : st.samples) {
          if (s.estimate != 0.0) all_zero = false;
        }
        if (!all_zero) {
          qs = mean_quality(st.samples, quality);
          row.mean_quality = qs.mean_quality;
          zero_excluded = qs.excluded;
        } else {
          zero_excluded = static_cast<int>(st.samples.size());
        }
      }
      row.excluded_count = zero_excluded + st.aborted;
      if (m == "rdpp_td") {
        row.reputation_mae = reputation_mae(rdpp_store.values(), true_reps);
      } else if (m == "rtd" || m == "weighted_mean") {
        row.reputation_mae = reputation_mae(plain_store.values(), true_reps);
      } else {
        row.reputation_mae = prior_mae;
      }
      rows.push_back(std::move(row));
      st.samples.clear();
      st.aborted = 0;
    }
  };

  for (int t = 0; t < cfg.tasks; ++t) {
    const GroundTruthRecord& rec = truth[static_cast<std::size_t>(t) % truth.size()];
    const double g = rec.true_value;
    Rng sel_rng = root.child("select", static_cast<std::uint64_t>(t));
    Rng val_rng = root.child("values", static_cast<std::uint64_t>(t));
    Rng rdpp_rng = root.child("pipeline", static_cast<std::uint64_t>(t));

    // Shared participant set and readings for the plaintext estimators.
    std::vector<std::size_t> participants;
    std::vector<bool> is_colluder;
    if (colluders_per_task > 0) {
      participants = sample_without_replacement(mw_idx, colluders_per_task, sel_rng);
      is_colluder.assign(participants.size(), true);
      auto honest = sample_without_replacement(honest_idx, k - colluders_per_task, sel_rng);
      for (std::size_t i : honest) {
        participants.push_back(i);
        is_colluder.push_back(false);
      }
    } else {
      participants = sample_without_replacement(all_idx, k, sel_rng);
      is_colluder.assign(participants.size(), false);
    }

    double target = 0.0;
    if (colluders_per_task > 0) target = collusion_target(g, atk, val_rng);
    std::vector<double> values(participants.size());
    for (std::size_t i = 0; i < participants.size(); ++i) {
      values[i] = is_colluder[i] ? collude_value(target, atk, val_rng)
                                 : sense(pool[participants[i]], g, cfg.noise, val_rng);
    }

    auto observations = [&](const ReputationStore& store) {
      std::vector<Observation> obs(participants.size());
      for (std::size_t i = 0; i < participants.size(); ++i) {
        obs[i] = {pool[participants[i]].id, values[i], store.value(nyms[participants[i]])};
      }
      return obs;
    };

    for (const std::string& m : methods) {
      MethodState& st = state[m];
      double estimate = 0.0;
      try {
        if (m == "mean") {
          estimate = mean(values);
        } else if (m == "median") {
          estimate = median(values);
        } else if (m == "weighted_mean") {
          estimate = weighted_mean(observations(plain_store));
        } else if (m == "crh") {
          estimate = crh(values, itcfg, default_init(values)).estimate;
        } else if (m == "rtd") {
          estimate = rtd(observations(plain_store), itcfg, default_init(values)).estimate;
          double gamma = feedback_gamma(cfg, estimate);
          for (std::size_t i = 0; i < participants.size(); ++i) {
            int bit = std::abs(values[i] - estimate) <= gamma ? 1 : 0;
            plain_store.update({nyms[participants[i]], bit});
          }
        } else if (m == "rdpp_td") {
          // Recruitment draws from a wider applicant set; gating and
          // stratified sampling decide who actually contributes.
          // The same per-task adversary head-count as the baselines applies,
          // alongside a wider honest applicant pool; gating and verification
          // then decide who is recruited.
          const int k_app = cfg.candidate_multiplier * k;
          int m_app = std::min(colluders_per_task, static_cast<int>(mw_idx.size()));
          int h_app = std::min(k_app - m_app, static_cast<int>(honest_idx.size()));
          std::vector<std::size_t> applicants;
          std::vector<bool> app_colluder;
          if (cfg.colluded && m_app > 0) {
            applicants = sample_without_replacement(mw_idx, m_app, rdpp_rng);
            app_colluder.assign(applicants.size(), true);
            for (std::size_t i : sample_without_replacement(honest_idx, h_app, rdpp_rng)) {
              applicants.push_back(i);
              app_colluder.push_back(false);
            }
          } else {
            applicants = sample_without_replacement(
                all_idx, std::min(k_app, static_cast<int>(all_idx.size())), rdpp_rng);
            app_colluder.assign(applicants.size(), false);
          }

          TaskSpec task;
          task.task_id = rec.task_id;
          task.round = t / cfg.tasks_per_round + 1;
          task.time_window = {rec.timestamp - 1800.0, rec.timestamp + 1800.0};
          task.lon_window = {rec.lon - 0.05, rec.lon + 0.05};
          task.lat_window = {rec.lat - 0.05, rec.lat + 0.05};
          task.rep_threshold = cfg.rep_threshold;
          task.budget = cfg.budget;
          task.workers_needed = k;
          task.gamma = cfg.gamma;

          std::vector<WorkerState> candidates(applicants.size());
          std::map<Pseudonym, std::size_t> by_nym;
          for (std::size_t i = 0; i < applicants.size(); ++i) {
            candidates[i].pseudonym = nyms[applicants[i]];
            candidates[i].attrs.time_point =
                rdpp_rng.uniform(task.time_window.lo, task.time_window.hi);
            candidates[i].attrs.lon = rdpp_rng.uniform(task.lon_window.lo, task.lon_window.hi);
            candidates[i].attrs.lat = rdpp_rng.uniform(task.lat_window.lo, task.lat_window.hi);
            candidates[i].key = CommitmentKey::random(rdpp_rng, 32);
            by_nym[candidates[i].pseudonym] = i;
          }

          RecruitmentOutcome rec_out = run_recruitment(task, candidates, rdpp_store, domain,
                                                       mask_params, rdpp_rng, transcript);
          if (rec_out.selected.size() < 2) {
            throw std::runtime_error("fewer than 2 recruited workers");
          }

          double rdpp_target = 0.0;
          bool target_set = false;
          std::vector<RecruitedInput> inputs;
          for (const RecruitmentDecision& d : rec_out.decisions) {
            if (!d.selected) continue;
            std::size_t idx = by_nym.at(d.pseudonym);
            double x;
            if (app_colluder[idx]) {
              if (!target_set) {
                rdpp_target = collusion_target(g, atk, rdpp_rng);
                target_set = true;
              }
              x = collude_value(rdpp_target, atk, rdpp_rng);
            } else {
              x = sense(pool[applicants[idx]], g, cfg.noise, rdpp_rng);
            }
            RecruitedInput in;
            in.pseudonym = d.pseudonym;
            in.mask = *d.mask;
            in.reading = mask_and_encrypt(x, in.mask, dr_keys.pub, codec, rdpp_rng);
            inputs.push_back(std::move(in));
          }

          RoundOutcome round_out =
              run_round(task, inputs, itcfg, dr_keys, codec, rdpp_store, transcript);
          estimate = round_out.estimate;
          for (const FeedbackBit& fb : round_out.feedback) rdpp_store.update(fb);
        }
        st.samples.push_back({rec.task_id, estimate, g});
      } catch (const std::exception&) {
        st.aborted += 1;
      }
    }

    if ((t + 1) % cfg.tasks_per_round == 0 || t + 1 == cfg.tasks) {
      flush_round(t / cfg.tasks_per_round + 1);
    }
  }
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig& cfg, bool trace) {
  cfg.validate();
  ScenarioResult result;
  if (trace || cfg.seeds.size() == 1) {
    // Tracing appends to one shared transcript; keep it ordered.
    for (std::uint64_t seed : cfg.seeds) {
      run_seed(cfg, seed, trace ? &result.transcript : nullptr, result.rows);
    }
  } else {
    // Seeds are independent RNG lineages; run them in parallel and merge.
    std::vector<std::vector<ResultRow>> partial(cfg.seeds.size());
    std::vector<std::future<void>> jobs;
    for (std::size_t i = 0; i < cfg.seeds.size(); ++i) {
      jobs.push_back(std::async(std::launch::async, [&, i] {
        run_seed(cfg, cfg.seeds[i], nullptr, partial[i]);
      }));
    }
    for (auto& j : jobs) j.get();
    for (auto& p : partial) {
      result.rows.insert(result.rows.end(), p.begin(), p.end());
    }
  }
  std::sort(result.rows.begin(), result.rows.end(),
            [](const ResultRow& a, const ResultRow& b) {
              if (a.seed != b.seed) return a.seed < b.seed;
              if (a.round != b.round) return a.round < b.round;
              return a.method < b.method;
            });
  return result;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

void write_results_csv(const std::vector<ResultRow>& rows, std::ostream& os) {
  os << "scenario,seed,round,method,rmse,mean_quality,reputation_mae,excluded_count\n";
  for (const ResultRow& r : rows) {
    os << csv_field(r.scenario) << ',' << r.seed << ',' << r.round << ','
       << csv_field(r.method) << ',' << format_real(r.rmse) << ','
       << format_real(r.mean_quality) << ',' << format_real(r.reputation_mae) << ','
       << r.excluded_count << '\n';
  }
}

void emit_outputs(const ScenarioConfig& cfg, const ScenarioResult& result,
                  const std::string& out_dir, bool trace) {
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream os(out_dir + "/results.csv", std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + out_dir + "/results.csv");
    write_results_csv(result.rows, os);
  }
  {
    std::ofstream os(out_dir + "/config.json", std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + out_dir + "/config.json");
    os << cfg.to_json().dump(2) << '\n';
  }
  if (trace) {
    std::ofstream os(out_dir + "/transcript.jsonl", std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + out_dir + "/transcript.jsonl");
    result.transcript.write_jsonl(os);
  }
}

}  // namespace mcs
