#include "mcs/recruitment.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace mcs {

void TaskSpec::validate() const {
  if (time_window.lo > time_window.hi || lon_window.lo > lon_window.hi ||
      lat_window.lo > lat_window.hi) {
    throw std::domain_error("TaskSpec: window lower bound exceeds upper");
  }
  if (rep_threshold < 0.0 || rep_threshold > 1.0) {
    throw std::domain_error("TaskSpec: reputation threshold outside [0, 1]");
  }
  if (budget < 0.0) throw std::domain_error("TaskSpec: negative budget");
  if (workers_needed < 2) throw std::domain_error("TaskSpec: need at least 2 workers");
}

namespace {

mpz_class scale_value(double v, long scale) {
  double scaled = v * static_cast<double>(scale);
  double rounded = std::nearbyint(scaled);
  mpz_class out;
  mpz_set_d(out.get_mpz_t(), rounded);
  return out;
}

}  // namespace

mpz_class CommitmentDomain::scale_time(double seconds) const {
  return scale_value(seconds, time_scale);
}

mpz_class CommitmentDomain::scale_geo(double degrees) const {
  return scale_value(degrees, geo_scale);
}

mpz_class CommitmentDomain::eps_time() const {
  return 2 * scale_value(max_time_abs, time_scale);
}

mpz_class CommitmentDomain::eps_geo() const {
  return 2 * scale_value(max_geo_abs, geo_scale);
}

CandidateFile submit_commitments(const WorkerState& worker, const TaskSpec& task,
                                 const CommitmentDomain& domain, Rng& rng) {
  (void)task;
  CandidateFile file;
  file.pseudonym = worker.pseudonym;
  file.commitments[0] =
      commit(worker.key, make_attribute_vector(domain.scale_time(worker.attrs.time_point)), rng);
  file.commitments[1] =
      commit(worker.key, make_attribute_vector(domain.scale_geo(worker.attrs.lon)), rng);
  file.commitments[2] =
      commit(worker.key, make_attribute_vector(domain.scale_geo(worker.attrs.lat)), rng);
  return file;
}

int reputation_gate(const Pseudonym& who, double threshold, const ReputationStore& store,
                    std::vector<std::string>* audit_log) {
  if (!store.known(who)) {
    if (audit_log) audit_log->push_back("unknown pseudonym " + who.hex());
    return 0;
  }
  return gate(store.record(who), threshold) ? 1 : 0;
}

namespace {

std::array<IntervalCheckVector, 3> task_check_vectors(const TaskSpec& task,
                                                      const CommitmentDomain& domain) {
  return {make_check_vector(domain.scale_time(task.time_window.lo),
                            domain.scale_time(task.time_window.hi), domain.eps_time()),
          make_check_vector(domain.scale_geo(task.lon_window.lo),
                            domain.scale_geo(task.lon_window.hi), domain.eps_geo()),
          make_check_vector(domain.scale_geo(task.lat_window.lo),
                            domain.scale_geo(task.lat_window.hi), domain.eps_geo())};
}

bool in_window(double v, const Window& w) { return v >= w.lo && v <= w.hi; }

}  // namespace

std::optional<std::array<CheckResponse, 3>> self_check_and_respond(
    const WorkerState& worker, const TaskSpec& task, const CommitmentDomain& domain, Rng& rng,
    bool dishonest) {
  bool ok = in_window(worker.attrs.time_point, task.time_window) &&
            in_window(worker.attrs.lon, task.lon_window) &&
            in_window(worker.attrs.lat, task.lat_window);
  if (!ok && !dishonest) return std::nullopt;
  auto checks = task_check_vectors(task, domain);
  return std::array<CheckResponse, 3>{respond(worker.key, checks[0], rng),
                                      respond(worker.key, checks[1], rng),
                                      respond(worker.key, checks[2], rng)};
}

std::vector<std::size_t> verify_candidates(std::vector<CandidateFile>& files) {
  std::vector<std::size_t> verified;
  for (std::size_t i = 0; i < files.size(); ++i) {
    CandidateFile& f = files[i];
    f.verified = false;
    if (!f.gate_passed || !f.responses) continue;
    bool ok = true;
    for (int a = 0; a < 3; ++a) {
      if (!verify(f.commitments[a], (*f.responses)[a])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      f.verified = true;
      verified.push_back(i);
    }
  }
  return verified;
}

std::vector<std::size_t> stratified_select(const std::vector<VerifiedCandidate>& verified,
                                           int k, Rng& rng) {
  if (verified.empty()) throw std::domain_error("stratified_select: empty verified set");
  if (k < 1) throw std::domain_error("stratified_select: k must be positive");
  const int n = static_cast<int>(verified.size());
  if (n <= k) {
    std::vector<std::size_t> all(verified.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }

  std::map<int, std::vector<std::size_t>> strata;
  for (std::size_t i = 0; i < verified.size(); ++i) {
    strata[verified[i].band].push_back(i);
  }

  // Proportional quotas with largest-remainder rounding.
  struct Alloc {
    int band;
    int quota;
    double remainder;
  };
  std::vector<Alloc> allocs;
  int assigned = 0;
  for (const auto& [band, members] : strata) {
    double exact = static_cast<double>(k) * members.size() / n;
    int quota = static_cast<int>(std::floor(exact));
    quota = std::min(quota, static_cast<int>(members.size()));
    allocs.push_back({band, quota, exact - quota});
    assigned += quota;
  }
  std::stable_sort(allocs.begin(), allocs.end(),
                   [](const Alloc& a, const Alloc& b) { return a.remainder > b.remainder; });
  for (std::size_t i = 0; assigned < k; i = (i + 1) % allocs.size()) {
    Alloc& a = allocs[i];
    if (a.quota < static_cast<int>(strata[a.band].size())) {
      a.quota += 1;
      assigned += 1;
    }
  }

  std::vector<std::size_t> selected;
  std::sort(allocs.begin(), allocs.end(),
            [](const Alloc& a, const Alloc& b) { return a.band < b.band; });
  for (const Alloc& a : allocs) {
    std::vector<std::size_t> members = strata[a.band];
    // Deterministic partial Fisher-Yates draw.
    for (int j = 0; j < a.quota; ++j) {
      std::int64_t pick = rng.uniform_int(j, static_cast<std::int64_t>(members.size()) - 1);
      std::swap(members[j], members[pick]);
      selected.push_back(members[j]);
    }
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

std::vector<RecruitmentDecision> issue_masks(const std::vector<Pseudonym>& selected,
                                             const std::vector<Pseudonym>& rejected,
                                             const MaskParams& params, Rng& rng) {
  std::vector<RecruitmentDecision> out;
  out.reserve(selected.size() + rejected.size());
  for (const Pseudonym& who : selected) {
    MaskPair mask;
    mask.add = rng.uniform(-params.add_halfwidth, params.add_halfwidth);
    mask.mul = rng.uniform(1.0, params.mul_max);
    out.push_back({who, 1, mask});
  }
  for (const Pseudonym& who : rejected) {
    out.push_back({who, 0, std::nullopt});
  }
  return out;
}

RecruitmentOutcome run_recruitment(const TaskSpec& task,
                                   const std::vector<WorkerState>& candidates,
                                   const ReputationStore& store, const CommitmentDomain& domain,
                                   const MaskParams& masks, Rng& rng, Transcript* transcript,
                                   const std::vector<bool>* dishonest) {
  task.validate();
  RecruitmentOutcome out;
  std::vector<CandidateFile> files;
  files.reserve(candidates.size());

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const WorkerState& w = candidates[i];
    CandidateFile file = submit_commitments(w, task, domain, rng);
    file.gate_passed = reputation_gate(w.pseudonym, task.rep_threshold, store, &out.audit_log) == 1;
    if (file.gate_passed) {
      bool lie = dishonest && (*dishonest)[i];
      file.responses = self_check_and_respond(w, task, domain, rng, lie);
    }
    if (transcript) {
      transcript->add(task.task_id, 0, "worker", "SP",
                      {{"pseudonym", w.pseudonym.hex()},
                       {"gate_passed", file.gate_passed},
                       {"responded", file.responses.has_value()}});
    }
    files.push_back(std::move(file));
  }

  std::vector<std::size_t> verified_idx = verify_candidates(files);
  if (verified_idx.empty()) {
    throw std::runtime_error("run_recruitment: no verified candidates for task " + task.task_id);
  }

  std::vector<VerifiedCandidate> verified;
  verified.reserve(verified_idx.size());
  for (std::size_t idx : verified_idx) {
    verified.push_back({files[idx].pseudonym, store.band(files[idx].pseudonym)});
  }
  out.shortfall = static_cast<int>(verified.size()) < task.workers_needed;

  std::vector<std::size_t> picks = stratified_select(verified, task.workers_needed, rng);
  std::vector<Pseudonym> selected, rejected;
  std::vector<bool> is_selected(files.size(), false);
  for (std::size_t p : picks) {
    selected.push_back(verified[p].pseudonym);
    is_selected[verified_idx[p]] = true;
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!is_selected[i]) rejected.push_back(files[i].pseudonym);
  }

  out.decisions = issue_masks(selected, rejected, masks, rng);
  out.selected = selected;
  if (transcript) {
    for (const RecruitmentDecision& d : out.decisions) {
      transcript->add(task.task_id, 0, "SP", "worker",
                      {{"pseudonym", d.pseudonym.hex()}, {"selected", d.selected}});
    }
  }
  return out;
}

}  // namespace mcs
