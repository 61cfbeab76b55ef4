#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "mcs/pseudonym.hpp"
#include "mcs/recruitment.hpp"

using namespace mcs;

namespace {

Pseudonym nym(int i) { return Pseudonym{identity_bytes("w" + std::to_string(i))}; }

TaskSpec basic_task() {
  TaskSpec task;
  task.task_id = "t0";
  task.time_window = {1000.0, 2000.0};
  task.lon_window = {116.30, 116.40};
  task.lat_window = {39.90, 40.00};
  task.rep_threshold = 0.5;
  task.budget = 100.0;
  task.workers_needed = 3;
  return task;
}

WorkerState make_worker(int i, double t, double lon, double lat, Rng& rng) {
  WorkerState w;
  w.pseudonym = nym(i);
  w.attrs = {t, lon, lat};
  w.key = CommitmentKey::random(rng, 24);
  return w;
}

}  // namespace

TEST_CASE("task validation") {
  TaskSpec t = basic_task();
  CHECK_NOTHROW(t.validate());
  t.time_window = {5, 1};
  CHECK_THROWS_AS(t.validate(), std::domain_error);
  t = basic_task();
  t.rep_threshold = 1.5;
  CHECK_THROWS_AS(t.validate(), std::domain_error);
  t = basic_task();
  t.workers_needed = 1;
  CHECK_THROWS_AS(t.validate(), std::domain_error);
}

TEST_CASE("commitment domain scales and positivity shifts") {
  CommitmentDomain d;
  CHECK(d.scale_time(1500.0) == 1500);
  CHECK(d.scale_geo(116.352) == 116352000);
  CHECK(d.scale_geo(-0.0000015) == -2);  // rounds to nearest
  CHECK(d.eps_time() == 2 * mpz_class(4000000000L));
  CHECK(d.eps_geo() == 2 * mpz_class(180000000));
}

TEST_CASE("commitment submission yields one commitment per attribute") {
  Rng rng(1);
  CommitmentDomain d;
  WorkerState w = make_worker(0, 1500, 116.35, 39.95, rng);
  CandidateFile f = submit_commitments(w, basic_task(), d, rng);
  CHECK(f.pseudonym == w.pseudonym);
  for (const Commitment& c : f.commitments) {
    CHECK(c.blinded != ExactVec4(0, 0, 0, 0));
  }
}

TEST_CASE("identity key exposes raw monomials, distinct keys hide them") {
  Rng rng(2);
  CommitmentDomain d;
  WorkerState w = make_worker(0, 1500, 116.35, 39.95, rng);
  w.key = CommitmentKey::identity();
  Commitment c = commit_with_blinding(w.key, make_attribute_vector(d.scale_time(1500)), 1);
  CHECK(c.blinded == make_attribute_vector(1500).monomials);

  WorkerState a = make_worker(1, 1500, 116.35, 39.95, rng);
  WorkerState b = make_worker(2, 1500, 116.35, 39.95, rng);
  CandidateFile fa = submit_commitments(a, basic_task(), d, rng);
  CandidateFile fb = submit_commitments(b, basic_task(), d, rng);
  CHECK(fa.commitments[0].blinded != fb.commitments[0].blinded);
}

TEST_CASE("reputation gate decisions") {
  ReputationStore store;
  store.enroll(nym(1), ReputationRecord::with_value(0.75));
  store.enroll(nym(2));  // fresh prior 0.5
  store.enroll(nym(3), ReputationRecord::with_value(0.25));
  std::vector<std::string> audit;
  CHECK(reputation_gate(nym(1), 0.5, store, &audit) == 1);
  CHECK(reputation_gate(nym(2), 0.5, store, &audit) == 1);  // boundary passes
  CHECK(reputation_gate(nym(3), 0.5, store, &audit) == 0);
  CHECK(audit.empty());
  CHECK(reputation_gate(nym(9), 0.5, store, &audit) == 0);
  CHECK(audit.size() == 1);
}

TEST_CASE("self check responds only in-window unless dishonest") {
  Rng rng(3);
  CommitmentDomain d;
  TaskSpec task = basic_task();
  WorkerState in = make_worker(0, 1500, 116.35, 39.95, rng);
  CHECK(self_check_and_respond(in, task, d, rng).has_value());

  WorkerState out = make_worker(1, 1500, 117.50, 39.95, rng);  // longitude outside
  CHECK_FALSE(self_check_and_respond(out, task, d, rng).has_value());
  CHECK(self_check_and_respond(out, task, d, rng, true).has_value());
}

TEST_CASE("verification accepts honest in-window workers and rejects liars") {
  Rng rng(4);
  CommitmentDomain d;
  TaskSpec task = basic_task();
  std::vector<CandidateFile> files;
  // 10 honest in-window candidates.
  for (int i = 0; i < 10; ++i) {
    WorkerState w = make_worker(i, 1500 + i, 116.31 + i * 0.005, 39.91 + i * 0.005, rng);
    CandidateFile f = submit_commitments(w, task, d, rng);
    f.gate_passed = true;
    f.responses = self_check_and_respond(w, task, d, rng);
    files.push_back(std::move(f));
  }
  // One out-of-window liar and one boundary case.
  WorkerState liar = make_worker(10, 2500, 116.35, 39.95, rng);
  CandidateFile lf = submit_commitments(liar, task, d, rng);
  lf.gate_passed = true;
  lf.responses = self_check_and_respond(liar, task, d, rng, true);
  files.push_back(std::move(lf));

  WorkerState edge = make_worker(11, 2000, 116.40, 40.00, rng);  // all at bounds
  CandidateFile ef = submit_commitments(edge, task, d, rng);
  ef.gate_passed = true;
  ef.responses = self_check_and_respond(edge, task, d, rng);
  files.push_back(std::move(ef));

  std::vector<std::size_t> verified = verify_candidates(files);
  CHECK(verified.size() == 11);  // everyone except the liar
  CHECK_FALSE(files[10].verified);
  CHECK(files[11].verified);
}

TEST_CASE("stratified selection take-all and shortfall") {
  Rng rng(5);
  std::vector<VerifiedCandidate> ten;
  for (int i = 0; i < 10; ++i) ten.push_back({nym(i), i % 3});
  CHECK(stratified_select(ten, 10, rng).size() == 10);

  std::vector<VerifiedCandidate> three = {{nym(0), 1}, {nym(1), 2}, {nym(2), 3}};
  CHECK(stratified_select(three, 10, rng).size() == 3);
  CHECK_THROWS_AS(stratified_select({}, 5, rng), std::domain_error);
}

TEST_CASE("uniform two-stratum pool splits evenly") {
  Rng rng(6);
  std::vector<VerifiedCandidate> pool;
  for (int i = 0; i < 10; ++i) pool.push_back({nym(i), 2});
  for (int i = 10; i < 20; ++i) pool.push_back({nym(i), 7});
  std::vector<std::size_t> picks = stratified_select(pool, 10, rng);
  REQUIRE(picks.size() == 10);
  int low = 0, high = 0;
  for (std::size_t p : picks) {
    if (pool[p].band == 2) ++low;
    else ++high;
  }
  CHECK(low == 5);
  CHECK(high == 5);
  std::set<std::size_t> uniq(picks.begin(), picks.end());
  CHECK(uniq.size() == 10);  // without replacement
}

TEST_CASE("mask issuance marks selection and keeps pairs distinct") {
  Rng rng(7);
  MaskParams params;
  std::vector<Pseudonym> sel, rej = {nym(9000)};
  for (int i = 0; i < 1000; ++i) sel.push_back(nym(i));
  std::vector<RecruitmentDecision> out = issue_masks(sel, rej, params, rng);
  REQUIRE(out.size() == 1001);
  std::set<std::pair<double, double>> pairs;
  for (int i = 0; i < 1000; ++i) {
    CHECK(out[i].selected == 1);
    REQUIRE(out[i].mask.has_value());
    CHECK(out[i].mask->mul >= 1.0);
    CHECK(std::abs(out[i].mask->add) <= params.add_halfwidth);
    pairs.insert({out[i].mask->add, out[i].mask->mul});
  }
  CHECK(pairs.size() == 1000);
  CHECK(out[1000].selected == 0);
  CHECK_FALSE(out[1000].mask.has_value());
}

TEST_CASE("recruitment end to end recruits only qualified in-window workers") {
  Rng rng(8);
  CommitmentDomain d;
  int recruitments = 0;
  int checked = 0;
  while (recruitments < 10000) {
    TaskSpec task = basic_task();
    task.workers_needed = 2 + static_cast<int>(rng.uniform_int(0, 2));
    int n = 3 + static_cast<int>(rng.uniform_int(0, 4));

    ReputationStore store;
    std::vector<WorkerState> candidates;
    std::vector<bool> dishonest(static_cast<std::size_t>(n), false);
    std::map<Pseudonym, std::size_t> index;
    std::vector<bool> in_window(static_cast<std::size_t>(n), false);
    std::vector<double> reps(static_cast<std::size_t>(n), 0.0);
    bool any_good = false;
    for (int i = 0; i < n; ++i) {
      bool inside = rng.bernoulli(0.6);
      double t = inside ? rng.uniform(1000, 2000) : rng.uniform(3000, 4000);
      double lon = rng.uniform(116.30, 116.40);
      double lat = rng.uniform(39.90, 40.00);
      WorkerState w = make_worker(recruitments * 100 + i, t, lon, lat, rng);
      double rep = rng.uniform(0.0, 1.0);
      store.enroll(w.pseudonym, ReputationRecord::with_value(rep));
      in_window[static_cast<std::size_t>(i)] = inside;
      reps[static_cast<std::size_t>(i)] = rep;
      dishonest[static_cast<std::size_t>(i)] = !inside && rng.bernoulli(0.5);
      index[w.pseudonym] = static_cast<std::size_t>(i);
      candidates.push_back(std::move(w));
      if (inside && rep >= task.rep_threshold) any_good = true;
    }
    if (!any_good) continue;  // recruitment aborts with no verified candidates

    RecruitmentOutcome out = run_recruitment(task, candidates, store, d, MaskParams{}, rng,
                                             nullptr, &dishonest);
    ++recruitments;
    int qualified = 0;
    for (int i = 0; i < n; ++i) {
      if (in_window[static_cast<std::size_t>(i)] &&
          reps[static_cast<std::size_t>(i)] >= task.rep_threshold) {
        ++qualified;
      }
    }
    CHECK(static_cast<int>(out.selected.size()) ==
          std::min(task.workers_needed, qualified));
    for (const Pseudonym& who : out.selected) {
      std::size_t i = index.at(who);
      ++checked;
      REQUIRE(in_window[i]);
      REQUIRE(reps[i] >= task.rep_threshold);
    }
    CHECK(out.shortfall == (qualified < task.workers_needed));
  }
  CHECK(checked > 0);
}

TEST_CASE("recruitment is deterministic for a fixed seed") {
  CommitmentDomain d;
  auto run_once = [&](std::uint64_t seed) {
    Rng rng(seed);
    TaskSpec task = basic_task();
    ReputationStore store;
    std::vector<WorkerState> candidates;
    for (int i = 0; i < 8; ++i) {
      WorkerState w = make_worker(i, rng.uniform(1000, 2000), rng.uniform(116.30, 116.40),
                                  rng.uniform(39.90, 40.00), rng);
      store.enroll(w.pseudonym, ReputationRecord::with_value(rng.uniform(0.3, 1.0)));
      candidates.push_back(std::move(w));
    }
    RecruitmentOutcome out =
        run_recruitment(basic_task(), candidates, store, d, MaskParams{}, rng);
    std::vector<std::string> hexes;
    for (const Pseudonym& p : out.selected) hexes.push_back(p.hex());
    return hexes;
  };
  CHECK(run_once(42) == run_once(42));
  CHECK(run_once(42) != run_once(43));
}

TEST_CASE("recruitment transcript stays at the commitment level") {
  Rng rng(9);
  CommitmentDomain d;
  TaskSpec task = basic_task();
  ReputationStore store;
  std::vector<WorkerState> candidates;
  for (int i = 0; i < 5; ++i) {
    WorkerState w = make_worker(i, rng.uniform(1000, 2000), rng.uniform(116.30, 116.40),
                                rng.uniform(39.90, 40.00), rng);
    store.enroll(w.pseudonym, ReputationRecord::with_value(0.8));
    candidates.push_back(std::move(w));
  }
  Transcript transcript;
  run_recruitment(task, candidates, store, d, MaskParams{}, rng, &transcript);
  CHECK_FALSE(transcript.records().empty());
  for (const auto& rec : transcript.records()) {
    const auto& payload = rec.at("payload");
    CHECK_FALSE(payload.contains("time_point"));
    CHECK_FALSE(payload.contains("lon"));
    CHECK_FALSE(payload.contains("lat"));
  }
}
