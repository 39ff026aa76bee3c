// Copyright 2026 The pmcover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or overruns its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pmcover/bounds.h"
#include "pmcover/cover.h"
#include "pmcover/graph.h"
#include "pmcover/matching.h"
#include "pmcover/polytope.h"
#include "testing.h"

namespace pmcover {
namespace {

using Clock = std::chrono::steady_clock;

// Time budgets in milliseconds.
constexpr double kInstantMs = 1000;
constexpr double kOneSecondMs = 1000;
constexpr double kOneMinuteMs = 60000;
constexpr double kTenSecondsMs = 10000;

constexpr int kDecompositionsPerFixture = 50;
constexpr int kLemmaTrialsPerFixture = 1000;
constexpr int kCostVectorsPerFixture = 100;

Rational Q(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Limits AcceptanceLimits() {
  Limits limits;
  limits.max_subset_n = std::max(limits.max_subset_n, 28);
  return limits;
}

// Collects failure messages for one criterion.
class Check {
 public:
  void Expect(bool condition, const std::string& what) {
    if (!condition && failures_.size() < 5) failures_.push_back(what);
    if (!condition) ++count_;
  }
  void Note(const std::string& note) { notes_.push_back(note); }
  bool ok() const { return count_ == 0; }
  std::string Detail() const {
    std::ostringstream out;
    for (const auto& f : failures_) out << "\n    fail: " << f;
    if (count_ > static_cast<int>(failures_.size())) {
      out << "\n    ... " << count_ - failures_.size() << " more";
    }
    for (const auto& n : notes_) out << "\n    note: " << n;
    return out.str();
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
  int count_ = 0;
};

struct Criterion {
  int id;
  std::string title;
  double budget_ms;
  std::function<void(Check&)> body;
};

void Ac1(Check& c) {
  c.Expect(ASequence(2) == Q(3, 5), "a_2 = 3/5, got " + ToFractionString(ASequence(2)));
  c.Expect(ASequence(3) == Q(27, 35), "a_3 = 27/35, got " + ToFractionString(ASequence(3)));
  c.Expect(ASequence(5) == Q(215, 231), "a_5 = 215/231, got " + ToFractionString(ASequence(5)));
  const Rational inverse = 1 / (1 - ASequence(5));
  c.Expect(inverse == Q(231, 16), "1/(1-a_5) = 231/16, got " + ToFractionString(inverse));
}

void Ac2(Check& c) {
  const Rational m2 = ExactMaxCoverage(Fixture(FixtureKind::kPetersen), 2).fraction;
  c.Expect(m2 == Q(3, 5), "m_2(Petersen) = 3/5, got " + ToFractionString(m2));
}

void Ac3(Check& c) {
  const CubicGraph p = Fixture(FixtureKind::kPetersen);
  c.Expect(CountPerfectMatchings(p) == 6, "pm_count = 6");
  const Rational expected[] = {Q(4, 5), Q(14, 15), Q(1, 1)};
  for (int t = 3; t <= 5; ++t) {
    const Rational m = ExactMaxCoverage(p, t).fraction;
    c.Expect(m == expected[t - 3], "m_" + std::to_string(t) + " = " +
                                       ToFractionString(expected[t - 3]) + ", got " +
                                       ToFractionString(m));
  }
  const auto coverage = GreedyCover(p, 5).per_step_coverage;
  c.Expect(coverage == std::vector<int>{5, 9, 12, 14, 15}, "greedy coverage [5,9,12,14,15]");
}

void Ac4(Check& c) {
  const Limits limits = AcceptanceLimits();
  for (const auto& [name, g] : testing::Corpus()) {
    const CoverReport report = GreedyCover(g, 5, limits);
    for (int t = 1; t <= 5; ++t) {
      const Rational fraction = Q(report.per_step_coverage[t - 1], g.num_edges());
      c.Expect(fraction >= ASequence(t), name + " t=" + std::to_string(t) + " greedy " +
                                             ToFractionString(fraction) + " < a_t");
      const MatchingFamily prefix = report.family.Prefix(t);
      const PolytopeVerdict verdict = VerifyFractionalPm(g, FamilyWeight(prefix), limits);
      c.Expect(verdict.valid(), name + " t=" + std::to_string(t) + " family weight: " +
                                    (verdict.valid() ? "" : DescribeViolation(*verdict.violation)));
    }
  }
}

void Ac5(Check& c) {
  for (const auto& [name, g] : testing::Corpus()) {
    const int covered = GreedyCover(g, 5, AcceptanceLimits()).family.CoveredCount();
    const BigInt required = CoverageGuarantee(5, BigInt(g.num_edges()));
    c.Expect(covered >= required, name + " covers " + std::to_string(covered) + " < " +
                                      required.get_str());
  }
}

void Ac6(Check& c) {
  const Limits limits = AcceptanceLimits();
  for (const auto& [name, g] : testing::Corpus()) {
    const MatchingFamily family = GreedyCover(g, 5, limits).family;
    for (int t = 1; t <= 5; ++t) {
      const IntersectionCutResult result = IntersectionCutCheck(family.Prefix(t), limits);
      c.Expect(result.ok, name + " t=" + std::to_string(t) + " has a " +
                              std::to_string(2 * t + 1) + "-cut in the intersection");
    }
  }
}

void Ac7(Check& c) {
  const Limits limits = AcceptanceLimits();
  const CubicGraph p = Fixture(FixtureKind::kPetersen);
  const FractionalWeighting uniform(p.num_edges(), Q(1, 3));
  const ConvexDecomposition d = Decompose(p, uniform, limits);
  Rational total = 0;
  for (const auto& term : d.terms) total += term.coefficient;
  c.Expect(total == 1, "Petersen coefficients sum to 1");
  c.Expect(IsExactDecomposition(p, uniform, d), "Petersen uniform decomposition verifies");
  std::mt19937 rng(20261016);
  for (const auto& [name, g] : testing::Corpus()) {
    const auto pms = EnumeratePerfectMatchings(g);
    for (int i = 0; i < kDecompositionsPerFixture; ++i) {
      const auto w = testing::RandomConvexCombination(g, pms, rng);
      c.Expect(VerifyFractionalPm(g, w, limits).valid(), name + " combination is valid");
      const ConvexDecomposition round_trip = Decompose(g, w, limits);
      c.Expect(IsExactDecomposition(g, w, round_trip), name + " round trip " + std::to_string(i));
    }
  }
}

// Replays every greedy step and checks the selected matching directly.
void Ac8(Check& c) {
  const Limits limits = AcceptanceLimits();
  for (const auto& [name, g] : testing::Corpus()) {
    const MatchingFamily family = GreedyCover(g, 5, limits).family;
    for (int t = 0; t < 5; ++t) {
      const MatchingFamily prefix = family.Prefix(t);
      const FractionalWeighting w = FamilyWeight(prefix);
      const auto tight = TightOddCuts(g, w, limits);
      const EdgeSet covered = prefix.Covered();
      CostVector cost(g.num_edges());
      Rational cw = 0;
      for (int e = 0; e < g.num_edges(); ++e) {
        cost[e] = covered.test(e) ? 0 : 1;
        cw += cost[e] * w[e];
      }
      const std::string where = name + " step " + std::to_string(t + 1);
      try {
        const PerfectMatching m = SelectLemmaMatching(g, cost, tight);
        c.Expect(Evaluate(cost, m) >= cw, where + " c.chi^M < c.w");
        for (const auto& cut : tight) {
          c.Expect(m.IntersectionSize(cut.boundary) == 1, where + " tight cut hit more than once");
        }
        c.Expect(m == family.matchings()[t], where + " greedy picked a different matching");
      } catch (const Error& e) {
        c.Expect(false, where + " " + e.what());
      }
    }
  }
}

void Ac9(Check& c) {
  std::mt19937 rng(9);
  for (const auto& [name, g] : testing::Corpus()) {
    const auto pms = EnumeratePerfectMatchings(g);
    for (int trial = 0; trial < kLemmaTrialsPerFixture; ++trial) {
      std::vector<PerfectMatching> members;
      const int t = static_cast<int>(rng() % 7);
      for (int i = 0; i < t; ++i) members.push_back(pms[rng() % pms.size()]);
      const MatchingFamily family(g, members);
      EdgeSet a;
      while (a.none()) {
        for (int e = 0; e < g.num_edges(); ++e) {
          if (rng() % 4 == 0) a.set(e);
        }
      }
      const PhiLemmaCheck check = LemmaPhiCheck(a, family);
      c.Expect(check.weight_at_least_one == check.phi_within_bound && check.equality_matches,
               name + " trial " + std::to_string(trial));
    }
  }
}

void Ac10(Check& c) {
  c.Expect(SizeBoundThreshold(5) == 14, "threshold(5) = 14");
  c.Expect(SizeBoundCheck(5), "size bound check at t=5");
  for (int t = 5; t <= 1000; ++t) {
    c.Expect(InductionStepCheck(t), "induction step at t=" + std::to_string(t));
  }
  for (int t = 1; t < 5; ++t) {
    const Rational gap = 1 - ASequence(t);
    const bool holds = SizeBoundCheck(t);
    c.Note("t=" + std::to_string(t) + ": floor(2^t/sqrt t) = " + SizeBoundThreshold(t).get_str() +
           ", 1/(1-a_t) = " + ToFractionString(Rational(1 / gap)) + ", literal check " +
           (holds ? "true" : "FALSE (does not hold as stated)"));
  }
}

void Ac11(Check& c) {
  std::mt19937 rng(11);
  for (const auto& [name, g] : testing::Corpus()) {
    const auto pms = EnumeratePerfectMatchings(g);
    for (int trial = 0; trial < kCostVectorsPerFixture; ++trial) {
      CostVector cost(g.num_edges());
      for (auto& x : cost) x = testing::RandomRational(rng, -3, 3, 7);
      Rational best = Evaluate(cost, pms.front());
      for (const auto& m : pms) best = std::max(best, Evaluate(cost, m));
      std::vector<PerfectMatching> argmax;
      for (const auto& m : pms) {
        if (Evaluate(cost, m) == best) argmax.push_back(m);
      }
      c.Expect(MaxWeightValue(g, cost) == best, name + " value, trial " + std::to_string(trial));
      c.Expect(ArgmaxMatchings(g, cost) == argmax, name + " argmax, trial " + std::to_string(trial));
    }
  }
}

}  // namespace
}  // namespace pmcover

int main() {
  using namespace pmcover;
  const std::vector<Criterion> criteria = {
      {1, "sequence exactness", kInstantMs, Ac1},
      {2, "Petersen m_2 = 3/5", kOneSecondMs, Ac2},
      {3, "Petersen profile", kOneSecondMs, Ac3},
      {4, "greedy fraction >= a_t, weights stay fractional PMs", kOneMinuteMs, Ac4},
      {5, "five greedy matchings cover ceil(215/231 |E|)", kOneMinuteMs, Ac5},
      {6, "no (2t+1)-cut inside the intersection", kOneMinuteMs, Ac6},
      {7, "convex decompositions round-trip", kOneMinuteMs, Ac7},
      {8, "selected matching: gain and one edge per tight cut", kOneMinuteMs, Ac8},
      {9, "Phi equivalence, 1000 trials per fixture", kTenSecondsMs, Ac9},
      {10, "size-bound arithmetic", kInstantMs, Ac10},
      {11, "branch and bound equals enumeration", kOneMinuteMs, Ac11},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = Clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    check.Expect(ms <= criterion.budget_ms, "over time budget");
    if (!check.ok()) ++failed;
    std::printf("AC%-2d %s  %-55s %9.1f ms (budget %.0f ms)%s\n", criterion.id,
                check.ok() ? "PASS" : "FAIL", criterion.title.c_str(), ms, criterion.budget_ms,
                check.Detail().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
