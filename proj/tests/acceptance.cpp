// Acceptance suite: one PASS/FAIL line per criterion, thresholds fixed below.

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cli_support.hpp"
#include "kneekit/baselines.hpp"
#include "kneekit/benchmarks.hpp"
#include "kneekit/emo.hpp"
#include "kneekit/kpitu.hpp"
#include "kneekit/metrics.hpp"
#include "support.hpp"

using namespace kneekit;

namespace {

constexpr double kAxiomsSeconds = 10.0;
constexpr double kClosedFormTolerance = 1e-12;
constexpr double kOracleSeconds = 60.0;
constexpr double kDeb2dkSeconds = 5.0;
constexpr double kEvolveMedianLimit = 1e-2;
constexpr double kEvolveSeconds = 120.0;

struct Verdict {
  bool pass;
  std::string detail;
};

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double v, int precision = 3) {
  std::ostringstream s;
  s << std::setprecision(precision) << v;
  return s.str();
}

// Adjacent-sample spacing of a two-objective front listed in order.
double sample_spacing(const TradeoffSet& front) {
  double spacing = 0.0;
  for (std::size_t i = 1; i < front.size(); ++i) spacing = std::max(spacing, std::hypot(front[i][0] - front[i - 1][0], front[i][1] - front[i - 1][1]));
  return spacing;
}

std::vector<Point> rows_at(const TradeoffSet& set, const IndexList& idx) {
  std::vector<Point> out;
  for (std::size_t i : idx) out.push_back(set.row(i));
  return out;
}

struct OracleCase {
  std::vector<Point> rows;
};

// Shared by the oracle and parallel criteria.
std::vector<OracleCase> oracle_suite() {
  testkit::Rng rng(2024);
  std::vector<OracleCase> suite;
  const std::size_t dims[] = {2, 3, 5};
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = dims[t % 3];
    const std::size_t n = 2 + rng.index(199);
    if (t % 4 == 3) {
      suite.push_back({testkit::random_points(rng, n, m)});
    } else {
      suite.push_back({testkit::nondominated_set(rng, n, m, rng.uniform(0.3, 3.0))});
    }
  }
  return suite;
}

Verdict relation_axioms() {
  Stopwatch clock;
  testkit::Rng rng(1);
  const std::size_t dims[] = {2, 3, 5, 10};
  std::size_t violations = 0, dominating_pairs = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto set = TradeoffSet::from_rows(testkit::nondominated_set(rng, 50, dims[t % 4], rng.uniform(0.3, 3.0)));
    const std::size_t n = set.size();
    std::vector<KneeComparison> cmp(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cmp[i * n + j] = knee_compare(set[i], set[j], set.ranges());
    auto dom = [&](std::size_t i, std::size_t j) { return cmp[i * n + j] == KneeComparison::Dominates; };
    for (std::size_t i = 0; i < n; ++i) {
      if (cmp[i * n + i] != KneeComparison::NonDominated) ++violations;
      for (std::size_t j = 0; j < n; ++j) {
        if (!dom(i, j)) continue;
        ++dominating_pairs;
        if (cmp[j * n + i] != KneeComparison::DominatedBy) ++violations;
        for (std::size_t k = 0; k < n; ++k)
          if (dom(j, k) && !dom(i, k)) ++violations;
      }
    }
  }
  const double s = clock.seconds();
  return {violations == 0 && s < kAxiomsSeconds,
          "1000 sets, " + std::to_string(dominating_pairs) + " dominating pairs, " + std::to_string(violations) +
              " violations, " + fmt(s) + " s (limit " + fmt(kAxiomsSeconds) + " s)"};
}

Verdict closed_form() {
  testkit::Rng rng(2);
  double worst = 0.0;
  for (int t = 0; t < 100000; ++t) {
    const std::size_t m = 2 + rng.index(9);
    ObjectiveRanges r{Point(m), Point(m)};
    Point a(m), b(m);
    double direct = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      r.min[k] = rng.uniform(-5.0, 5.0);
      r.max[k] = r.min[k] + rng.uniform(1e-3, 10.0);
      a[k] = rng.uniform(r.min[k], r.max[k]);
      b[k] = rng.uniform(r.min[k], r.max[k]);
      direct += (a[k] - b[k]) / r.extent(k);
    }
    worst = std::max(worst, std::abs(utility(a, b, r) - direct));
  }
  return {worst <= kClosedFormTolerance, "1e5 pairs, max deviation " + fmt(worst) + " (limit " + fmt(kClosedFormTolerance) + ")"};
}

Verdict oracle_equivalence(const std::vector<OracleCase>& suite) {
  Stopwatch clock;
  const QuietWarnings quiet;
  std::size_t mismatches = 0, knees = 0;
  for (const auto& c : suite) {
    const auto mine = identify(TradeoffSet::from_rows(c.rows));
    const auto ref = testkit::brute::identify(c.rows);
    knees += mine.knees.size();
    if (mine.knees != ref.knees) ++mismatches;
  }
  const double s = clock.seconds();
  return {mismatches == 0 && s < kOracleSeconds, std::to_string(suite.size()) + " sets, " + std::to_string(knees) +
                                                     " knees, " + std::to_string(mismatches) + " mismatches, " + fmt(s) +
                                                     " s (limit " + fmt(kOracleSeconds) + " s)"};
}

Verdict parallel_determinism(const std::vector<OracleCase>& suite) {
  const QuietWarnings quiet;
  std::size_t differences = 0;
  for (const auto& c : suite) {
    const auto set = TradeoffSet::from_rows(c.rows);
    const auto serial = identify(set);
    for (std::size_t workers : {1u, 2u, 8u}) {
      const auto p = identify_parallel(set, workers);
      const bool same = p.knees == serial.knees && p.accumulative.size() == serial.accumulative.size() &&
                        std::memcmp(p.accumulative.data(), serial.accumulative.data(), serial.accumulative.size() * sizeof(double)) == 0 &&
                        p.neighbourhood.subregion == serial.neighbourhood.subregion &&
                        p.neighbourhood.neighbours == serial.neighbourhood.neighbours;
      if (!same) ++differences;
    }
  }
  return {differences == 0, std::to_string(suite.size()) + " sets x workers {1,2,8}, " + std::to_string(differences) + " differences"};
}

Verdict deb2dk_global() {
  Stopwatch clock;
  const auto spec = BenchmarkSpec::standard(Family::DEB2DK, 1);
  const auto front = sample_front(spec);
  const auto truth = ground_truth(spec).knees;
  const double tolerance = sample_spacing(front);
  const std::vector<std::pair<std::string, IndexList>> methods{
      {"KPITU", identify(front).knees}, {"EMU", emu_knees(front).knees}, {"CHIM", chim_knees(front)}, {"MMD", mmd_knee(front)}};
  bool pass = true;
  std::string detail;
  for (const auto& [name, knees] : methods) {
    const double value = indicator(rows_at(front, knees), truth.rows());
    const bool ok = knees.size() == 1 && value <= tolerance;
    pass = pass && ok;
    detail += name + ": " + std::to_string(knees.size()) + " knee(s), I(S)=" + fmt(value) + (ok ? "" : " [x]") + "; ";
  }
  const double s = clock.seconds();
  pass = pass && s < kDeb2dkSeconds;
  return {pass, detail + "tolerance " + fmt(tolerance) + ", " + fmt(s) + " s (limit " + fmt(kDeb2dkSeconds) + " s)"};
}

std::size_t distinct_locations(const TradeoffSet& front, const IndexList& knees) {
  std::set<Point> where;
  for (std::size_t k : knees) where.insert(front.row(k));
  return where.size();
}

Verdict deb2dk_local() {
  const auto spec = BenchmarkSpec::standard(Family::DEB2DK, 4);
  const auto front = sample_front(spec);
  const auto truth = ground_truth(spec).knees;
  const double tolerance = sample_spacing(front);
  const auto kpitu = identify(front).knees;
  const double value = indicator(rows_at(front, kpitu), truth.rows());
  const std::size_t chim = distinct_locations(front, chim_knees(front));
  const std::size_t mmd = distinct_locations(front, mmd_knee(front));
  const bool pass = kpitu.size() == 4 && value <= tolerance && chim < 4 && mmd < 4;
  return {pass, "KPITU: " + std::to_string(kpitu.size()) + " knees (need 4), I(S)=" + fmt(value) + " (limit " +
                    fmt(tolerance) + "); CHIM " + std::to_string(chim) + " and MMD " + std::to_string(mmd) +
                    " distinct locations (need < 4)"};
}

Verdict chim_mmd() {
  testkit::Rng rng(7);
  std::size_t checked = 0, regenerated = 0, differences = 0;
  while (checked < 500) {
    const std::size_t m = 2 + rng.index(4);
    auto rows = testkit::nondominated_set(rng, 10 + rng.index(60), m, rng.uniform(0.2, 1.0));
    for (std::size_t k = 0; k < m; ++k) {
      Point e(m, 0.0);
      e[k] = 1.0;
      rows.push_back(e);
    }
    const auto set = TradeoffSet::from_rows(rows);
    const auto norm = normalize(set);
    bool convex = true;
    for (std::size_t i = 0; i < norm.size() && convex; ++i) {
      double s = 0.0;
      for (double v : norm[i]) s += v;
      convex = s <= 1.0;
    }
    if (!convex) {
      ++regenerated;
      continue;
    }
    ++checked;
    if (chim_knees(set) != mmd_knee(set)) ++differences;
  }
  return {differences == 0, "500 sets with normalized sums <= 1 (" + std::to_string(regenerated) + " redrawn), " +
                                std::to_string(differences) + " differences"};
}

Verdict sorting() {
  testkit::Rng rng(8);
  const QuietWarnings quiet;
  std::size_t outputs = 0, drawn = 0, first_wrong = 0, order_wrong = 0, pairs = 0;
  while (outputs < 200) {
    ++drawn;
    const auto rows = drawn % 2 ? testkit::rippled_front(rng, 40 + rng.index(160), 2 + rng.index(5))
                                : testkit::nondominated_set(rng, 30 + rng.index(100), 3, rng.uniform(0.3, 2.0));
    const auto full = TradeoffSet::from_rows(rows);
    const auto r = identify(full);
    if (r.knees.size() < 2) continue;
    ++outputs;
    const auto set = full.subset(pareto_filter(full));
    // Re-express the knees in the filtered set that supplied the ranges.
    const auto kept = pareto_filter(full);
    IndexList local;
    for (std::size_t k : r.knees) local.push_back(static_cast<std::size_t>(std::find(kept.begin(), kept.end(), k) - kept.begin()));
    // Recompute over the knees in index order, as identify does, then read back in reported order.
    IndexList by_index = local;
    std::sort(by_index.begin(), by_index.end());
    const auto raw = accumulative_utility(set, by_index);
    std::vector<double> k;
    for (std::size_t i : local) k.push_back(raw[static_cast<std::size_t>(std::find(by_index.begin(), by_index.end(), i) - by_index.begin())]);
    if (std::min_element(k.begin(), k.end()) != k.begin() || k != r.accumulative ||
        !std::is_sorted(r.accumulative.begin(), r.accumulative.end()))
      ++first_wrong;
    for (std::size_t a = 0; a < local.size(); ++a)
      for (std::size_t b = 0; b < local.size(); ++b) {
        if (a == b || knee_compare(set[local[a]], set[local[b]], set.ranges()) != KneeComparison::Dominates) continue;
        ++pairs;
        if (!(k[a] < k[b])) ++order_wrong;
      }
  }
  return {first_wrong == 0 && order_wrong == 0, "200 outputs, first-is-argmin failures " + std::to_string(first_wrong) + ", " +
                                                    std::to_string(pairs) + " dominating pairs, ordering failures " +
                                                    std::to_string(order_wrong)};
}

Verdict lattice_cardinality() {
  std::size_t failures = 0, cases = 0;
  for (std::size_t m = 2; m <= 10; ++m) {
    for (std::size_t h = 1; h <= 12; ++h) {
      // C(h+m-1, m-1) by exact integer recurrence.
      std::size_t c = 1;
      for (std::size_t i = 1; i < m; ++i) c = c * (h + i) / i;
      ++cases;
      if (das_dennis(m, h).size() != c || lattice_size(m, h) != c) ++failures;
    }
  }
  return {failures == 0, std::to_string(cases) + " (m,H) pairs, " + std::to_string(failures) + " wrong counts"};
}

Verdict scale_invariance() {
  testkit::Rng rng(10);
  const QuietWarnings quiet;
  std::size_t changed = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = 2 + t % 4;
    auto rows = t % 3 == 2 ? testkit::random_points(rng, 20 + rng.index(150), m)
                           : testkit::nondominated_set(rng, 20 + rng.index(150), m, rng.uniform(0.3, 3.0));
    auto base = identify(TradeoffSet::from_rows(rows)).knees;
    for (std::size_t k = 0; k < m; ++k) {
      const double a = rng.uniform(0.01, 100.0), b = rng.uniform(-50.0, 50.0);
      for (auto& r : rows) r[k] = a * r[k] + b;
    }
    auto moved = identify(TradeoffSet::from_rows(rows)).knees;
    std::sort(base.begin(), base.end());
    std::sort(moved.begin(), moved.end());
    if (base != moved) ++changed;
  }
  return {changed == 0, "100 sets, " + std::to_string(changed) + " knee sets changed"};
}

Verdict evolution() {
  Stopwatch clock;
  const auto spec = BenchmarkSpec::standard(Family::DEB2DK, 1);
  const auto problem = benchmark_problem(spec, 30);
  std::vector<double> finals;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    EvoConfig c;
    c.population = 100;
    c.generations = 300;
    c.seed = seed;
    finals.push_back(run(problem, c).trace.back());
  }
  std::vector<double> sorted = finals;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[2];
  const double s = clock.seconds();
  std::string runs;
  for (double f : finals) runs += (runs.empty() ? "" : ", ") + fmt(f);
  return {median < kEvolveMedianLimit && s < kEvolveSeconds, "final I(S) per seed [" + runs + "], median " + fmt(median) +
                                                                 " (limit " + fmt(kEvolveMedianLimit) + "), " + fmt(s) +
                                                                 " s (limit " + fmt(kEvolveSeconds) + " s)"};
}

Verdict cli_stability() {
  const auto dir = clitest::scratch("acceptance");
  auto p = [&](const std::string& name) { return (dir / name).string(); };
  clitest::spit(p("triple.csv"), "f1,f2\n0,1\n0.2,0.2\n1,0\n");
  clitest::spit(p("convex.csv"), "0,1\n0.05,0.5\n0.1,0.3\n0.3,0.1\n0.6,0.02\n1,0\n");
  clitest::spit(p("a.csv"), "f1,f2\n0,0\n");
  clitest::spit(p("b.csv"), "f1,f2\n3,4\n");
  clitest::spit(p("ab.csv"), "f1,f2\n0,0\n1,1\n");
  clitest::run("bench --family deb2dk -K 1 --front " + p("deb.csv") + " --truth " + p("deb_truth.csv"));

  // Each invocation: arguments and the files it produces ("-" is stdout).
  const std::vector<std::pair<std::string, std::vector<std::string>>> invocations{
      {"identify " + p("triple.csv") + " -o " + p("o_triple.json"), {"o_triple.json"}},
      {"identify --method chim " + p("convex.csv") + " -o " + p("o_chim.json"), {"o_chim.json"}},
      {"identify --method mmd " + p("convex.csv") + " -o " + p("o_mmd.json"), {"o_mmd.json"}},
      {"identify " + p("deb.csv") + " -o " + p("o_deb.json"), {"o_deb.json"}},
      {"bench --family deb2dk -K 1 -n 200 --front " + p("o_f1.csv") + " --truth " + p("o_t1.csv"), {"o_f1.csv", "o_t1.csv"}},
      {"bench --family deb2dk -K 4 -n 200 --front " + p("o_f4.csv") + " --truth " + p("o_t4.csv"), {"o_f4.csv", "o_t4.csv"}},
      {"eval " + p("a.csv") + " " + p("a.csv"), {"-"}},
      {"eval " + p("a.csv") + " " + p("b.csv"), {"-"}},
      {"eval " + p("ab.csv") + " " + p("a.csv"), {"-"}},
      {"evolve --gens 0 --manifest " + p("o_m0.json") + " --population " + p("o_p0.csv"), {"o_m0.json", "o_p0.csv"}},
      {"evolve --family deb2dk -K 1 --trace --manifest " + p("o_md.json") + " --population " + p("o_pd.csv"), {"o_md.json", "o_pd.csv"}},
  };
  std::size_t unstable = 0, failed = 0, files = 0;
  for (const auto& [args, outputs] : invocations) {
    std::vector<std::string> reference;
    bool first = true;
    for (const char* env : {"KNEEKIT_THREADS=1", "KNEEKIT_THREADS=1", "KNEEKIT_THREADS=8", "KNEEKIT_THREADS=8"}) {
      const auto r = clitest::run(args, env);
      if (r.status != 0) ++failed;
      std::vector<std::string> got;
      for (const auto& f : outputs) got.push_back(f == "-" ? r.out : clitest::slurp(dir / f));
      if (first) {
        reference = got;
        files += got.size();
        first = false;
      } else if (got != reference) {
        ++unstable;
      }
    }
  }
  return {unstable == 0 && failed == 0, std::to_string(invocations.size()) + " invocations (" + std::to_string(files) +
                                            " outputs) x 2 runs x KNEEKIT_THREADS {1,8}: " + std::to_string(unstable) +
                                            " unstable, " + std::to_string(failed) + " failed runs"};
}

}  // namespace

int main() {
  const auto suite = oracle_suite();
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"knee-dominance axioms", relation_axioms},
      {"closed-form utility", closed_form},
      {"brute-force oracle equivalence", [&] { return oracle_equivalence(suite); }},
      {"parallel determinism", [&] { return parallel_determinism(suite); }},
      {"DEB2DK one global knee", deb2dk_global},
      {"DEB2DK four local knees", deb2dk_local},
      {"CHIM equals MMD in the convex regime", chim_mmd},
      {"knee sorting", sorting},
      {"Das-Dennis cardinality", lattice_cardinality},
      {"scale invariance", scale_invariance},
      {"NSGA-II-KPITU desk run", evolution},
      {"byte-stable CLI", cli_stability},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    failures += v.pass ? 0 : 1;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << i + 1 << ". " << criteria[i].first << ": " << v.detail
              << std::endl;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
