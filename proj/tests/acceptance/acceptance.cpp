// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// only when a criterion fails in a way not listed in kKnownRed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "dimred/geometry.hpp"
#include "dimred/mayer.hpp"
#include "dimred/polymer.hpp"
#include "dimred/signed_graph.hpp"
#include "dimred/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dimred;

namespace {

constexpr double pi = std::numbers::pi;
constexpr std::uint64_t kSamples = 1'000'000;
constexpr double kZ = 4.0;                // every statistical comparison
constexpr double kOracleTol = 1e-6;       // quadrature vs hard-rod value
constexpr double kKsAlpha = 1e-3;
constexpr int kRandomOrders = 20;
constexpr double kMergeRelTol = 1e-12;

// Cases expected to fail under the surface measure; see README.
const std::vector<std::string> kKnownRed = {"coxeter_d(2) d=1"};

int unexpected = 0;

void detail(const std::string& s) { std::printf("    %s\n", s.c_str()); }

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

void report(int id, const std::string& title, bool ok, double seconds, const std::string& note = "") {
  std::printf("criterion %d: %s  %s (%.1f s)%s%s\n", id, ok ? "PASS" : "FAIL", title.c_str(), seconds,
              note.empty() ? "" : "  ", note.c_str());
  std::fflush(stdout);
}

template <class F>
void criterion(int id, const std::string& title, F body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string note;
  bool ok = false;
  bool known = false;
  try {
    ok = body(note, known);
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
    ok = false;
    known = false;
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!ok && !known) ++unexpected;
  report(id, title, ok, s, note);
}

RunOptions opts(std::uint64_t seed, std::uint64_t n = kSamples, int workers = 1) {
  RunOptions o;
  o.n_samples = n;
  o.seed = seed;
  o.workers = workers;
  return o;
}

double z_vs(const MCEstimate& e, double exact) { return z_score(e, MCEstimate::exact(exact)); }

long long factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

bool identical(const MCEstimate& a, const MCEstimate& b) {
  return a.mean == b.mean && a.std_error == b.std_error && a.n_samples == b.n_samples;
}

// Union-find with parity: the signing is balanced iff no edge closes an
// odd-parity cycle.
bool balanced_signing(int n, const std::vector<std::pair<int, int>>& edges, std::uint64_t minus_mask) {
  int parent[8];
  int parity[8];
  for (int v = 0; v < n; ++v) parent[v] = v, parity[v] = 0;
  auto find = [&](int v, int& p) {
    p = 0;
    while (parent[v] != v) p ^= parity[v], v = parent[v];
    return v;
  };
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const int s = (minus_mask >> k) & 1;
    int pa = 0;
    int pb = 0;
    const int ra = find(edges[k].first, pa);
    const int rb = find(edges[k].second, pb);
    if (ra == rb) {
      if ((pa ^ pb) != s) return false;
    } else {
      parent[ra] = rb;
      parity[ra] = pa ^ pb ^ s;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::printf("acceptance: %llu samples per Monte Carlo side, |z| < %.0f\n",
              static_cast<unsigned long long>(kSamples), kZ);

  criterion(1, "exact combinatorics: braid chi(0) and safe-base counts", [](std::string& note, bool&) {
    bool ok = true;
    for (int m = 2; m <= 6; ++m) {
      const long long chi = MatroidView(Arrangement::braid(m)).chi_at_zero();
      const long long want = ((m - 1) % 2 == 0 ? 1 : -1) * factorial(m - 1);
      detail("braid(" + std::to_string(m) + ") chi(0) = " + std::to_string(chi) + ", expected " + std::to_string(want));
      ok = ok && chi == want;
    }
    int checked = 0;
    for (const Arrangement& arr : fixtures::small_arrangements()) {
      const MatroidView mv(arr);
      const long long chi = mv.chi_at_zero();
      const long long target = (mv.rank() % 2 == 0) ? chi : -chi;
      for (int k = 0; k < kRandomOrders; ++k) {
        const long long safe =
            mv.safe_base_count(mv.ground_set(), LinearOrder::random(mv.size(), 1000 + static_cast<std::uint64_t>(k)));
        if (safe != target) {
          ok = false;
          detail("mismatch on " + arr.name() + " order " + std::to_string(k));
        }
        ++checked;
      }
    }
    note = std::to_string(checked) + " (arrangement, order) pairs";
    return ok;
  });

  criterion(2, "planar invariance under radii changes", [](std::string& note, bool&) {
    struct Case {
      Arrangement arr;
      std::vector<std::vector<double>> radii;
    };
    const std::vector<Case> cases = {
        {Arrangement::braid(3), {{1, 1, 1}, {1, 2, 5}, {0.5, 1.5, 3}}},
        {Arrangement::coxeter_b(2), {{1, 1, 1, 1}, {1, 2, 1, 3}, {2, 0.5, 1.5, 1}}},
        {Arrangement::coxeter_d(2), {{1, 1}, {1, 3}, {0.5, 2}}},
    };
    bool ok = true;
    double worst = 0.0;
    for (std::size_t c = 0; c < cases.size(); ++c) {
      const InvarianceReport r = planar_invariance_check(MatroidView(cases[c].arr), cases[c].radii, opts(20 + c));
      for (std::size_t k = 0; k < r.estimates.size(); ++k) {
        worst = std::max(worst, std::abs(r.z_expected[k]));
        detail(cases[c].arr.name() + " radii set " + std::to_string(k) +
               fmt(": %.5f +- %.5f, expected %.5f, z = %.2f", r.estimates[k].mean, r.estimates[k].std_error,
                   r.expected, r.z_expected[k]));
      }
      for (const auto& p : r.pairs) worst = std::max(worst, std::abs(p.z));
      ok = ok && r.pass;
    }
    note = fmt("max |z| = %.2f", worst);
    return ok;
  });

  criterion(3, "dimensional reduction", [](std::string& note, bool& known) {
    struct Case {
      Arrangement arr;
      int d;
    };
    const std::vector<Case> cases = {{Arrangement::braid(2), 1},     {Arrangement::braid(3), 0},
                                     {Arrangement::braid(3), 1},     {Arrangement::coxeter_d(2), 0},
                                     {Arrangement::coxeter_d(2), 1}, {Arrangement::coxeter_b(2), 0}};
    bool all = true;
    bool only_known = true;
    std::string failed;
    for (std::size_t c = 0; c < cases.size(); ++c) {
      DRReport r = check_dr(MatroidView(cases[c].arr), cases[c].d, opts(30 + c));
      const std::string tag = cases[c].arr.name() + " d=" + std::to_string(cases[c].d);
      detail(tag + fmt(": lhs %.5f +- %.5f, rhs %.5f +- %.5f", r.lhs.mean, r.lhs.std_error, r.rhs.mean,
                       r.rhs.std_error) +
             fmt(", z = %.2f", r.z_score) + (r.pass ? "" : "  FAIL"));
      if (r.rhs_config_measure)
        detail(fmt("  configuration-measure polymer side %.5f +- %.5f, z = %.2f", r.rhs_config_measure->mean,
                   r.rhs_config_measure->std_error, r.z_config_measure));
      if (cases[c].arr.name() == "braid(2)" && cases[c].d == 1) {
        const bool closed = std::abs(r.lhs.mean - 4 * pi) < 1e-9 && std::abs(r.rhs.mean - 4 * pi) < 1e-9;
        detail(std::string("  closed form 4 pi on both sides: ") + (closed ? "yes" : "no"));
        r.pass &= closed;
      }
      if (r.pass) continue;
      all = false;
      failed += (failed.empty() ? "" : ", ") + tag;
      bool listed = false;
      for (const auto& k : kKnownRed) listed = listed || k == tag;
      // A known failure counts as expected only if the configuration-measure
      // side still agrees, i.e. the gap is exactly the determinant factor.
      const bool explained =
          listed && r.rhs_config_measure && std::abs(r.z_config_measure) < kZ && !r.unimodular;
      only_known = only_known && explained;
    }
    if (!all) {
      known = only_known;
      note = (only_known ? "known: " : "unexpected: ") + failed +
             (only_known ? " fails by the |det| factor of a non-unimodular arrangement" : "");
    }
    return all;
  });

  criterion(4, "hard-rod cross-check, braid(3) at d=1", [](std::string& note, bool&) {
    const double quad = oracle::tonks_three_by_quadrature();
    const bool oracle_ok = std::abs(quad - static_cast<double>(tonks_coefficient(3))) < kOracleTol;
    detail(fmt("quadrature oracle %.9f, hard-rod value %.0f", quad, static_cast<double>(tonks_coefficient(3))));
    const MCEstimate e = pressure_coefficient(MatroidView(Arrangement::braid(3)), 1, opts(40));
    const double z = z_vs(e, quad);
    detail(fmt("pressure coefficient %.5f +- %.5f, z = %.2f", e.mean, e.std_error, z));
    note = fmt("z = %.2f", z);
    return oracle_ok && std::abs(z) < kZ;
  });

  criterion(5, "Archimedes projection uniformity", [](std::string& note, bool&) {
    bool ok = true;
    for (int D = 3; D <= 5; ++D) {
      const ArchimedesTest t = archimedes_uniformity_test(D, kSamples, 50 + static_cast<std::uint64_t>(D), kKsAlpha);
      detail(fmt("D=%.0f: KS radial %.6f, axis %.6f, critical %.6f", D, t.ks_radial, t.ks_axis, t.critical));
      ok = ok && t.pass;
    }
    note = fmt("alpha = %g", kKsAlpha);
    return ok;
  });

  criterion(6, "projection laws", [](std::string& note, bool&) {
    const MatroidView b2(Arrangement::braid(2));
    const ProjectionReport p = project_expectation(b2, 1, ProjectionFn::norm_sq, opts(60));
    const double want = 4 * pi / 3;
    const double zp = z_vs(p.polymer, want);
    const double zm = z_vs(p.mmc, want);
    const double zpm = z_score(p.polymer, p.mmc);
    detail(fmt("braid(2) g=norm_sq: polymer %.5f (z %.2f), mayer %.5f (z %.2f)", p.polymer.mean, zp, p.mmc.mean, zm));
    bool ok = std::abs(zp) < kZ && std::abs(zm) < kZ && std::abs(zpm) < kZ;
    double worst = std::max({std::abs(zp), std::abs(zm), std::abs(zpm)});
    const MatroidView b3(Arrangement::braid(3));
    for (ProjectionFn g : {ProjectionFn::const1, ProjectionFn::norm_sq}) {
      RunOptions o = opts(61);
      const ProjectionReport chi_path = project_expectation(b3, 1, g, o);
      o.stream_base = 2 * kSideStride;
      const MCEstimate safe = safe_projection_expectation(b3, 1, g, LinearOrder::identity(b3.size()), o);
      const double z = z_score(safe, chi_path.mmc);
      detail("braid(3) g=" + to_string(g) +
             fmt(": safe-base path %.5f +- %.5f, chi path %.5f +- %.5f", safe.mean, safe.std_error,
                 chi_path.mmc.mean, chi_path.mmc.std_error) +
             fmt(", z = %.2f", z));
      ok = ok && std::abs(z) < kZ;
      worst = std::max(worst, std::abs(z));
    }
    note = fmt("max |z| = %.2f", worst);
    return ok;
  });

  criterion(7, "signed graphs", [](std::string& note, bool&) {
    bool ok = true;
    long long graphs = 0;
    for (int n = 1; n <= 6; ++n) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      const std::uint64_t end = std::uint64_t{1} << pairs.size();
      for (std::uint64_t mask = 0; mask < end; ++mask) {
        SimpleGraph g{n, {}};
        for (std::size_t k = 0; k < pairs.size(); ++k)
          if ((mask >> k) & 1) g.edges.push_back(pairs[k]);
        std::vector<oracle::Edge> es;
        for (auto [i, j] : g.edges) es.push_back({i, j, 1});
        std::vector<int> verts(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) verts[static_cast<std::size_t>(v)] = v;
        if (!oracle::connected(n, es, (std::uint64_t{1} << es.size()) - 1, verts)) continue;
        long long count = 0;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.edges.size()); ++s)
          if (balanced_signing(n, g.edges, s)) ++count;
        const long long lifted = balanced_liftings(g);
        ok = ok && count == lifted && lifted == (1LL << (n - 1));
        ++graphs;
      }
    }
    detail(std::to_string(graphs) + " connected simple graphs on n <= 6, balanced signings counted exhaustively");
    long long subsets = 0;
    for (int n = 2; n <= 4; ++n) {
      const MatroidView mv(Arrangement::coxeter_d(n));
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << mv.size()); ++m) {
        const GroundSubset s(m);
        const SignedGraph g = signed_graph_of(n, s);
        const bool indep = mv.rank_of(s) == s.size();
        ok = ok && is_Dn_independent(g) == indep && is_Dn_base(g) == mv.is_base(s) &&
             signed_graph_rank(g) == mv.rank_of(s);
        ++subsets;
      }
    }
    detail(std::to_string(subsets) + " coxeter_d subsets, n <= 4, against exact rank");
    for (int n = 1; n <= 5; ++n) {
      const BalancedWeightReport r = balanced_weight_check(n);
      ok = ok && r.pass;
      detail("balanced weight n=" + std::to_string(n) + (r.pass ? ": exact" : ": MISMATCH"));
    }
    note = std::to_string(graphs) + " graphs, " + std::to_string(subsets) + " subsets";
    return ok;
  });

  criterion(8, "Archimedean spherical arrays, braid(2) at d=1", [](std::string& note, bool&) {
    const MatroidView b2(Arrangement::braid(2));
    const double L = 1.0;
    bool ok = true;
    double worst = 0.0;
    const std::vector<std::pair<std::vector<AsaShape>, double>> cases = {
        {{AsaShape::cylinder(3, L)}, 2 * pi * L},
        {{AsaShape::capped_cylinder(3, L)}, 2 * pi * (L + 2)},
    };
    for (std::size_t c = 0; c < cases.size(); ++c) {
      const DRReport r = check_asa_dr(b2, cases[c].first, 1, opts(80 + c));
      const double zl = z_vs(r.lhs, cases[c].second);
      const double zr = z_vs(r.rhs, cases[c].second);
      detail(cases[c].first.front().name() + fmt(": lhs %.5f, rhs %.5f, closed form %.5f, z = %.2f", r.lhs.mean,
                                                 r.rhs.mean, cases[c].second, r.z_score));
      ok = ok && r.pass && std::abs(zl) < kZ && std::abs(zr) < kZ;
      worst = std::max({worst, std::abs(r.z_score), std::abs(zl), std::abs(zr)});
    }
    note = fmt("max |z| = %.2f", worst);
    return ok;
  });

  criterion(9, "determinism across worker counts and merge associativity", [](std::string& note, bool&) {
    bool ok = true;
    const std::vector<std::pair<std::string, std::function<MCEstimate(int)>>> runs = {
        {"pressure braid(3) d=1",
         [](int w) { return pressure_coefficient(MatroidView(Arrangement::braid(3)), 1, opts(90, 200000, w)); }},
        {"polymer volume coxeter_b(2) D=3",
         [](int w) { return volume_mc(MatroidView(Arrangement::coxeter_b(2)), 3, {}, opts(91, 200000, w)); }},
        {"dr-check braid(3) d=1 rhs",
         [](int w) { return check_dr(MatroidView(Arrangement::braid(3)), 1, opts(92, 200000, w)).rhs; }},
    };
    for (const auto& [name, f] : runs) {
      const MCEstimate one = f(1);
      bool same = true;
      for (int w : {4, 8}) same = same && identical(one, f(w));
      detail(name + (same ? ": bit-identical for 1, 4, 8 workers" : ": DIFFERS"));
      ok = ok && same;
    }
    std::mt19937_64 gen(99);
    std::normal_distribution<double> nd;
    int trials = 0;
    for (; trials < 200; ++trials) {
      MCEstimate part[3];
      for (auto& p : part) {
        Accumulator acc;
        const int n = 2 + static_cast<int>(gen() % 500);
        for (int k = 0; k < n; ++k) acc.add(nd(gen) * 3 + 1);
        p = acc.estimate(0, 1);
      }
      const MCEstimate l = part[0].merge(part[1]).merge(part[2]);
      const MCEstimate r = part[0].merge(part[1].merge(part[2]));
      const bool assoc = l.n_samples == r.n_samples &&
                         std::abs(l.mean - r.mean) <= kMergeRelTol * std::max(1.0, std::abs(l.mean)) &&
                         std::abs(l.std_error - r.std_error) <= kMergeRelTol * std::max(1.0, l.std_error);
      if (!assoc) {
        ok = false;
        detail("merge not associative at trial " + std::to_string(trials));
      }
    }
    note = std::to_string(trials) + " merge triples";
    return ok;
  });

  std::printf("acceptance: %d unexpected failure(s)\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
