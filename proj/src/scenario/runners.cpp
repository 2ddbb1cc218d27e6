// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "ergochain/disorder.hpp"
#include "ergochain/ergotropy.hpp"
#include "ergochain/parallel.hpp"
#include "ergochain/scenario.hpp"
#include "ergochain/work_stats.hpp"

namespace ergochain::scenario {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double theta_for_ergotropy(double erg_in, double b) {
  const double s = std::clamp(erg_in / (2.0 * b), 0.0, 1.0);
  return 2.0 * std::asin(std::sqrt(s));
}

// Pairs every (alpha, N) point with its position so results land in input order.
struct Point {
  double alpha;
  int n;
};

std::vector<Point> points(const ScenarioConfig& cfg) {
  std::vector<Point> out;
  for (double a : cfg.alpha)
    for (int n : cfg.n) out.push_back({a, n});
  return out;
}

Cell theta_cell(const InitialSiteState& s) {
  if (const auto* p = std::get_if<PureSite>(&s)) return p->theta;
  return {};
}

Cell q_cell(const InitialSiteState& s) {
  if (const auto* m = std::get_if<MixedSite>(&s)) return m->q;
  return {};
}

// Evaluates `fn(point) -> rows` across points on the pool and concatenates in order.
template <class Fn>
Table gather(Table table, const std::vector<Point>& pts, unsigned threads, Fn&& fn) {
  std::vector<std::vector<std::vector<Cell>>> parts(pts.size());
  parallel_for(pts.size(), threads, [&](std::size_t i) {
    Table local;
    local.columns = table.columns;
    fn(pts[i], local);
    parts[i] = std::move(local.rows);
  });
  for (auto& p : parts)
    for (auto& row : p) table.rows.push_back(std::move(row));
  return table;
}

}  // namespace

std::vector<LabelledState> initial_states(const ScenarioConfig& cfg) {
  std::vector<LabelledState> out;
  auto add_theta = [&](double theta) {
    out.push_back({"coh", PureSite{theta, cfg.phi}});
    if (cfg.matched) out.push_back({"mix", MixedSite{match_mixed_to_pure(theta)}});
  };
  for (double e : cfg.erg_in) add_theta(theta_for_ergotropy(e, cfg.b));
  for (double t : cfg.theta) add_theta(t);
  for (double q : cfg.q) out.push_back({"mix", MixedSite{q}});
  return out;
}

Table run_transport_sweep(const ScenarioConfig& cfg, unsigned threads) {
  Table t;
  t.columns = {"N", "alpha", "encoding", "theta", "q", "erg_in", "erg_max", "eta", "T", "erg_window", "t_window"};
  const auto states = initial_states(cfg);
  return gather(std::move(t), points(cfg), threads, [&](const Point& p, Table& out) {
    const ChainConfig cc = cfg.chain(p.n, p.alpha, 0.0);
    const Chain chain = Chain::build(cc);
    for (const auto& s : states) {
      const ErgotropyRecord r = erg_at_reflection(chain, s.state);
      Cell window_erg, window_t;
      if (cfg.time_window) {
        const ErgotropyRecord w = erg_max_window(cc, s.state, *cfg.time_window, cfg.time_step);
        window_erg = w.erg_max;
        window_t = w.time;
      }
      out.add({{"N", static_cast<long long>(p.n)},
               {"alpha", p.alpha},
               {"encoding", s.encoding},
               {"theta", theta_cell(s.state)},
               {"q", q_cell(s.state)},
               {"erg_in", r.erg_in},
               {"erg_max", r.erg_max},
               {"eta", r.eta},
               {"T", r.time},
               {"erg_window", window_erg},
               {"t_window", window_t}});
    }
  });
}

Table run_theta_sweep(const ScenarioConfig& cfg, unsigned threads) {
  Table t;
  t.columns = {"row_type", "N", "alpha", "encoding", "theta", "q", "erg_in", "erg_max"};
  const auto states = initial_states(cfg);
  return gather(std::move(t), points(cfg), threads, [&](const Point& p, Table& out) {
    const Chain chain = Chain::build(cfg.chain(p.n, p.alpha, 0.0));
    struct Best {
      double erg_in = 0.0;
      double erg_max = -1.0;
      Cell theta, q;
    };
    std::map<std::string, Best> best;
    std::vector<std::string> order;
    for (const auto& s : states) {
      const ErgotropyRecord r = erg_at_reflection(chain, s.state);
      out.add({{"row_type", std::string("point")},
               {"N", static_cast<long long>(p.n)},
               {"alpha", p.alpha},
               {"encoding", s.encoding},
               {"theta", theta_cell(s.state)},
               {"q", q_cell(s.state)},
               {"erg_in", r.erg_in},
               {"erg_max", r.erg_max}});
      if (!best.contains(s.encoding)) order.push_back(s.encoding);
      Best& b = best[s.encoding];
      if (r.erg_max > b.erg_max || (r.erg_max == b.erg_max && r.erg_in < b.erg_in))
        b = {r.erg_in, r.erg_max, theta_cell(s.state), q_cell(s.state)};
    }
    for (const auto& enc : order) {
      const Best& b = best[enc];
      out.add({{"row_type", std::string("argmax")},
               {"N", static_cast<long long>(p.n)},
               {"alpha", p.alpha},
               {"encoding", enc},
               {"theta", b.theta},
               {"q", b.q},
               {"erg_in", b.erg_in},
               {"erg_max", b.erg_max}});
    }
  });
}

Table run_disorder(const ScenarioConfig& cfg, unsigned threads) {
  Table t;
  t.columns = {"row_type", "N",     "delta",    "encoding", "theta", "q",           "erg_in",
               "mean",     "stddev", "count",   "failures", "gamma", "gamma_stderr"};
  std::vector<double> thetas;
  for (double e : cfg.erg_in) thetas.push_back(theta_for_ergotropy(e, cfg.b));
  for (double th : cfg.theta) thetas.push_back(th);
  // Realizations are parallel inside each point; points run in input order.
  for (int n : cfg.n) {
    for (double delta : cfg.delta) {
      const ChainConfig cc = cfg.chain(n, 1.0, delta);
      for (double theta : thetas) {
        const PureSite coh{theta, cfg.phi};
        const double erg_in = initial_ergotropy(coh, cfg.b);
        auto stats_row = [&](const std::string& enc, const EnsembleStats& s, Cell th, Cell q) {
          t.add({{"row_type", std::string("stats")},
                 {"N", static_cast<long long>(n)},
                 {"delta", delta},
                 {"encoding", enc},
                 {"theta", th},
                 {"q", q},
                 {"erg_in", erg_in},
                 {"mean", s.mean},
                 {"stddev", s.stddev},
                 {"count", static_cast<long long>(s.count)},
                 {"failures", static_cast<long long>(s.failures)}});
        };
        if (!cfg.matched) {
          stats_row("coh", ensemble_erg(cc, coh, cfg.realizations, threads), theta, {});
          continue;
        }
        const MatchedEnsemble m = matched_ensemble(cc, theta, cfg.realizations, threads);
        stats_row("coh", m.coherent, theta, {});
        stats_row("mix", m.mixed, {}, match_mixed_to_pure(theta));
        t.add({{"row_type", std::string("gamma")},
               {"N", static_cast<long long>(n)},
               {"delta", delta},
               {"theta", theta},
               {"q", match_mixed_to_pure(theta)},
               {"erg_in", erg_in},
               {"gamma", m.gamma},
               {"gamma_stderr", m.gamma_stderr}});
      }
    }
  }
  return t;
}

Table run_workdist(const ScenarioConfig& cfg, unsigned threads) {
  Table t;
  t.columns = {"row_type", "alpha", "N", "initial", "W", "p", "density", "bin_lo", "bin_hi", "mean", "variance"};
  const auto states = initial_states(cfg);
  const double span = 2.2 * cfg.j;
  return gather(std::move(t), points(cfg), threads, [&](const Point& p, Table& out) {
    const ChainConfig cc = cfg.chain(p.n, p.alpha, 0.0);
    const Chain chain = Chain::build(cc);
    for (const auto& s : states) {
      const WorkDistribution d = tpm_distribution(chain.spectrum, cc, s.state);
      const std::string label = describe(s.state);
      for (const auto& a : d.atoms)
        out.add({{"row_type", std::string("atom")},
                 {"alpha", p.alpha},
                 {"N", static_cast<long long>(p.n)},
                 {"initial", label},
                 {"W", a.w},
                 {"p", a.p}});
      const WorkMoments m = moments(d, 2);
      out.add({{"row_type", std::string("moments")},
               {"alpha", p.alpha},
               {"N", static_cast<long long>(p.n)},
               {"initial", label},
               {"mean", m.mean},
               {"variance", m.variance}});
      if (p.alpha > 0.0 && p.alpha < 1.0) {
        for (const auto& b : histogram(d, cfg.bins, -span, span))
          out.add({{"row_type", std::string("histogram")},
                   {"alpha", p.alpha},
                   {"N", static_cast<long long>(p.n)},
                   {"initial", label},
                   {"W", b.center},
                   {"density", b.density},
                   {"bin_lo", b.lo},
                   {"bin_hi", b.hi}});
      }
    }
    if (cfg.densities && (p.alpha == 0.0 || p.alpha == 1.0)) {
      const std::string label = p.alpha == 1.0 ? "gaussian" : "semicircle";
      for (int i = 0; i < cfg.density_points; ++i) {
        const double w = -span + 2.0 * span * i / (cfg.density_points - 1);
        const double rho = p.alpha == 1.0 ? gaussian_density(w, cc) : semicircle_density(w, cfg.j);
        out.add({{"row_type", std::string("density")},
                 {"alpha", p.alpha},
                 {"N", static_cast<long long>(p.n)},
                 {"initial", label},
                 {"W", w},
                 {"density", rho}});
      }
    }
  });
}

Table run_bessel_compare(const ScenarioConfig& cfg, unsigned threads) {
  Table t;
  t.columns = {"N", "T", "f_discrete", "f_bessel", "abs_diff"};
  std::vector<Point> pts;
  for (int n : cfg.n) pts.push_back({0.0, n});
  return gather(std::move(t), pts, threads, [&](const Point& p, Table& out) {
    const ChainConfig cc = cfg.chain(p.n, 0.0, 0.0);
    const double time = reflection_time(0.0, p.n) / cfg.j;
    const Chain chain = Chain::build(cc);
    const double fd = std::abs(amplitude_spectral(chain.spectrum, p.n, time).value);
    const double fb = std::abs(amplitude_bessel_limit(cc, p.n, time).value);
    out.add({{"N", static_cast<long long>(p.n)},
             {"T", time},
             {"f_discrete", fd},
             {"f_bessel", fb},
             {"abs_diff", std::abs(fd - fb)}});
  });
}

Table run(const ScenarioConfig& cfg, unsigned threads) {
  switch (cfg.kind) {
    case Kind::TransportSweep: return run_transport_sweep(cfg, threads);
    case Kind::ThetaSweep: return run_theta_sweep(cfg, threads);
    case Kind::Disorder: return run_disorder(cfg, threads);
    case Kind::WorkDist: return run_workdist(cfg, threads);
    case Kind::BesselCompare: return run_bessel_compare(cfg, threads);
  }
  fail(ErrorKind::Misuse, "unknown scenario kind");
}

}  // namespace ergochain::scenario
