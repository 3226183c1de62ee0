#include "bellgauge/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bellgauge/bell.hpp"
#include "bellgauge/entanglement.hpp"
#include "bellgauge/fixtures.hpp"

namespace bellgauge {

namespace {

constexpr double kParamSumTol = 1e-12;
constexpr double kCouplingTol = 1e-12;
constexpr int kSearchEvalCap = 100000;
constexpr double kEntropyPenaltyWeight = 1e3;
// Hits must clear the target region with a little headroom so that records
// stay strictly inside it after the analyze() re-check.
constexpr double kEntropyMargin = 1e-6;
constexpr double kViolationMargin = 0.01;

double axis_point(const AxisRange& r, int i) {
  if (r.steps <= 1) return r.lo;
  return r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(r.steps - 1);
}

// Closed forms for p11 = 0 X-states, used inside the search loop where the
// full spectral route would be wasted work. Re-checked via analyze() on
// every accepted candidate.
struct SearchPoint {
  double p22, p44, c;

  double p33() const { return 1.0 - p22 - p44; }
  double entropy() const {
    const double q = p22 * p22 + p33() * p33() + p44 * p44 + 2.0 * c * c;
    return 1.0 - q;
  }
  double chsh() const {
    const double t33 = 2.0 * p44 - 1.0;
    std::array<double, 3> u{4.0 * c * c, 4.0 * c * c, t33 * t33};
    std::sort(u.begin(), u.end(), std::greater<double>());
    return 2.0 * std::sqrt(u[0] + u[1]);
  }
  bool feasible() const {
    return p22 >= 0.0 && p44 >= 0.0 && p33() >= 0.0 && c >= 0.0 && c * c <= p22 * p33();
  }
  XStateParams params() const { return XStateParams{0.0, p22, p33(), p44, c}; }
};

SearchPoint clamp_feasible(SearchPoint p) {
  p.p22 = std::clamp(p.p22, 0.0, 1.0);
  p.p44 = std::clamp(p.p44, 0.0, 1.0 - p.p22);
  const double cap = std::sqrt(std::max(p.p22 * p.p33(), 0.0));
  p.c = std::clamp(p.c, 0.0, cap);
  return p;
}

}  // namespace

double RandomStream::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * 3.14159265358979323846 * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex RandomStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im);
}

bool xstate_feasible(const XStateParams& p) {
  if (p.p11 < 0.0 || p.p22 < 0.0 || p.p33 < 0.0 || p.p44 < 0.0) return false;
  if (p.c < 0.0) return false;
  if (std::abs(p.p11 + p.p22 + p.p33 + p.p44 - 1.0) > kParamSumTol) return false;
  return p.c * p.c <= p.p22 * p.p33 + kCouplingTol;
}

DensityMatrix make_xstate(const XStateParams& p, TracePolicy policy) {
  if (p.p11 < 0.0 || p.p22 < 0.0 || p.p33 < 0.0 || p.p44 < 0.0)
    throw InfeasibleParamsError("negative population");
  if (p.c < 0.0) throw InfeasibleParamsError("negative coupling");
  if (p.c * p.c > p.p22 * p.p33 + kCouplingTol)
    throw InfeasibleParamsError("c^2 exceeds p22*p33");
  const double sum = p.p11 + p.p22 + p.p33 + p.p44;
  const double sum_tol = policy == TracePolicy::strict ? kParamSumTol : kTraceTolRenormalize;
  if (std::abs(sum - 1.0) > sum_tol) throw InfeasibleParamsError("populations do not sum to 1");

  ComplexMatrix4 m;
  m(0, 0) = p.p11;
  m(1, 1) = p.p22;
  m(2, 2) = p.p33;
  m(3, 3) = p.p44;
  m(1, 2) = p.c;
  m(2, 1) = p.c;
  return validate(m, policy);
}

StateRecord analyze(const DensityMatrix& rho, std::string label) {
  const MixednessReport mix = linear_entropy(rho);
  const CorrelationAnalysis corr = chsh_max(rho);
  const double c = concurrence(rho);
  const double threshold = santos_threshold();
  return StateRecord{std::move(label),
                     std::nullopt,
                     mix.linear_entropy,
                     mix.normalized_linear_entropy,
                     c,
                     corr.chsh_max,
                     mix.linear_entropy >= threshold,
                     corr.violates};
}

std::vector<StateRecord> scan_family(const ScanGrid& grid) {
  if (grid.c_range.steps < 1 || grid.p22_range.steps < 1 || grid.p44_range.steps < 1)
    throw std::invalid_argument("scan grid steps must be >= 1");

  std::vector<StateRecord> records;
  int index = 0;
  for (int ic = 0; ic < grid.c_range.steps; ++ic) {
    const double c = axis_point(grid.c_range, ic);
    for (int ip = 0; ip < grid.p22_range.steps; ++ip) {
      const double p22 = axis_point(grid.p22_range, ip);
      for (int iq = 0; iq < grid.p44_range.steps; ++iq) {
        const double p44 = axis_point(grid.p44_range, iq);
        const XStateParams params{grid.p11, p22, 1.0 - grid.p11 - p22 - p44, p44, c};
        if (!xstate_feasible(params)) continue;
        StateRecord rec = analyze(make_xstate(params), "scan-" + std::to_string(index++));
        rec.params = params;
        records.push_back(std::move(rec));
      }
    }
  }
  if (records.empty()) throw EmptyGridError();
  return records;
}

std::vector<StateRecord> find_counterexamples(double threshold, int count, std::uint64_t seed) {
  if (threshold < 0.0 || threshold > 0.75)
    throw std::invalid_argument("threshold must lie in [0, 0.75]");
  if (count < 1) throw std::invalid_argument("count must be >= 1");

  RandomStream rng(seed);
  std::vector<StateRecord> found;
  std::vector<SearchPoint> accepted;
  int evals = 0;
  bool have_best = false;
  StateRecord best;
  double best_score = -1e300;

  const auto score = [threshold](const SearchPoint& p) {
    return p.chsh() + kEntropyPenaltyWeight * std::min(p.entropy() - threshold, 0.0);
  };
  const auto is_hit = [threshold](const SearchPoint& p) {
    return p.entropy() >= threshold + kEntropyMargin && p.chsh() > 2.0 + kViolationMargin;
  };

  while (static_cast<int>(found.size()) < count && evals < kSearchEvalCap) {
    SearchPoint cur;
    cur.p22 = rng.uniform();
    cur.p44 = rng.uniform() * (1.0 - cur.p22);
    cur.c = rng.uniform() * std::sqrt(std::max(cur.p22 * cur.p33(), 0.0));
    cur = clamp_feasible(cur);
    double cur_score = score(cur);
    ++evals;

    double step = 0.05;
    while (!is_hit(cur) && step > 1e-5 && evals < kSearchEvalCap) {
      bool improved = false;
      for (int axis = 0; axis < 3 && !is_hit(cur); ++axis) {
        for (double sign : {1.0, -1.0}) {
          SearchPoint cand = cur;
          (axis == 0 ? cand.p22 : axis == 1 ? cand.p44 : cand.c) += sign * step;
          cand = clamp_feasible(cand);
          const double cand_score = score(cand);
          ++evals;
          if (cand_score > cur_score) {
            cur = cand;
            cur_score = cand_score;
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }

    // Track the best point seen so SearchExhausted can report it.
    if (!have_best || cur_score > best_score) {
      best = analyze(make_xstate(cur.params()), "best-found");
      best.params = cur.params();
      best_score = cur_score;
      have_best = true;
    }
    if (!is_hit(cur)) continue;

    const auto near = [&cur](const SearchPoint& other) {
      return std::abs(cur.p22 - other.p22) < 1e-6 && std::abs(cur.p44 - other.p44) < 1e-6 &&
             std::abs(cur.c - other.c) < 1e-6;
    };
    if (std::any_of(accepted.begin(), accepted.end(), near)) continue;

    // Never trust the search loop's closed forms: re-derive the record.
    StateRecord rec =
        analyze(make_xstate(cur.params()), "counterexample-" + std::to_string(found.size()));
    rec.params = cur.params();
    if (rec.s12 < threshold || !rec.violates_chsh) continue;
    accepted.push_back(cur);
    found.push_back(std::move(rec));
  }

  if (static_cast<int>(found.size()) < count) {
    if (!have_best) best = analyze(make_xstate(XStateParams{0, 0.25, 0.25, 0.25, 0}), "best-found");
    throw SearchExhaustedError(best);
  }
  return found;
}

double default_family_entropy() {
  static const double value = linear_entropy(rho1()).linear_entropy;
  return value;
}

DensityMatrix one_parameter_family(double t, double target_entropy) {
  if (t < 0.0 || t > 1.0) throw std::invalid_argument("family parameter t must lie in [0, 1]");

  const double c = 0.125 + 0.01 * t;
  const double p22 = 0.549027;  // anchored at rho1 so that t = 0 reproduces it

  // With p33 = 1 - p22 - p44, the linear entropy is strictly increasing in
  // p44 on [0, (1 - p22) / 2], so a sign check brackets the root.
  const auto entropy_at = [c, p22](double p44) {
    const double p33 = 1.0 - p22 - p44;
    return 1.0 - (p22 * p22 + p33 * p33 + p44 * p44 + 2.0 * c * c);
  };
  double lo = 0.0;
  double hi = (1.0 - p22) / 2.0;
  if (entropy_at(lo) > target_entropy || entropy_at(hi) < target_entropy)
    throw NoRootError("target entropy " + std::to_string(target_entropy) +
                      " not attainable at t = " + std::to_string(t));
  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    (entropy_at(mid) < target_entropy ? lo : hi) = mid;
  }
  const double p44 = 0.5 * (lo + hi);
  return make_xstate(XStateParams{0.0, p22, 1.0 - p22 - p44, p44, c}, TracePolicy::strict);
}

FamilyScan scan_one_parameter_family(int points, double target_entropy) {
  if (points < 1) throw std::invalid_argument("family scan needs at least one point");

  FamilyScan scan;
  scan.has_violation = false;
  scan.violating_lo = 0.0;
  scan.violating_hi = 0.0;
  for (int i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    const DensityMatrix rho = one_parameter_family(t, target_entropy);
    StateRecord rec = analyze(rho, "family-" + std::to_string(i));
    const ComplexMatrix4& m = rho.matrix();
    rec.params = XStateParams{m(0, 0).real(), m(1, 1).real(), m(2, 2).real(), m(3, 3).real(),
                              m(1, 2).real()};
    scan.ts.push_back(t);
    scan.records.push_back(std::move(rec));
  }

  // Longest contiguous violating run on the sampled grid.
  int best_len = 0, best_start = -1, run_start = -1, run_len = 0;
  for (int i = 0; i < points; ++i) {
    if (scan.records[static_cast<std::size_t>(i)].violates_chsh) {
      if (run_len == 0) run_start = i;
      if (++run_len > best_len) {
        best_len = run_len;
        best_start = run_start;
      }
    } else {
      run_len = 0;
    }
  }
  if (best_len > 0) {
    scan.has_violation = true;
    scan.violating_lo = scan.ts[static_cast<std::size_t>(best_start)];
    scan.violating_hi = scan.ts[static_cast<std::size_t>(best_start + best_len - 1)];
  }
  return scan;
}

DensityMatrix sample_random_state(RandomStream& rng, int rank) {
  if (rank < 1 || rank > 4) throw std::invalid_argument("rank must be in 1..4");

  std::array<std::array<Complex, 4>, 4> g{};  // 4 x rank, extra columns stay zero
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < rank; ++j)
      g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rng.complex_normal();

  ComplexMatrix4 gg;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < rank; ++k)
        s += g[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
             std::conj(g[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
      gg(i, j) = s;
    }
  const double tr = trace(gg).real();
  return validate((1.0 / tr) * gg, TracePolicy::strict);
}

}  // namespace bellgauge
