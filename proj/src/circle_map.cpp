#include "utq/circle_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "utq/rng.hpp"

namespace utq {

namespace {

double wrap_to_2pi(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  return y;
}

// Fritsch-Carlson slopes for monotone cubic interpolation on uniform knots.
// Data must be strictly increasing; secants are then positive and the
// weighted harmonic mean keeps the interpolant monotone.
std::vector<double> pchip_slopes_uniform(const std::vector<double>& y, double h,
                                         bool periodic_increment) {
  const int n = static_cast<int>(y.size());
  std::vector<double> d(n, 0.0);
  std::vector<double> sec(n - 1);
  for (int i = 0; i + 1 < n; ++i) sec[i] = (y[i + 1] - y[i]) / h;
  auto harmonic = [](double a, double b) {
    if (a <= 0.0 || b <= 0.0) return 0.0;
    return 2.0 * a * b / (a + b);
  };
  for (int i = 1; i + 1 < n; ++i) d[i] = harmonic(sec[i - 1], sec[i]);
  if (periodic_increment) {
    // y - theta is periodic, so the secants wrap around
    d[0] = harmonic(sec[n - 2], sec[0]);
    d[n - 1] = d[0];
  } else {
    d[0] = sec[0];
    d[n - 1] = sec[n - 2];
  }
  return d;
}

double cubic_hermite(double y0, double y1, double d0, double d1, double h, double u) {
  // u in [0,1] across the interval
  const double u2 = u * u, u3 = u2 * u;
  return y0 * (2 * u3 - 3 * u2 + 1) + h * d0 * (u3 - 2 * u2 + u) +
         y1 * (-2 * u3 + 3 * u2) + h * d1 * (u3 - u2);
}

double cubic_hermite_deriv(double y0, double y1, double d0, double d1, double h, double u) {
  const double u2 = u * u;
  return (y0 * (6 * u2 - 6 * u) + h * d0 * (3 * u2 - 4 * u + 1) +
          y1 * (-6 * u2 + 6 * u) + h * d1 * (3 * u2 - 2 * u)) / h;
}

double eval_sampled(const CircleMap::Sampled& s, double theta) {
  const int m = static_cast<int>(s.values.size()) - 1;
  const double h = kTwoPi / m;
  const double turns = std::floor(theta / kTwoPi);
  const double t0 = theta - turns * kTwoPi;
  int idx = static_cast<int>(t0 / h);
  idx = std::clamp(idx, 0, m - 1);
  const double u = (t0 - idx * h) / h;
  return cubic_hermite(s.values[idx], s.values[idx + 1], s.slopes[idx],
                       s.slopes[idx + 1], h, u) + turns * kTwoPi;
}

double eval_zigzag(const CircleMap::Zigzag& zz, double theta) {
  const double turns = std::floor(theta / kTwoPi);
  const double t0 = theta - turns * kTwoPi;
  const auto it = std::upper_bound(zz.knots.begin(), zz.knots.end(), t0);
  const int idx = std::clamp(static_cast<int>(it - zz.knots.begin()) - 1, 0,
                             static_cast<int>(zz.knots.size()) - 2);
  const double slope = (zz.values[idx + 1] - zz.values[idx]) /
                       (zz.knots[idx + 1] - zz.knots[idx]);
  return zz.values[idx] + slope * (t0 - zz.knots[idx]) + turns * kTwoPi;
}

double eval_flow(const CircleMap::Flow& fl, double theta) {
  const double t = fl.t;
  if (t == 0.0) return theta;
  const int steps = std::max(1, static_cast<int>(std::ceil(fl.steps_per_unit * std::abs(t))));
  const double dt = t / steps;
  auto field = [&fl](double x) { return fl.v.evaluate(x).real(); };
  double x = theta;
  for (int i = 0; i < steps; ++i) {
    const double k1 = field(x);
    const double k2 = field(x + 0.5 * dt * k1);
    const double k3 = field(x + 0.5 * dt * k2);
    const double k4 = field(x + dt * k3);
    x += dt * (k1 + 2 * k2 + 2 * k3 + k4) / 6.0;
  }
  return x;
}

double eval_mobius_lift(const CircleMap::Mobius& mb, double theta) {
  // h(e^{i t}) = e^{i angle} e^{i t} u / conj(u), u = 1 - a e^{-i t};
  // |a| < 1 keeps Re(u) > 0, so the principal argument is the continuous one.
  const cplx u = 1.0 - mb.a * std::polar(1.0, -theta);
  return mb.angle + theta + 2.0 * std::arg(u);
}

}  // namespace

cplx cross_ratio(const Quadruple& q) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (std::abs(q.z[i] - q.z[j]) < 1e-14) {
        throw std::invalid_argument("cross_ratio: coincident points");
      }
    }
  }
  const cplx first = (q.z[3] - q.z[0]) / (q.z[3] - q.z[1]);
  const cplx second = (q.z[2] - q.z[0]) / (q.z[2] - q.z[1]);
  return first / second;
}

CircleMap CircleMap::make_mobius(cplx a, double angle) {
  if (std::abs(a) >= 1.0) {
    throw std::invalid_argument("make_mobius: parameter must satisfy |a| < 1");
  }
  CircleMap h(Mobius{a, angle});
  h.dilatation_hint = 1.0;
  return h;
}

CircleMap CircleMap::make_flow(FourierLoop v, double t, int steps_per_unit) {
  if (!v.is_real()) throw std::invalid_argument("make_flow: field must be real");
  if (steps_per_unit < 1) throw std::invalid_argument("make_flow: steps_per_unit < 1");
  return CircleMap(Flow{std::move(v), t, steps_per_unit});
}

CircleMap CircleMap::make_zigzag(double s, std::vector<double> breakpoints) {
  if (!(s > 0.0)) throw std::invalid_argument("make_zigzag: slope must be positive");
  if (breakpoints.empty()) {
    for (int i = 1; i < 8; ++i) breakpoints.push_back(kTwoPi * i / 8.0);
  }
  std::vector<double> knots{0.0};
  for (double b : breakpoints) knots.push_back(b);
  knots.push_back(kTwoPi);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    if (!(knots[i] < knots[i + 1])) {
      throw std::invalid_argument("make_zigzag: breakpoints must increase in (0, 2 pi)");
    }
  }
  std::vector<double> values{0.0};
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double slope = (i % 2 == 0) ? s : 1.0 / s;
    values.push_back(values.back() + slope * (knots[i + 1] - knots[i]));
  }
  const double scale = kTwoPi / values.back();
  for (auto& v : values) v *= scale;
  return CircleMap(Zigzag{s, std::move(knots), std::move(values)});
}

CircleMap CircleMap::make_sampled(const std::vector<double>& lift_values) {
  const int m = static_cast<int>(lift_values.size());
  if (m < 4) throw std::invalid_argument("make_sampled: need at least 4 samples");
  Sampled s;
  s.values = lift_values;
  s.values.push_back(lift_values[0] + kTwoPi);
  for (int j = 0; j + 1 <= m; ++j) {
    if (!(s.values[j] < s.values[j + 1])) {
      throw std::invalid_argument("make_sampled: lift values must increase strictly");
    }
  }
  s.slopes = pchip_slopes_uniform(s.values, kTwoPi / m, /*periodic_increment=*/true);
  return CircleMap(std::move(s));
}

double CircleMap::lift(double theta) const {
  return std::visit(
      [theta](const auto& rep) -> double {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, Mobius>) {
          return eval_mobius_lift(rep, theta);
        } else if constexpr (std::is_same_v<T, Flow>) {
          return eval_flow(rep, theta);
        } else if constexpr (std::is_same_v<T, Zigzag>) {
          return eval_zigzag(rep, theta);
        } else if constexpr (std::is_same_v<T, Sampled>) {
          return eval_sampled(rep, theta);
        } else {
          double x = theta;
          for (auto it = rep.chain.rbegin(); it != rep.chain.rend(); ++it) x = it->lift(x);
          return x;
        }
      },
      rep_);
}

double CircleMap::evaluate(double theta) const { return wrap_to_2pi(lift(theta)); }

cplx CircleMap::map_point(cplx z) const {
  if (const auto* mb = std::get_if<Mobius>(&rep_)) {
    return std::polar(1.0, mb->angle) * (z - mb->a) / (1.0 - std::conj(mb->a) * z);
  }
  if (const auto* co = std::get_if<Composed>(&rep_)) {
    cplx w = z;
    for (auto it = co->chain.rbegin(); it != co->chain.rend(); ++it) w = it->map_point(w);
    return w;
  }
  return std::polar(1.0, lift(std::atan2(z.imag(), z.real())));
}

Quadruple CircleMap::map_quadruple(const Quadruple& q) const {
  Quadruple out;
  for (int i = 0; i < 4; ++i) out.z[i] = map_point(q.z[i]);
  return out;
}

std::vector<double> CircleMap::lift_grid(int m) const {
  std::vector<double> out(m);
  for (int j = 0; j < m; ++j) out[j] = lift(kTwoPi * j / m);
  return out;
}

CircleMap CircleMap::inverse(int grid) const {
  const int m = grid;
  if (m < 8) throw std::invalid_argument("inverse: grid too small");
  // dense forward table -> monotone interpolant -> per-knot root solve, so
  // the inverse's knots land exactly on the equispaced target grid
  const int mf = 4 * m;
  std::vector<double> fwd = lift_grid(mf);
  CircleMap fwd_map = make_sampled(fwd);
  const auto& srep = std::get<Sampled>(fwd_map.rep_);

  double gmin = std::numeric_limits<double>::infinity(), gmax = -gmin;
  for (int j = 0; j < mf; ++j) {
    const double g = fwd[j] - kTwoPi * j / mf;  // periodic part of the lift
    gmin = std::min(gmin, g);
    gmax = std::max(gmax, g);
  }

  std::vector<double> inv_values(m);
  for (int j = 0; j < m; ++j) {
    const double y = kTwoPi * j / m;
    double lo = y - gmax - 1.0, hi = y - gmin + 1.0;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      (eval_sampled(srep, mid) < y ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    // Newton polish against the true lift; slope from the interpolant
    const double hstep = kTwoPi / mf;
    for (int it = 0; it < 2; ++it) {
      const double slope =
          (eval_sampled(srep, x + 0.5 * hstep) - eval_sampled(srep, x - 0.5 * hstep)) / hstep;
      if (slope <= 0.0) break;
      x -= (lift(x) - y) / slope;
    }
    inv_values[j] = x;
  }
  return make_sampled(inv_values);
}

CircleMap compose(CircleMap outer, CircleMap inner) {
  std::vector<CircleMap> chain;
  auto append = [&chain](CircleMap&& h) {
    if (auto* co = std::get_if<CircleMap::Composed>(&h.rep_)) {
      for (auto& link : co->chain) chain.push_back(std::move(link));
    } else {
      chain.push_back(std::move(h));
    }
  };
  append(std::move(outer));
  append(std::move(inner));
  return CircleMap(CircleMap::Composed{std::move(chain)});
}

CircleMap normalized(const CircleMap& h) {
  // Fractional-linear map through three points: S(z) sends p1,p2,p3 to 0,1,inf.
  struct FL {
    cplx A, B, C, D;  // z -> (Az + B) / (Cz + D)
  };
  auto through = [](cplx p1, cplx p2, cplx p3) {
    return FL{p2 - p3, -p1 * (p2 - p3), p2 - p1, -p3 * (p2 - p1)};
  };
  const FL S = through(h.map_point({1.0, 0.0}), h.map_point({-1.0, 0.0}),
                       h.map_point({0.0, -1.0}));
  const FL T = through({1.0, 0.0}, {-1.0, 0.0}, {0.0, -1.0});
  // g = T^{-1} o S
  const FL g{T.D * S.A - T.B * S.C, T.D * S.B - T.B * S.D,
             -T.C * S.A + T.A * S.C, -T.C * S.B + T.A * S.D};
  const cplx a = -g.B / g.A;
  if (!(std::abs(a) < 1.0)) {
    throw std::runtime_error("normalized: normalizing map is not a disc automorphism");
  }
  // unit factor from any circle point away from the pole
  cplx z0{0.0, 1.0};
  const cplx w = (g.A * z0 + g.B) / (g.C * z0 + g.D);
  const cplx phase = w * (1.0 - std::conj(a) * z0) / (z0 - a);
  const double angle = std::arg(phase);
  return compose(CircleMap::make_mobius(a, angle), h);
}

double dilatation_from_derivative(const CircleMap& h, int grid) {
  const std::vector<double> lifts = h.lift_grid(grid);
  const double step = kTwoPi / grid;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int j = 0; j < grid; ++j) {
    const double next = (j + 1 < grid) ? lifts[j + 1] : lifts[0] + kTwoPi;
    const double slope = (next - lifts[j]) / step;
    lo = std::min(lo, slope);
    hi = std::max(hi, slope);
  }
  if (!(lo > 0.0)) throw std::runtime_error("dilatation_from_derivative: lift not increasing");
  return hi / lo;
}

BaResult ba_test(const CircleMap& h, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("ba_test: samples must be >= 1");
  Rng rng(seed);
  BaResult result;
  result.worst = Quadruple{{cplx{1, 0}, cplx{0, 1}, cplx{-1, 0}, cplx{0, -1}}};
  for (int s = 0; s < samples; ++s) {
    const cplx w = std::polar(1.0, rng.uniform(0.0, kTwoPi));
    Quadruple q{{w, cplx{-w.imag(), w.real()}, -w, cplx{w.imag(), -w.real()}}};
    const CircleMap g = CircleMap::make_mobius(rng.disc(0.8), rng.uniform(0.0, kTwoPi));
    q = g.map_quadruple(q);
    const cplx before = cross_ratio(q);
    const cplx after = cross_ratio(h.map_quadruple(q));
    const double dev = 2.0 * std::abs(after - before);
    if (dev > result.epsilon_hat) {
      result.epsilon_hat = dev;
      result.worst = q;
    }
  }
  return result;
}

}  // namespace utq
