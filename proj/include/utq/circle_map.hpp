#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "utq/fourier.hpp"
#include "utq/types.hpp"

namespace utq {

/// Four distinct points of the unit circle in the order they enter the
/// cross ratio.
struct Quadruple {
  std::array<cplx, 4> z;
};

/// rho = (z4-z1)/(z4-z2) : (z3-z1)/(z3-z2).  Throws if two points coincide.
cplx cross_ratio(const Quadruple& q);

/// Orientation-preserving circle homeomorphism with a strictly increasing
/// lift satisfying lift(theta + 2 pi) = lift(theta) + 2 pi.
class CircleMap {
 public:
  struct Mobius {
    cplx a;        // |a| < 1
    double angle;  // post-rotation
  };
  struct Flow {
    FourierLoop v;
    double t;
    int steps_per_unit;
  };
  struct Zigzag {
    double s;
    std::vector<double> knots;   // 0 = x_0 < ... < x_m = 2 pi
    std::vector<double> values;  // normalized lift at the knots
  };
  struct Sampled {
    // lift at theta_j = 2 pi j / M plus the wrap point, with PCHIP slopes
    std::vector<double> values;  // size M + 1, values[M] = values[0] + 2 pi
    std::vector<double> slopes;  // size M + 1
  };
  struct Composed {
    std::vector<CircleMap> chain;  // outer first
  };

  static CircleMap identity() { return make_mobius({0.0, 0.0}, 0.0); }
  static CircleMap rotation(double angle) { return make_mobius({0.0, 0.0}, angle); }
  /// Boundary action of z -> e^{i angle} (z - a) / (1 - conj(a) z).
  static CircleMap make_mobius(cplx a, double angle);
  /// Time-t flow of dtheta/dt = v(theta), fixed-step RK4.
  static CircleMap make_flow(FourierLoop v, double t, int steps_per_unit = 1024);
  /// Piecewise-linear lift with slopes alternating between s and 1/s on the
  /// given breakpoints (default: 8 equal segments), normalized so the lift
  /// gains exactly 2 pi per turn.  Quasisymmetric but not C^1.
  static CircleMap make_zigzag(double s, std::vector<double> breakpoints = {});
  /// Monotone grid of lift values at theta_j = 2 pi j / M; monotone cubic
  /// (Fritsch-Carlson) interpolation between knots.
  static CircleMap make_sampled(const std::vector<double>& lift_values);

  double lift(double theta) const;
  /// lift(theta) reduced mod 2 pi.
  double evaluate(double theta) const;
  /// Image of a point of S^1; algebraically exact for Mobius maps.
  cplx map_point(cplx z) const;
  Quadruple map_quadruple(const Quadruple& q) const;
  std::vector<double> lift_grid(int m) const;

  /// Inverse as a Sampled map whose knots hit the equispaced grid exactly:
  /// values solve lift(x_j) = 2 pi j / M by bisection plus Newton polish, so
  /// h(h^{-1}) = id on the grid to solver tolerance.
  CircleMap inverse(int grid = 4096) const;

  bool is_mobius() const { return std::holds_alternative<Mobius>(rep_); }
  const Mobius& mobius() const { return std::get<Mobius>(rep_); }
  const std::variant<Mobius, Flow, Zigzag, Sampled, Composed>& rep() const { return rep_; }

  std::optional<double> dilatation_hint;  // maximal dilatation K when known

 private:
  explicit CircleMap(std::variant<Mobius, Flow, Zigzag, Sampled, Composed> rep)
      : rep_(std::move(rep)) {}
  std::variant<Mobius, Flow, Zigzag, Sampled, Composed> rep_;

  friend CircleMap compose(CircleMap outer, CircleMap inner);
};

/// compose(h1, h2) evaluates h1 after h2.
CircleMap compose(CircleMap outer, CircleMap inner);

/// Post-composes with the Mobius map sending h(1), h(-1), h(-i) to 1, -1, -i.
CircleMap normalized(const CircleMap& h);

/// sup h' / inf h' over a dense grid (secant slopes of the lift).  Heuristic
/// dilatation for diffeomorphisms; >= 1 by construction.
double dilatation_from_derivative(const CircleMap& h, int grid = 4096);

struct BaResult {
  double epsilon_hat = 0.0;
  Quadruple worst;  // the pre-image quadruple attaining epsilon_hat
};

/// Samples quadruples with cross ratio exactly 1/2 (rotated standard
/// quadruples pushed through random Mobius maps, which preserve the ratio),
/// maps them through h and reports eps_hat = max 2|rho(h(q)) - rho(q)|.
/// rho(q) = 1/2 by construction, so this is max |2 rho(h(q)) - 1| with the
/// generator's own rounding subtracted; the identity map scores exactly 0.
BaResult ba_test(const CircleMap& h, int samples, std::uint64_t seed);

}  // namespace utq
