#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braids::dynamics {

// Numerical side of the construction realizing a link by a diffeomorphism:
// the radial contraction h, the projection p onto the product of a sphere
// and a circle, the piecewise model flow with one saddle and one sink inside
// a translation-invariant tube, and the stereographic chart. Everything here
// is a pure function; verification reports below certify the analytic
// properties to fixed tolerances.

struct Point3 {
  double x = 0;
  double y = 0;
  double z = 0;

  friend Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Point3 operator*(double s, Point3 a) { return {s * a.x, s * a.y, s * a.z}; }
};

inline double norm(Point3 a) { return std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z); }

inline double max_abs(Point3 a) {
  return std::max({std::fabs(a.x), std::fabs(a.y), std::fabs(a.z)});
}

inline bool finite(Point3 a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// The contraction x -> x/2.
inline Point3 contract_h(Point3 p) { return {p.x / 2, p.y / 2, p.z / 2}; }

/// Point of the product of the unit sphere and the circle: the first two
/// coordinates of the sphere point, the sign of its third coordinate, and
/// the circle coordinate in [0, 1).
struct TorusPoint {
  double u1 = 0;
  double u2 = 0;
  int hemisphere = 0;  // sign of the third sphere coordinate
  double circle = 0;
};

inline double mod1(double t) {
  double r = t - std::floor(t);
  if (r >= 1.0) r -= 1.0;  // guard against floor rounding at the seam
  return r;
}

/// Distance on the unit circle parametrized by [0, 1).
inline double circular_distance(double a, double b) {
  const double d = std::fabs(mod1(a) - mod1(b));
  return std::min(d, 1.0 - d);
}

/// p(x) = (x1/|x|, x2/|x|, log2|x| mod 1). Collapses every orbit of the
/// contraction: project_p(contract_h(x)) == project_p(x).
inline TorusPoint project_p(Point3 p) {
  const double r = norm(p);
  if (r <= 0.0 || !std::isfinite(r)) {
    throw std::invalid_argument("project_p: undefined at the origin");
  }
  TorusPoint out;
  out.u1 = p.x / r;
  out.u2 = p.y / r;
  out.hemisphere = (p.z > 0) - (p.z < 0);
  out.circle = mod1(std::log2(r));
  return out;
}

// ---------------------------------------------------------------------------
// The model flow

enum class FlowRegion { inner, middle, outer };

inline FlowRegion region_of(double r2) {
  if (r2 <= 2.0) return FlowRegion::inner;
  if (r2 <= 4.0) return FlowRegion::middle;
  return FlowRegion::outer;
}

/// One branch formula evaluated regardless of where the point lies; the
/// continuity checks compare branches on the separating spheres.
inline Point3 velocity_branch(FlowRegion region, Point3 p) {
  const double r2 = p.x * p.x + p.y * p.y + p.z * p.z;
  Point3 v;
  switch (region) {
    case FlowRegion::inner: {
      const double d = r2 - 4.0;
      v.x = 1.0 - d * d / 9.0;
      v.y = -p.y;
      v.z = -p.z;
      break;
    }
    case FlowRegion::middle: {
      const double d = r2 - 4.0;
      const double damp = 0.5 * (std::sin((std::numbers::pi / 2.0) * (r2 - 3.0)) - 1.0);
      v.x = 1.0 - d * d / 9.0;
      v.y = p.y * damp;
      v.z = p.z * damp;
      break;
    }
    case FlowRegion::outer:
      v = {1.0, 0.0, 0.0};
      break;
  }
  return v;
}

/// The piecewise vector field: radial cross-section damping that switches
/// off at the outer sphere, and a forward drift that vanishes exactly at
/// the saddle (1,0,0) and the sink (-1,0,0).
inline Point3 velocity(Point3 p) {
  const double r2 = p.x * p.x + p.y * p.y + p.z * p.z;
  return velocity_branch(region_of(r2), p);
}

/// Fixed-step fourth-order Runge-Kutta flow map. Deterministic; a negative
/// duration integrates backwards.
inline Point3 integrate_flow(Point3 start, double duration, double step) {
  if (!(step > 0)) throw std::invalid_argument("integrate_flow: step must be positive");
  if (duration == 0) return start;
  const int steps = static_cast<int>(std::ceil(std::fabs(duration) / step));
  const double h = duration / steps;
  Point3 x = start;
  for (int i = 0; i < steps; ++i) {
    const Point3 k1 = velocity(x);
    const Point3 k2 = velocity(x + (h / 2) * k1);
    const Point3 k3 = velocity(x + (h / 2) * k2);
    const Point3 k4 = velocity(x + h * k3);
    x = x + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    if (!finite(x)) {
      throw std::runtime_error("integrate_flow: state became non-finite at step " +
                               std::to_string(i));
    }
  }
  return x;
}

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// Central finite differences of the vector field.
inline Matrix3 jacobian(Point3 p, double h = 1e-5) {
  Matrix3 out{};
  for (int c = 0; c < 3; ++c) {
    Point3 plus = p, minus = p;
    double* pc = c == 0 ? &plus.x : c == 1 ? &plus.y : &plus.z;
    double* mc = c == 0 ? &minus.x : c == 1 ? &minus.y : &minus.z;
    *pc += h;
    *mc -= h;
    const Point3 fp = velocity(plus);
    const Point3 fm = velocity(minus);
    out[0][c] = (fp.x - fm.x) / (2 * h);
    out[1][c] = (fp.y - fm.y) / (2 * h);
    out[2][c] = (fp.z - fm.z) / (2 * h);
  }
  return out;
}

namespace detail {

inline double cubic_eval(double a, double b, double c, double t) {
  return ((t + a) * t + b) * t + c;
}

/// One real root of t^3 + a t^2 + b t + c, Newton-polished.
inline double cubic_real_root(double a, double b, double c) {
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  double t;
  const double disc = q * q / 4.0 + p * p * p / 27.0;
  if (disc >= 0) {
    const double s = std::sqrt(disc);
    t = std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s);
  } else {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double phi = std::acos(std::clamp(3.0 * q / (p * m), -1.0, 1.0));
    t = m * std::cos(phi / 3.0);
  }
  double root = t - a / 3.0;
  for (int iter = 0; iter < 50; ++iter) {
    const double f = cubic_eval(a, b, c, root);
    const double df = (3.0 * root + 2.0 * a) * root + b;
    if (df == 0) break;
    const double next = root - f / df;
    if (std::fabs(next - root) <= 1e-15 * (1.0 + std::fabs(root))) {
      root = next;
      break;
    }
    root = next;
  }
  return root;
}

}  // namespace detail

/// Eigenvalues of a 3x3 real matrix as the roots of its characteristic
/// polynomial, sorted by descending real part then imaginary part.
inline std::array<std::complex<double>, 3> eigenvalues(const Matrix3& m) {
  const double tr = m[0][0] + m[1][1] + m[2][2];
  const double minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] -
                        m[0][2] * m[2][0] + m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  // Characteristic polynomial: t^3 - tr t^2 + minors t - det.
  const double a = -tr, b = minors, c = -det;
  const double r = detail::cubic_real_root(a, b, c);
  // Deflate to t^2 + B t + C.
  const double B = a + r;
  const double C = b + r * B;
  const double disc = B * B - 4.0 * C;
  std::array<std::complex<double>, 3> out;
  out[0] = {r, 0.0};
  if (disc >= 0) {
    const double s = std::sqrt(disc);
    out[1] = {(-B + s) / 2.0, 0.0};
    out[2] = {(-B - s) / 2.0, 0.0};
  } else {
    const double s = std::sqrt(-disc);
    out[1] = {-B / 2.0, s / 2.0};
    out[2] = {-B / 2.0, -s / 2.0};
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& rr) {
    if (l.real() != rr.real()) return l.real() > rr.real();
    return l.imag() > rr.imag();
  });
  return out;
}

enum class FixedPointClass { saddle, sink, source, non_hyperbolic };

inline std::string_view fixed_point_class_name(FixedPointClass c) {
  switch (c) {
    case FixedPointClass::saddle: return "saddle";
    case FixedPointClass::sink: return "sink";
    case FixedPointClass::source: return "source";
    case FixedPointClass::non_hyperbolic: return "non-hyperbolic";
  }
  return "?";
}

struct SpectralReport {
  Point3 point;
  double residual = 0;  // max component of the field at the point
  std::array<std::complex<double>, 3> eigenvalue_list{};
  FixedPointClass classification = FixedPointClass::non_hyperbolic;
};

/// Jacobian spectrum and hyperbolicity classification at a point. The field
/// eigenvalue real parts classify: within `tolerance` of zero means
/// non-hyperbolic (time-one-map eigenvalue modulus one), otherwise the sign
/// pattern decides sink/source/saddle.
inline SpectralReport spectral_at(Point3 p, double tolerance = 1e-6, double fd_step = 1e-5) {
  SpectralReport out;
  out.point = p;
  out.residual = max_abs(velocity(p));
  out.eigenvalue_list = eigenvalues(jacobian(p, fd_step));
  int positive = 0, negative = 0;
  bool marginal = false;
  for (const auto& e : out.eigenvalue_list) {
    if (std::fabs(e.real()) <= tolerance) {
      marginal = true;
    } else if (e.real() > 0) {
      ++positive;
    } else {
      ++negative;
    }
  }
  if (marginal) {
    out.classification = FixedPointClass::non_hyperbolic;
  } else if (positive == 3) {
    out.classification = FixedPointClass::source;
  } else if (negative == 3) {
    out.classification = FixedPointClass::sink;
  } else {
    out.classification = FixedPointClass::saddle;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stereographic chart

/// Projection from the unit three-sphere minus the north pole (0,0,0,1):
/// each coordinate divided by one minus the last.
inline Point3 stereographic(const std::array<double, 4>& s) {
  if (s[3] >= 1.0) throw std::invalid_argument("stereographic: undefined at the north pole");
  const double d = 1.0 - s[3];
  return {s[0] / d, s[1] / d, s[2] / d};
}

inline std::array<double, 4> stereographic_inverse(Point3 p) {
  const double n2 = p.x * p.x + p.y * p.y + p.z * p.z;
  const double d = n2 + 1.0;
  return {2 * p.x / d, 2 * p.y / d, 2 * p.z / d, (n2 - 1.0) / d};
}

// ---------------------------------------------------------------------------
// Verification report

struct DynamicsCheck {
  std::string name;
  double observed = 0;
  double bound = 0;
  bool within_bound = true;  // false when `observed` must exceed/lie inside a range instead
  bool pass = false;
  std::string detail;
};

struct DynamicsReport {
  std::vector<SpectralReport> fixed_points;
  std::vector<DynamicsCheck> checks;
  bool all_pass = true;
};

namespace detail {

/// Deterministic uniform stream, independent of library distributions.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double symmetric() { return 2.0 * uniform() - 1.0; }

  Point3 direction() {
    while (true) {
      Point3 p{symmetric(), symmetric(), symmetric()};
      const double n = norm(p);
      if (n > 0.1 && n <= 1.0) return (1.0 / n) * p;
    }
  }
};

}  // namespace detail

inline const Point3 saddle_point{1.0, 0.0, 0.0};
inline const Point3 sink_point{-1.0, 0.0, 0.0};

/// Runs the full verification suite: fixed point residuals and spectra,
/// branch continuity on both separating spheres, invariance of the
/// projection under the contraction, integrator order and exactness checks,
/// and the stereographic round trip.
inline DynamicsReport verify_dynamics(int samples = 1000, double residual_tol = 1e-12,
                                      double spectrum_tol = 1e-4, double continuity_tol = 1e-9,
                                      double projection_tol = 1e-12) {
  DynamicsReport report;
  detail::SplitMix64 rng(0x5eed5eed5eedull);
  auto add = [&](DynamicsCheck check) {
    report.all_pass = report.all_pass && check.pass;
    report.checks.push_back(std::move(check));
  };

  const SpectralReport at_saddle = spectral_at(saddle_point);
  const SpectralReport at_sink = spectral_at(sink_point);
  report.fixed_points = {at_saddle, at_sink};

  add({"saddle residual", at_saddle.residual, residual_tol, true,
       at_saddle.residual <= residual_tol, "max |field| at (1,0,0)"});
  add({"sink residual", at_sink.residual, residual_tol, true, at_sink.residual <= residual_tol,
       "max |field| at (-1,0,0)"});

  auto spectrum_error = [](const SpectralReport& r, std::array<double, 3> expected) {
    double err = 0;
    for (int i = 0; i < 3; ++i) {
      err = std::max(err, std::abs(r.eigenvalue_list[i] - std::complex<double>(expected[i], 0)));
    }
    return err;
  };
  const double saddle_err = spectrum_error(at_saddle, {4.0 / 3.0, -1.0, -1.0});
  add({"saddle spectrum", saddle_err, spectrum_tol, true, saddle_err <= spectrum_tol,
       "eigenvalues vs (4/3, -1, -1)"});
  add({"saddle class", 0, 0, true, at_saddle.classification == FixedPointClass::saddle,
       "classified as a saddle"});
  const double sink_err = spectrum_error(at_sink, {-1.0, -1.0, -4.0 / 3.0});
  add({"sink spectrum", sink_err, spectrum_tol, true, sink_err <= spectrum_tol,
       "eigenvalues vs (-4/3, -1, -1)"});
  add({"sink class", 0, 0, true, at_sink.classification == FixedPointClass::sink,
       "classified as a sink"});

  double cont_inner = 0, cont_outer = 0;
  for (int i = 0; i < samples; ++i) {
    const Point3 d2 = std::sqrt(2.0) * rng.direction();
    cont_inner = std::max(cont_inner, max_abs(velocity_branch(FlowRegion::inner, d2) -
                                              velocity_branch(FlowRegion::middle, d2)));
    const Point3 d4 = 2.0 * rng.direction();
    cont_outer = std::max(cont_outer, max_abs(velocity_branch(FlowRegion::middle, d4) -
                                              velocity_branch(FlowRegion::outer, d4)));
  }
  add({"continuity at the inner sphere", cont_inner, continuity_tol, true,
       cont_inner <= continuity_tol, "branch mismatch on |x|^2 = 2"});
  add({"continuity at the outer sphere", cont_outer, continuity_tol, true,
       cont_outer <= continuity_tol, "branch mismatch on |x|^2 = 4"});

  double proj_err = 0;
  for (int i = 0; i < samples; ++i) {
    const double radius = std::exp(3.0 * rng.symmetric());
    const Point3 p = radius * rng.direction();
    const TorusPoint a = project_p(p);
    const TorusPoint b = project_p(contract_h(p));
    proj_err = std::max({proj_err, std::fabs(a.u1 - b.u1), std::fabs(a.u2 - b.u2),
                         circular_distance(a.circle, b.circle)});
    if (a.hemisphere != b.hemisphere) proj_err = 1.0;
  }
  add({"projection absorbs the contraction", proj_err, projection_tol, true,
       proj_err <= projection_tol, "p after h vs p"});

  const Point3 translated = integrate_flow({5, 0, 0}, 1.0, 0.01);
  const double translation_err = max_abs(translated - Point3{6, 0, 0});
  add({"outer region translation", translation_err, 1e-9, true, translation_err <= 1e-9,
       "flow for unit time from (5,0,0)"});

  const double stay_err = max_abs(integrate_flow(saddle_point, 10.0, 0.01) - saddle_point);
  add({"equilibrium holds under the flow", stay_err, 1e-9, true, stay_err <= 1e-9,
       "ten time units at the saddle"});

  const double drift_err = max_abs(integrate_flow({0, 0, 0}, 40.0, 0.01) - sink_point);
  add({"origin flows into the sink", drift_err, 1e-6, true, drift_err <= 1e-6,
       "separatrix segment lands at (-1,0,0)"});

  {
    const Point3 x0{0.3, 0.4, 0.1};
    const double T = 1.0;
    const Point3 coarse = integrate_flow(x0, T, 0.1);
    const Point3 medium = integrate_flow(x0, T, 0.05);
    const Point3 fine = integrate_flow(x0, T, 0.025);
    const double e1 = norm(coarse - medium);
    const double e2 = norm(medium - fine);
    const double ratio = e2 > 0 ? e1 / e2 : 0;
    DynamicsCheck check{"integrator order", ratio, 16.0, false,
                        ratio >= 12.0 && ratio <= 20.0,
                        "error reduction factor under step halving"};
    add(std::move(check));
  }

  {
    double round_err = std::max(max_abs(stereographic({0, 0, 0, -1}) - Point3{0, 0, 0}),
                                max_abs(stereographic({1, 0, 0, 0}) - Point3{1, 0, 0}));
    for (int i = 0; i < samples; ++i) {
      double v[4];
      double n2 = 0;
      for (double& c : v) {
        c = rng.symmetric();
        n2 += c * c;
      }
      if (n2 < 1e-2) continue;
      const double n = std::sqrt(n2);
      std::array<double, 4> s{v[0] / n, v[1] / n, v[2] / n, v[3] / n};
      if (s[3] > 0.999) continue;
      const std::array<double, 4> back = stereographic_inverse(stereographic(s));
      for (int c = 0; c < 4; ++c) round_err = std::max(round_err, std::fabs(back[c] - s[c]));
    }
    add({"stereographic round trip", round_err, 1e-12, true, round_err <= 1e-12,
         "chart and inverse on the unit sphere"});
  }

  return report;
}

}  // namespace braids::dynamics
