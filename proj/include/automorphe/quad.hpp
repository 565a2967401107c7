#pragma once

#include <cmath>
#include <limits>
#include <queue>

#include <boost/math/quadrature/gauss.hpp>

#include "automorphe/common.hpp"

namespace automorphe {

// Fixed-order Gauss-Legendre on [a,b] using Boost's node tables.
template <unsigned N, class F>
auto gauss_legendre(F&& f, double a, double b) {
  using rule = boost::math::quadrature::gauss<double, N>;
  const auto& x = rule::abscissa();
  const auto& w = rule::weights();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  decltype(f(c)) acc{};
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0.0) {
      acc += w[k] * f(c);
    } else {
      acc += w[k] * (f(c - h * x[k]) + f(c + h * x[k]));
    }
  }
  return h * acc;
}

// Composite Gauss-Legendre with equal panels.
template <unsigned N, class F>
auto composite_gl(F&& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  decltype(f(a)) acc{};
  for (int j = 0; j < panels; ++j) acc += gauss_legendre<N>(f, a + j * h, a + (j + 1) * h);
  return acc;
}

// Globally adaptive Gauss-Legendre: split the panel with the largest 20/40-node
// discrepancy until the summed discrepancy is below tol or the panel budget runs out.
template <class F>
auto adaptive_gl(F&& f, double a, double b, double tol, int max_panels = 4000) -> decltype(f(a)) {
  using R = decltype(f(a));
  struct Panel {
    double a, b;
    R value;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
  };
  auto make = [&](double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const R coarse = gauss_legendre<20>(f, lo, hi);
    const R fine = gauss_legendre<20>(f, lo, mid) + gauss_legendre<20>(f, mid, hi);
    return Panel{lo, hi, fine, std::abs(fine - coarse)};
  };
  std::priority_queue<Panel> heap;
  heap.push(make(a, b));
  double err = heap.top().err;
  int panels = 1;
  while (err > tol && panels < max_panels) {
    const Panel p = heap.top();
    if (p.b - p.a < 1e-12 * (1.0 + std::abs(p.a))) break;
    heap.pop();
    const double mid = 0.5 * (p.a + p.b);
    const Panel l = make(p.a, mid), r = make(mid, p.b);
    err += l.err + r.err - p.err;
    heap.push(l);
    heap.push(r);
    ++panels;
  }
  R sum{};
  while (!heap.empty()) {
    sum += heap.top().value;
    heap.pop();
  }
  return sum;
}

// Integral over the real line by tanh-free substitution x = c + s * u / (1 - u^2).
template <class F>
auto integrate_line(F&& f, double center, double scale, double tol) {
  auto g = [&](double u) {
    const double d = 1.0 - u * u;
    const double x = center + scale * u / d;
    const double jac = scale * (1.0 + u * u) / (d * d);
    using R = decltype(f(center));
    if (d <= 0.0 || !std::isfinite(jac)) return R{};
    return f(x) * jac;
  };
  return adaptive_gl(g, -1.0, 1.0, tol);
}

// Integral over [a, inf) by x = a + s * u / (1 - u).
template <class F>
auto integrate_half_line(F&& f, double a, double scale, double tol) {
  auto g = [&](double u) {
    const double d = 1.0 - u;
    using R = decltype(f(a));
    if (d <= 0.0) return R{};
    const double x = a + scale * u / d;
    const double jac = scale / (d * d);
    if (!std::isfinite(jac)) return R{};
    return f(x) * jac;
  };
  return adaptive_gl(g, 0.0, 1.0, tol);
}

}  // namespace automorphe
