#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "topochain/families.hpp"
#include "topochain/numerics.hpp"

using namespace topo;

namespace {

// Quartic mollifier (1 - (q/a)^2)^2 on [-a, a]: integral 16a/15, exactly
// integrated by Gauss-Legendre when the box equals the support.
double quartic(double q, double a) {
  const double u = 1.0 - (q / a) * (q / a);
  return u <= 0.0 ? 0.0 : u * u;
}

ComponentFunction gaussian_quartic(Arity arity, double a) {
  return {arity, [a](const Configuration& x) {
            double v = 1.0;
            for (const auto& pt : x.pts) v *= gaussian(pt.p, 1.0) * quartic(pt.q, a);
            return v;
          }};
}

}  // namespace

TEST_CASE("Gauss-Legendre nodes integrate polynomials exactly") {
  const auto& [nodes, weights] = gauss_legendre(8);
  double sum_w = 0.0, sum_x2 = 0.0, sum_x14 = 0.0;
  for (size_t i = 0; i < nodes.size(); ++i) {
    sum_w += weights[i];
    sum_x2 += weights[i] * nodes[i] * nodes[i];
    sum_x14 += weights[i] * std::pow(nodes[i], 14);
  }
  CHECK(sum_w == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sum_x2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(sum_x14 == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
}

TEST_CASE("tensor quadrature recovers closed-form product integrals") {
  const double a = 2.5;
  QuadratureSpec spec;
  spec.points_per_dim = 32;
  spec.momentum_halfwidth = 7.0;
  spec.position_box = [a](Label) { return ParticleBox{-a, a}; };

  const double gauss_mass = std::erf(7.0 / std::sqrt(2.0));
  const double exact_1d = (16.0 * a / 15.0) * gauss_mass;

  SUBCASE("one particle") {
    const IntegralResult r = integrate_component(gaussian_quartic({0, 1}, a), spec);
    CHECK(std::abs(r.value - exact_1d) < 1e-10);
  }
  SUBCASE("two particles") {
    const IntegralResult r = integrate_component(gaussian_quartic({1, 1}, a), spec);
    CHECK(std::abs(r.value - exact_1d * exact_1d) < 1e-10);
  }
  SUBCASE("zero integrand") {
    ComponentFunction zero{{0, 1}, [](const Configuration&) { return 0.0; }};
    const IntegralResult r = integrate_component(zero, spec);
    CHECK(r.value == 0.0);
    CHECK(r.error_estimate == 0.0);
  }
}

TEST_CASE("Monte Carlo agrees with tensor quadrature within 3 standard errors") {
  const double a = 2.5;
  QuadratureSpec tensor;
  tensor.points_per_dim = 24;
  tensor.momentum_halfwidth = 6.0;
  tensor.position_box = [a](Label) { return ParticleBox{-a, a}; };

  QuadratureSpec mc = tensor;
  mc.mode = QuadratureSpec::Mode::MonteCarlo;
  mc.sample_count = 200000;
  mc.seed = 99;

  const ComponentFunction f = gaussian_quartic({1, 1}, a);
  const IntegralResult rt = integrate_component(f, tensor);
  const IntegralResult rm = integrate_component(f, mc);
  CHECK(std::abs(rt.value - rm.value) < 3.0 * rm.error_estimate);
}

TEST_CASE("seeded Monte Carlo is bit-reproducible") {
  QuadratureSpec mc;
  mc.mode = QuadratureSpec::Mode::MonteCarlo;
  mc.sample_count = 5000;
  mc.seed = 1234;
  const ComponentFunction f = gaussian_quartic({0, 2}, 2.0);
  const IntegralResult r1 = integrate_component(f, mc);
  const IntegralResult r2 = integrate_component(f, mc);
  CHECK(r1.value == r2.value);
  CHECK(r1.error_estimate == r2.error_estimate);
}

TEST_CASE("dimension cap") {
  QuadratureSpec spec;
  spec.dim_cap = 12;
  ComponentFunction f{{3, 4}, [](const Configuration&) { return 1.0; }};
  CHECK_THROWS(integrate_component(f, spec));
}

TEST_CASE("weighted sequence norm") {
  SUBCASE("unit sequence") {
    QuadratureSpec spec;
    CHECK(l1alpha_norm(DoubleSequence::unit(), {4.0}, spec) == doctest::Approx(1.0));
  }
  SUBCASE("single two-particle component with known integral") {
    const double a = 2.0;
    QuadratureSpec spec;
    spec.points_per_dim = 24;
    spec.momentum_halfwidth = 7.0;
    spec.position_box = [a](Label) { return ParticleBox{-a, a}; };
    const double gauss_mass = std::erf(7.0 / std::sqrt(2.0));
    const double exact_1d = (16.0 * a / 15.0) * gauss_mass;
    // scale so the component integral is exactly 0.5
    const double scale = 0.5 / (exact_1d * exact_1d);
    DoubleSequence f;
    f.set_component({0, 2}, [a, scale](const Configuration& x) {
      double v = scale;
      for (const auto& pt : x.pts) v *= gaussian(pt.p, 1.0) * quartic(pt.q, a);
      return v;
    });
    CHECK(l1alpha_norm(f, {4.0}, spec) == doctest::Approx(8.0).epsilon(1e-7));
  }
}

TEST_CASE("time derivative") {
  SUBCASE("constant") {
    const auto d = time_derivative([](double) { return 3.5; }, 1.0);
    CHECK(d.value == doctest::Approx(0.0));
  }
  SUBCASE("t^2 at t = 1") {
    const auto d = time_derivative([](double t) { return t * t; }, 1.0);
    CHECK(std::abs(d.value - 2.0) < 1e-8);
  }
  SUBCASE("sin has observed order around 2") {
    const auto d = time_derivative([](double t) { return std::sin(t); }, 0.7, 0.2);
    CHECK(d.value == doctest::Approx(std::cos(0.7)).epsilon(1e-6));
    CHECK(d.observed_order > 1.8);
    CHECK(d.observed_order < 2.3);
  }
  SUBCASE("non-finite evaluation throws") {
    CHECK_THROWS(time_derivative([](double t) { return std::log(t); }, 0.1, 0.2));
  }
}
