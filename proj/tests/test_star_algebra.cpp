#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "topochain/families.hpp"
#include "topochain/star.hpp"

using namespace topo;

namespace {

constexpr double kSigma = 1.0;

DoubleSequence random_sequence(std::uint64_t seed, int max_total) {
  RampFamilySpec spec;
  spec.seed = seed;
  spec.max_total = max_total;
  return make_ramp_sequence(spec);
}

Configuration random_config(Arity a, std::mt19937_64& rng) {
  return random_allowed_config(a, kSigma, 0.6, 1.5, 1.0, rng);
}

std::vector<Arity> arities_up_to(int max_total) {
  std::vector<Arity> out;
  for (int total = 1; total <= max_total; ++total)
    for (int n1 = 0; n1 <= total; ++n1) out.push_back({n1, total - n1});
  return out;
}

bool same_terms(std::vector<ExpansionTerm> a, std::vector<ExpansionTerm> b) {
  auto key = [](const ExpansionTerm& t) { return std::make_pair(t.blocks, t.sign); };
  std::sort(a.begin(), a.end(), [&](auto& l, auto& r) { return key(l) < key(r); });
  std::sort(b.begin(), b.end(), [&](auto& l, auto& r) { return key(l) < key(r); });
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (key(a[i]) != key(b[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("unit sequence is a two-sided star identity") {
  const DoubleSequence f = random_sequence(11, 4);
  const DoubleSequence I = DoubleSequence::unit();
  const DoubleSequence left = star_product(I, f);
  const DoubleSequence right = star_product(f, I);
  std::mt19937_64 rng(5);
  for (const Arity a : arities_up_to(4)) {
    const Configuration x = random_config(a, rng);
    const double fx = f.eval(x);
    CHECK(left.eval(x) == doctest::Approx(fx).epsilon(1e-14));
    CHECK(right.eval(x) == doctest::Approx(fx).epsilon(1e-14));
  }
}

TEST_CASE("pair component of g*g is the product of singles") {
  const DoubleSequence g = random_sequence(12, 3);
  const DoubleSequence gg = star_product(g, g);
  std::mt19937_64 rng(6);
  const Configuration x = random_config({1, 1}, rng);
  const Configuration xm = x.subset(IndexSet{{-1}});
  const Configuration xp = x.subset(IndexSet{{1}});
  CHECK(gg.eval(x) ==
        doctest::Approx(g.eval(xm) * g.eval(xp)).epsilon(1e-13));
}

TEST_CASE("triple star power on three particles is the product of singles") {
  const DoubleSequence f = random_sequence(13, 3);
  const DoubleSequence fff = star_product(star_product(f, f), f);
  std::mt19937_64 rng(7);
  const Configuration x = random_config({1, 2}, rng);
  const double expected = f.eval(x.subset(IndexSet{{-1}})) * f.eval(x.subset(IndexSet{{1}})) *
                          f.eval(x.subset(IndexSet{{2}}));
  CHECK(fff.eval(x) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("star product is associative") {
  const DoubleSequence f = random_sequence(21, 3);
  const DoubleSequence g = random_sequence(22, 3);
  const DoubleSequence h = random_sequence(23, 3);
  const DoubleSequence lhs = star_product(star_product(f, g), h);
  const DoubleSequence rhs = star_product(f, star_product(g, h));
  std::mt19937_64 rng(8);
  for (const Arity a : arities_up_to(4)) {
    const Configuration x = random_config(a, rng);
    CHECK(lhs.eval(x) == doctest::Approx(rhs.eval(x)).epsilon(1e-12));
  }
}

TEST_CASE("star resolvent") {
  SUBCASE("zero maps to the unit") {
    DoubleSequence zero;
    const DoubleSequence r = star_resolvent(zero);
    CHECK(r.scalar0() == 1.0);
    CHECK(r.support_bound() == 0);
  }

  SUBCASE("nonzero scalar is rejected") {
    DoubleSequence f;
    f.set_scalar0(0.5);
    CHECK_THROWS(star_resolvent(f));
    CHECK_THROWS(star_inverse_resolvent(f));
  }

  SUBCASE("matches iterated star powers") {
    const DoubleSequence f = random_sequence(31, 4);
    const DoubleSequence res = star_resolvent(f);
    std::vector<DoubleSequence> powers;  // f, f^2, f^3, f^4
    powers.push_back(f);
    for (int n = 2; n <= 4; ++n) powers.push_back(star_product(powers.back(), f));
    std::mt19937_64 rng(9);
    for (const Arity a : arities_up_to(4)) {
      const Configuration x = random_config(a, rng);
      double expected = 0.0;
      for (const auto& p : powers) expected += p.eval(x);
      CHECK(res.eval(x) == doctest::Approx(expected).epsilon(1e-12));
    }
  }

  SUBCASE("resolvent identity (I - f) * res(f) = I") {
    const DoubleSequence f = random_sequence(32, 4);
    // (I - f)
    DoubleSequence neg;
    neg.set_scalar0(1.0);
    for (const auto& [a, fn] : f.components())
      neg.set_component(a, [fn](const Configuration& x) { return -fn(x); });
    const DoubleSequence prod = star_product(neg, star_resolvent(f));
    std::mt19937_64 rng(10);
    CHECK(prod.scalar0() == doctest::Approx(1.0));
    for (const Arity a : arities_up_to(4)) {
      const Configuration x = random_config(a, rng);
      CHECK(prod.eval(x) == doctest::Approx(0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("cluster and cumulant expansions reproduce the printed examples") {
  const DoubleSequence g = random_sequence(41, 3);
  const DoubleSequence D = cluster_expand(g);
  std::mt19937_64 rng(11);

  SUBCASE("D_{0+1} = g_{0+1}") {
    const Configuration x = random_config({0, 1}, rng);
    CHECK(D.eval(x) == doctest::Approx(g.eval(x)).epsilon(1e-14));
  }

  SUBCASE("D_{1+1} = g_{1+1} + g_{1+0} g_{0+1}") {
    const Configuration x = random_config({1, 1}, rng);
    const double expected = g.eval(x) + g.eval(x.subset(IndexSet{{-1}})) *
                                            g.eval(x.subset(IndexSet{{1}}));
    CHECK(D.eval(x) == doctest::Approx(expected).epsilon(1e-13));
  }

  SUBCASE("g_{1+2} cumulant has the printed four terms") {
    const DoubleSequence gc = cumulant_transform(D);
    const Configuration x = random_config({1, 2}, rng);
    auto Dv = [&](std::vector<Label> ls) { return D.eval_block(x, IndexSet{std::move(ls)}); };
    const double expected = Dv({-1, 1, 2}) - Dv({-1, 1}) * Dv({2}) - Dv({-1}) * Dv({1, 2}) +
                            Dv({-1}) * Dv({1}) * Dv({2});
    CHECK(gc.eval(x) == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("transform roundtrips are pointwise exact to 1e-12") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    const DoubleSequence g = random_sequence(1000 + trial, 5);
    const DoubleSequence round = cumulant_transform(cluster_expand(g));
    const DoubleSequence D = cluster_expand(random_sequence(2000 + trial, 5));
    const DoubleSequence round2 = cluster_expand(cumulant_transform(D));
    for (const Arity a : arities_up_to(5)) {
      const Configuration x = random_config(a, rng);
      const double gx = g.eval(x);
      CHECK(std::abs(round.eval(x) - gx) <= 1e-12 * std::max(1.0, std::abs(gx)));
      const double dx = D.eval(x);
      CHECK(std::abs(round2.eval(x) - dx) <= 1e-12 * std::max(1.0, std::abs(dx)));
    }
  }
}

TEST_CASE("star resolvent roundtrip") {
  const DoubleSequence f = random_sequence(51, 4);
  DoubleSequence res_minus_I = star_resolvent(f);
  res_minus_I.set_scalar0(0.0);
  const DoubleSequence back = star_inverse_resolvent(res_minus_I);
  std::mt19937_64 rng(12);
  for (const Arity a : arities_up_to(4)) {
    const Configuration x = random_config(a, rng);
    const double fx = f.eval(x);
    CHECK(std::abs(back.eval(x) - fx) <= 1e-12 * std::max(1.0, std::abs(fx)));
  }
}

TEST_CASE("clustered cumulants") {
  const DoubleSequence g = random_sequence(61, 4);
  const DoubleSequence D = cluster_expand(g);
  std::mt19937_64 rng(13);

  SUBCASE("bare cluster is the distribution of the flattened set") {
    // printed instance: g_{1+0+0}({x_-1, x_1}) = g_{1+1} + g_{1+0} g_{0+1}
    const Configuration x = random_config({1, 1}, rng);
    const ClusteredIndexSet c{{}, IndexSet::canonical(1, 1), {}};
    const double expected =
        g.eval(x) + g.eval_block(x, IndexSet{{-1}}) * g.eval_block(x, IndexSet{{1}});
    CHECK(clustered_cumulant(D, c, x) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(clustered_cumulant(D, c, x) == doctest::Approx(D.eval(x)).epsilon(1e-13));
  }

  SUBCASE("one right particle: D_{1+2} - D_{1+1} D_{0+1}") {
    const Configuration x = random_config({1, 2}, rng);
    const ClusteredIndexSet c{{}, IndexSet::canonical(1, 1), IndexSet{{2}}};
    auto gv = [&](std::vector<Label> ls) { return g.eval_block(x, IndexSet{std::move(ls)}); };
    // expanding the two signed clustered partitions in terms of g
    const double expected = gv({-1, 1, 2}) + gv({-1}) * gv({1, 2});
    CHECK(clustered_cumulant(D, c, x) == doctest::Approx(expected).epsilon(1e-12));
  }

  SUBCASE("g_{1+0+0}({x_1}) = g_{0+1}(x_1)") {
    const Configuration x = random_config({0, 1}, rng);
    const ClusteredIndexSet c{{}, IndexSet{{1}}, {}};
    CHECK(clustered_cumulant(D, c, x) == doctest::Approx(g.eval(x)).epsilon(1e-14));
  }

  SUBCASE("relation check agrees on random clusters") {
    for (int trial = 0; trial < 10; ++trial) {
      const Configuration x = random_config({2, 2}, rng);
      const ClusteredIndexSet c{IndexSet{{-2}}, IndexSet::canonical(1, 1), IndexSet{{2}}};
      const auto [lhs, rhs] = cluster_to_particle_relation_check(g, c, x);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST_CASE("golden expansion terms match the paper") {
  SUBCASE("D_{1+1}") {
    std::vector<ExpansionTerm> expected = {{1, {{-1, 1}}}, {1, {{-1}, {1}}}};
    CHECK(same_terms(cluster_expansion_terms({1, 1}), expected));
  }
  SUBCASE("D_{1+2}") {
    std::vector<ExpansionTerm> expected = {{1, {{-1, 1, 2}}},
                                           {1, {{-1, 1}, {2}}},
                                           {1, {{-1}, {1, 2}}},
                                           {1, {{-1}, {1}, {2}}}};
    CHECK(same_terms(cluster_expansion_terms({1, 2}), expected));
  }
  SUBCASE("g_{1+1}") {
    std::vector<ExpansionTerm> expected = {{1, {{-1, 1}}}, {-1, {{-1}, {1}}}};
    CHECK(same_terms(cumulant_expansion_terms({1, 1}), expected));
  }
  SUBCASE("g_{1+2} has signs (+,-,-,+)") {
    std::vector<ExpansionTerm> expected = {{1, {{-1, 1, 2}}},
                                           {-1, {{-1, 1}, {2}}},
                                           {-1, {{-1}, {1, 2}}},
                                           {1, {{-1}, {1}, {2}}}};
    CHECK(same_terms(cumulant_expansion_terms({1, 2}), expected));
  }
  SUBCASE("(0,1) is a single term") {
    CHECK(cumulant_expansion_terms({0, 1}).size() == 1);
  }
}

TEST_CASE("block evaluation keys components by signed label counts") {
  DoubleSequence f;
  f.set_component({0, 2}, [](const Configuration&) { return 7.0; });
  f.set_component({1, 1}, [](const Configuration&) { return 3.0; });
  std::mt19937_64 rng(14);
  const Configuration x = random_config({1, 2}, rng);
  CHECK(f.eval_block(x, IndexSet{{1, 2}}) == 7.0);
  CHECK(f.eval_block(x, IndexSet{{-1, 1}}) == 3.0);
}
