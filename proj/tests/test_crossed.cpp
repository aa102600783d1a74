#include <doctest.h>

#include <random>

#include "padicops/crossed.hpp"

using namespace padic;

namespace {

GroupAction swap_action() {
  // Z/2 swapping two points.
  return GroupAction(FiniteGroup::cyclic(2), {"x1", "x2"},
                     {{0, 1}, {1, 0}});
}

CrossedProductElement random_element(const GroupAction& act, long p, int prec,
                                     std::mt19937_64& rng) {
  CrossedProductElement phi(act, p, prec);
  for (size_t g = 0; g < act.group().order(); ++g)
    for (size_t x = 0; x < act.space().size(); ++x)
      phi.set(g, x,
              PadicScalar::from_integer(static_cast<long>(rng() % 10000), p,
                                        prec));
  return phi;
}

}  // namespace

TEST_CASE("trivial action reduces to function-valued group convolution") {
  long p = 3;
  int N = 8;
  auto act = GroupAction::trivial(FiniteGroup::cyclic(3), {"x"});
  std::mt19937_64 rng(1);
  // With |X| = 1 the crossed product is just the group algebra.
  auto grp = act.group();
  for (int iter = 0; iter < 20; ++iter) {
    auto phi = random_element(act, p, N, rng);
    auto psi = random_element(act, p, N, rng);
    GroupAlgebraElement gphi(grp, p, N), gpsi(grp, p, N);
    for (size_t g = 0; g < grp.order(); ++g) {
      gphi.set(g, phi.at(g, 0));
      gpsi.set(g, psi.at(g, 0));
    }
    auto conv = crossed_convolve(phi, psi);
    auto gconv = convolve(gphi, gpsi);
    for (size_t g = 0; g < grp.order(); ++g)
      CHECK(conv.at(g, 0).congruent(gconv.at(g)));
    auto inv = crossed_involution(phi);
    auto ginv = involution(gphi);
    for (size_t g = 0; g < grp.order(); ++g)
      CHECK(inv.at(g, 0).congruent(ginv.at(g)));
  }
}

TEST_CASE("monomial product picks up the action") {
  // (a delta_g)(b delta_h) = a alpha_g(b) delta_{gh}.
  long p = 5;
  int N = 8;
  auto act = swap_action();
  std::mt19937_64 rng(2);
  for (int iter = 0; iter < 30; ++iter) {
    size_t g = rng() % 2, h = rng() % 2;
    std::vector<PadicScalar> a, b;
    for (int x = 0; x < 2; ++x) {
      a.push_back(PadicScalar::from_integer(static_cast<long>(rng() % 500), p, N));
      b.push_back(PadicScalar::from_integer(static_cast<long>(rng() % 500), p, N));
    }
    auto prod = crossed_convolve(
        CrossedProductElement::monomial(act, g, a, p, N),
        CrossedProductElement::monomial(act, h, b, p, N));
    size_t gh = act.group().mul(g, h);
    for (size_t k = 0; k < 2; ++k) {
      if (k != gh) {
        for (size_t x = 0; x < 2; ++x) CHECK(prod.at(k, x).is_zero());
        continue;
      }
      // alpha_g(b)(x) = b(g^{-1} x); here g is an involution.
      for (size_t x = 0; x < 2; ++x)
        CHECK(prod.at(k, x).congruent(a[x] * b[act.act(act.group().inv(g), x)]));
    }
  }
}

TEST_CASE("crossed convolution is associative") {
  long p = 2;
  int N = 8;
  auto act = swap_action();
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 30; ++iter) {
    auto a = random_element(act, p, N, rng);
    auto b = random_element(act, p, N, rng);
    auto c = random_element(act, p, N, rng);
    CHECK(crossed_convolve(crossed_convolve(a, b), c)
              .congruent(crossed_convolve(a, crossed_convolve(b, c))));
    CHECK(crossed_involution(crossed_convolve(a, b))
              .congruent(crossed_convolve(crossed_involution(b),
                                          crossed_involution(a))));
    CHECK(crossed_involution(crossed_involution(a)).congruent(a));
  }
}

TEST_CASE("representation on X x G") {
  long p = 5;
  int N = 8;
  auto act = swap_action();

  SUBCASE("trivial group element delta_e with function a is block diagonal") {
    std::vector<PadicScalar> a{PadicScalar::from_integer(2, p, N),
                               PadicScalar::from_integer(3, p, N)};
    auto phi = CrossedProductElement::monomial(act, act.group().identity(), a,
                                               p, N);
    auto rho = crossed_product_representation(phi);
    CHECK(rho.dim() == 4);
    // Diagonal in the x-blocks, values a(h x) on basis (x, h).
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) {
        if (i != j) CHECK(rho.at(i, j).is_zero());
      }
  }

  SUBCASE("delta_g is a block permutation") {
    std::vector<PadicScalar> one{PadicScalar::from_integer(1, p, N),
                                 PadicScalar::from_integer(1, p, N)};
    auto phi = CrossedProductElement::monomial(act, 1, one, p, N);
    auto rho = crossed_product_representation(phi);
    CHECK(classify(rho).unitary);
    // Each column has exactly one unit entry.
    for (size_t j = 0; j < 4; ++j) {
      int count = 0;
      for (size_t i = 0; i < 4; ++i)
        if (!rho.at(i, j).is_zero()) {
          CHECK(rho.at(i, j).norm() == NormValue::exact(0));
          ++count;
        }
      CHECK(count == 1);
    }
  }

  SUBCASE("representation is a *-homomorphism and isometric") {
    std::mt19937_64 rng(4);
    for (int iter = 0; iter < 50; ++iter) {
      auto phi = random_element(act, p, N, rng);
      auto psi = random_element(act, p, N, rng);
      auto rphi = crossed_product_representation(phi);
      auto rpsi = crossed_product_representation(psi);
      CHECK(compose(rphi, rpsi).congruent(
          crossed_product_representation(crossed_convolve(phi, psi))));
      CHECK(adjoint(rphi).congruent(
          crossed_product_representation(crossed_involution(phi))));
      CHECK(op_norm(rphi) == phi.sup_norm());
    }
  }
}

TEST_CASE("action groupoid") {
  auto act = swap_action();
  auto gpd = FiniteGroupoid::action_groupoid(act);
  CHECK(gpd.object_count() == 2);
  CHECK(gpd.arrow_count() == 4);
  // s(h, x) = x, r(h, x) = h.x.
  for (size_t a = 0; a < 4; ++a) {
    auto label = gpd.arrow_label(a);
    auto bar = label.find('|');
    size_t h = act.group().index_of(label.substr(0, bar));
    size_t x = gpd.source(a);
    CHECK(gpd.object_label(x) == label.substr(bar + 1));
    CHECK(gpd.range(a) == act.act(h, x));
  }
}

TEST_CASE("action groupoid isomorphism") {
  long p = 3;
  int N = 8;
  auto act = swap_action();
  auto gpd = FiniteGroupoid::action_groupoid(act);

  SUBCASE("identity goes to the unit indicator") {
    std::vector<PadicScalar> one{PadicScalar::from_integer(1, p, N),
                                 PadicScalar::from_integer(1, p, N)};
    auto phi = CrossedProductElement::monomial(act, act.group().identity(), one,
                                               p, N);
    auto img = action_groupoid_iso(phi, gpd);
    for (size_t a = 0; a < gpd.arrow_count(); ++a) {
      if (gpd.is_unit(a))
        CHECK(img.at(a).lift() == 1);
      else
        CHECK(img.at(a).is_zero());
    }
  }

  SUBCASE("multiplicative and *-preserving") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 100; ++iter) {
      auto phi = random_element(act, p, N, rng);
      auto psi = random_element(act, p, N, rng);
      auto iphi = action_groupoid_iso(phi, gpd);
      auto ipsi = action_groupoid_iso(psi, gpd);
      CHECK(groupoid_convolve(iphi, ipsi).congruent(
          action_groupoid_iso(crossed_convolve(phi, psi), gpd)));
      CHECK(groupoid_involution(iphi).congruent(
          action_groupoid_iso(crossed_involution(phi), gpd)));
      CHECK(iphi.sup_norm() == phi.sup_norm());
    }
  }

  SUBCASE("structure constants give the pair groupoid (matrix algebra)") {
    // X = {x1, x2} with the swap: the action groupoid is the pair groupoid
    // on two points, so the image algebra has M_2 structure constants.
    // phi(g) concentrated so that the groupoid image is the single arrow
    // (g, x).
    auto basis = [&](size_t g, size_t x) {
      auto e = CrossedProductElement(act, p, N);
      e.set(g, act.act(g, x), PadicScalar::from_integer(1, p, N));
      return e;
    };
    // Arrows (g, x): source x, range g.x. Identify (g,x) with the matrix
    // unit E_{g.x, x}; products must satisfy E_{ab} E_{cd} = delta_{bc} E_{ad}.
    for (size_t g1 = 0; g1 < 2; ++g1)
      for (size_t x1 = 0; x1 < 2; ++x1)
        for (size_t g2 = 0; g2 < 2; ++g2)
          for (size_t x2 = 0; x2 < 2; ++x2) {
            auto prod = crossed_convolve(basis(g1, x1), basis(g2, x2));
            auto img = action_groupoid_iso(prod, gpd);
            bool match = (x1 == act.act(g2, x2));
            for (size_t a = 0; a < gpd.arrow_count(); ++a) {
              bool is_target = match &&
                               gpd.source(a) == x2 &&
                               gpd.range(a) == act.act(g1, x1);
              if (is_target)
                CHECK(img.at(a).lift() == 1);
              else
                CHECK(img.at(a).is_zero());
            }
          }
  }
}

TEST_CASE("larger fixtures stay multiplicative") {
  long p = 2;
  int N = 8;
  // Z/4 acting on 4 points cyclically, and Z/2 x Z/2 regular action shape.
  std::vector<GroupAction> fixtures;
  {
    auto z4 = FiniteGroup::cyclic(4);
    std::vector<std::vector<size_t>> perms(4, std::vector<size_t>(4));
    for (size_t g = 0; g < 4; ++g)
      for (size_t x = 0; x < 4; ++x) perms[g][x] = (x + g) % 4;
    fixtures.emplace_back(z4, std::vector<std::string>{"a", "b", "c", "d"},
                          perms);
  }
  {
    auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                          FiniteGroup::cyclic(2));
    std::vector<std::vector<size_t>> perms;
    for (size_t g = 0; g < 4; ++g) {
      std::vector<size_t> row(4);
      for (size_t x = 0; x < 4; ++x) row[x] = v4.mul(g, x);
      perms.push_back(row);
    }
    fixtures.emplace_back(v4, v4.labels(), perms);
  }
  std::mt19937_64 rng(6);
  for (const auto& act : fixtures) {
    auto gpd = FiniteGroupoid::action_groupoid(act);
    for (int iter = 0; iter < 25; ++iter) {
      auto phi = random_element(act, p, N, rng);
      auto psi = random_element(act, p, N, rng);
      CHECK(groupoid_convolve(action_groupoid_iso(phi, gpd),
                              action_groupoid_iso(psi, gpd))
                .congruent(action_groupoid_iso(crossed_convolve(phi, psi), gpd)));
      auto rho = crossed_product_representation(phi);
      CHECK(op_norm(rho) == phi.sup_norm());
    }
  }
}
