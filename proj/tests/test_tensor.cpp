#include "doctest.h"
#include "hsa/instances.hpp"
#include "hsa/tensor.hpp"
#include "test_util.hpp"

using namespace hsa;

namespace {

TensorElement simple(const Element& a, const Element& b) {
  return TensorElement::outer({a, b});
}

}  // namespace

TEST_SUITE_BEGIN("tensor");

TEST_CASE("crossing sign on odd factors") {
  auto g = test::grassmann2();
  Element one = Element::unit(g);
  Element th1 = Element::generator(g, 0), th2 = Element::generator(g, 1);

  CHECK(simple(one, th1) * simple(th2, one) == -simple(th2, th1));
  CHECK(simple(th1, th1) * simple(th2, th2) == -simple(th1 * th2, th1 * th2));

  auto cs = make_chiral_superspace().algebra;
  Element z0 = Element::generator(cs, *cs->find("z0"));
  Element z1 = Element::generator(cs, *cs->find("z1"));
  Element cone = Element::unit(cs);
  CHECK(simple(z0, cone) * simple(cone, z1) == simple(z0, z1));
}

TEST_CASE("graded flip") {
  auto g = test::grassmann2();
  Element one = Element::unit(g);
  Element th1 = Element::generator(g, 0), th2 = Element::generator(g, 1);
  auto cs = make_chiral_superspace().algebra;
  Element z0 = Element::generator(cs, *cs->find("z0"));
  Element cth1 = Element::generator(cs, *cs->find("th1"));

  CHECK(simple(th1, th2).graded_flip(0) == -simple(th2, th1));
  CHECK(TensorElement::outer({z0, cth1}).graded_flip(0) == TensorElement::outer({cth1, z0}));

  Sampler rng(112233);
  for (int t = 0; t < 60; ++t) {
    TensorElement x = TensorElement::outer(
        {test::random_element(cs, rng), test::random_element(cs, rng)});
    CHECK(x.graded_flip(0).graded_flip(0) == x);
  }
}

TEST_CASE("factorwise application splices primitively") {
  auto cs = make_chiral_superspace().algebra;
  auto hopf = make_chiral_superspace();
  Element z0 = Element::generator(cs, *cs->find("z0"));
  Element z1 = Element::generator(cs, *cs->find("z1"));

  TensorElement x = TensorElement::outer({z0, z1});
  TensorElement spliced = x.apply_factorwise_tensor(
      1, {cs, cs}, [&](const Word& w) { return coproduct_word(hopf, w); });
  TensorElement want = TensorElement::outer({z0, z1, Element::unit(cs)}) +
                       TensorElement::outer({z0, Element::unit(cs), z1});
  CHECK(spliced == want);

  // identity map leaves the tensor unchanged
  CHECK(x.apply_factorwise(0, cs, [&](const Word& w) {
    return Element::monomial(cs, w);
  }) == x);
}

TEST_CASE("counit collapse of a group-like factor") {
  auto sl = make_super_lorentz();
  auto cs = make_chiral_superspace().algebra;
  Element a11 = Element::generator(sl.algebra, *sl.algebra->find("A11"));
  Element z0 = Element::generator(cs, *cs->find("z0"));
  TensorElement x = TensorElement::outer({a11, z0});
  TensorElement collapsed =
      x.apply_counit_factor(0, [&](const Word& w) { return counit_word(sl, w); });
  CHECK(collapsed == TensorElement::outer({z0}));
}

TEST_CASE("adjacent multiplication") {
  auto sl = make_super_lorentz().algebra;
  auto cs = make_chiral_superspace().algebra;
  Element a11 = Element::generator(sl, *sl->find("A11"));
  Element a12 = Element::generator(sl, *sl->find("A12"));
  Element tb1 = Element::generator(sl, *sl->find("tb1"));
  Element tb2 = Element::generator(sl, *sl->find("tb2"));
  Element z0 = Element::generator(cs, *cs->find("z0"));
  Element th1 = Element::generator(cs, *cs->find("th1"));

  CHECK(TensorElement::outer({a11, a12, z0}).multiply_adjacent(0) ==
        TensorElement::outer({a11 * a12, z0}));
  CHECK(TensorElement::outer({tb1, tb1, z0}).multiply_adjacent(0).is_zero());

  // sigma_23 then m_12 on a four-factor tensor: the even-odd crossing keeps
  // the sign positive, then the odd letters multiply
  TensorElement x = TensorElement::outer({tb1, z0, tb2, th1});
  TensorElement stepped = x.graded_flip(1).multiply_adjacent(0);
  CHECK(stepped == TensorElement::outer({tb1 * tb2, z0, th1}));
}

TEST_CASE("tensor product is associative and unital") {
  auto cs = make_chiral_superspace().algebra;
  Sampler rng(223344);
  TensorElement unit = TensorElement::unit({cs, cs});
  for (int t = 0; t < 40; ++t) {
    TensorElement x = TensorElement::outer(
        {test::random_element(cs, rng, 2), test::random_element(cs, rng, 2)});
    TensorElement y = TensorElement::outer(
        {test::random_element(cs, rng, 2), test::random_element(cs, rng, 2)});
    TensorElement z = TensorElement::outer(
        {test::random_element(cs, rng, 2), test::random_element(cs, rng, 2)});
    CHECK((x * y) * z == x * (y * z));
    CHECK(unit * x == x);
    CHECK(x * unit == x);
  }
}

TEST_CASE("flip of a product against the direct computation") {
  auto cs = make_chiral_superspace().algebra;
  Sampler rng(334455);
  for (int t = 0; t < 120; ++t) {
    Element h = test::random_homogeneous(cs, rng, static_cast<int>(rng.pick(2)));
    Element hp = test::random_homogeneous(cs, rng, static_cast<int>(rng.pick(2)));
    Element g = test::random_homogeneous(cs, rng, static_cast<int>(rng.pick(2)));
    Element gp = test::random_homogeneous(cs, rng, static_cast<int>(rng.pick(2)));
    auto par = [](const Element& e) { return e.parity_class() == ParityClass::Odd ? 1 : 0; };
    int ph = par(h), php = par(hp), pg = par(g), pgp = par(gp);

    TensorElement lhs = (simple(h, hp) * simple(g, gp)).graded_flip(0);
    int exp = (ph + pg) * (php + pgp) + php * pg;
    TensorElement rhs = simple(hp * gp, h * g);
    if (exp & 1) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("shape errors") {
  auto cs = make_chiral_superspace().algebra;
  auto g = test::grassmann2();
  TensorElement a = TensorElement::unit({cs, cs});
  TensorElement b = TensorElement::unit({cs, cs, cs});
  CHECK_THROWS_WITH_AS(a * b, doctest::Contains("ArityMismatch"), Error);
  CHECK_THROWS_WITH_AS(a.graded_flip(1), doctest::Contains("BadIndex"), Error);
  TensorElement c = TensorElement::unit({cs, g});
  CHECK_THROWS_WITH_AS(a * c, doctest::Contains("PresentationMismatch"), Error);
  CHECK_THROWS_WITH_AS(c.multiply_adjacent(0), doctest::Contains("PresentationMismatch"),
                       Error);
}

TEST_SUITE_END();
