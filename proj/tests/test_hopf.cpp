#include "doctest.h"
#include "hsa/hopf.hpp"
#include "hsa/instances.hpp"
#include "test_util.hpp"

using namespace hsa;

TEST_SUITE_BEGIN("hopf");

TEST_CASE("primitive coproduct extends multiplicatively with signs") {
  HopfStructure h = test::grassmann2_hopf();
  auto p = h.algebra;
  Element one = Element::unit(p);
  Element th1 = Element::generator(p, 0), th2 = Element::generator(p, 1);
  Element th12 = th1 * th2;

  CHECK(coproduct(h, th1) ==
        TensorElement::outer({th1, one}) + TensorElement::outer({one, th1}));

  TensorElement want = TensorElement::outer({th12, one}) + TensorElement::outer({th1, th2}) -
                       TensorElement::outer({th2, th1}) + TensorElement::outer({one, th12});
  CHECK(coproduct(h, th12) == want);
}

TEST_CASE("counit extends multiplicatively") {
  auto sl = make_super_lorentz();
  auto p = sl.algebra;
  CHECK(counit(sl, Element::generator(p, *p->find("A11"))) == Scalar::one());
  CHECK(counit(sl, Element::generator(p, *p->find("A12"))) == Scalar::zero());
  CHECK(counit(sl, Element::generator(p, *p->find("tb1"))) == Scalar::zero());
  // multiplicativity over a product of two group-likes
  Element a11 = Element::generator(p, *p->find("A11"));
  Element a22 = Element::generator(p, *p->find("A22"));
  CHECK(counit(sl, a11 * a22) == Scalar::one());

  auto cs = make_chiral_superspace();
  Element z0 = Element::generator(cs.algebra, 0), z1 = Element::generator(cs.algebra, 1);
  CHECK(counit(cs, z0 * z1) == Scalar::zero());
}

TEST_CASE("antipode is a graded antihomomorphism") {
  HopfStructure h = test::grassmann2_hopf();
  auto p = h.algebra;
  Element th1 = Element::generator(p, 0), th2 = Element::generator(p, 1);
  CHECK(antipode(h, th1) == -th1);
  // S(th1 th2) = -S(th2) S(th1) = -th2 th1 = +th1 th2
  CHECK(antipode(h, th1 * th2) == th1 * th2);
}

TEST_CASE("adjugate antipode inverts the group-like matrix") {
  auto sl = make_super_lorentz();
  auto p = sl.algebra;
  auto A = [&](int a, int b) {
    return Element::generator(p, *p->find("A" + std::to_string(a) + std::to_string(b)));
  };
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      Element acc = Element::zero(p);
      for (int c = 1; c <= 2; ++c) acc += antipode(sl, A(a, c)) * A(c, b);
      CHECK(acc == (a == b ? Element::unit(p) : Element::zero(p)));
    }
  }
}

TEST_CASE("verifiers pass on the bundled factors") {
  auto cs = make_chiral_superspace();
  auto sl = make_super_lorentz();
  for (const auto& h : {cs, sl}) {
    CHECK(test::fails(verify_bialgebra(h, 2, 10, kDefaultSeed)) == 0);
    CHECK(test::fails(verify_antipode(h, 2, 10, kDefaultSeed)) == 0);
  }
}

TEST_CASE("mutated coproduct table is caught by the counit law") {
  HopfStructure h = test::grassmann2_hopf();
  TensorElement broken = TensorElement::zero({h.algebra, h.algebra});
  broken.add_term(WordTuple{{Word::single(0), Word::unit()}}, Scalar::one());
  h.coproduct_table[0] = broken;  // drops the 1 (x) th1 leg
  auto report = verify_bialgebra(h, 2, 10, kDefaultSeed);
  bool counit_failed = false;
  for (const auto& r : report.records())
    if (!r.pass && r.anchor == "counit-law") counit_failed = true;
  CHECK(counit_failed);
}

TEST_CASE("coproduct is an algebra map into the graded square") {
  auto cs = make_chiral_superspace();
  Sampler rng(445566);
  for (int t = 0; t < 40; ++t) {
    Element x = test::random_element(cs.algebra, rng, 2);
    Element y = test::random_element(cs.algebra, rng, 2);
    CHECK(coproduct(cs, x * y) == coproduct(cs, x) * coproduct(cs, y));
  }
}

TEST_CASE("counit of the antipode and parity preservation") {
  auto sl = make_super_lorentz();
  for (GenId g = 0; g < sl.algebra->size(); ++g) {
    Element e = Element::generator(sl.algebra, g);
    CHECK(counit(sl, antipode(sl, e)) == counit(sl, e));
  }
}

TEST_SUITE_END();
