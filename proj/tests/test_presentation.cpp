#include "doctest.h"
#include "hsa/instances.hpp"
#include "hsa/presentation.hpp"
#include "test_util.hpp"

using namespace hsa;

namespace {

// z0, z1 with the deformed reordering rule z1 z0 -> z0 z1 + (i k^-1) z1
std::shared_ptr<const Presentation> deformed_pair() {
  std::vector<GeneratorDecl> gens{{"z0", 0, 0}, {"z1", 0, 1}};
  std::vector<RawRule> rules;
  rules.push_back({1, 0,
                   {{Word({0, 1}), Scalar::one()},
                    {Word::single(1), Scalar::i() * Scalar::kappa(-1)}}});
  return Presentation::create(std::move(gens), std::move(rules));
}

}  // namespace

TEST_SUITE_BEGIN("presentation");

TEST_CASE("registration accepts the deformed pair") {
  auto p = deformed_pair();
  CHECK(p->rules().size() == 1);
  CHECK(p->rules()[0].kind == RuleKind::Reorder);
}

TEST_CASE("registration rejects an upward-oriented rule") {
  std::vector<GeneratorDecl> gens{{"z0", 0, 0}, {"z1", 0, 1}};
  std::vector<RawRule> rules;
  rules.push_back({0, 1, {{Word({1, 0}), Scalar::one()}}});
  rules.push_back({1, 0, {{Word({0, 1}), Scalar::one()}}});
  CHECK_THROWS_WITH_AS(Presentation::create(std::move(gens), std::move(rules)),
                       doctest::Contains("NonTerminatingRule"), Error);
}

TEST_CASE("registration demands coverage of misordered pairs") {
  std::vector<GeneratorDecl> gens{{"z0", 0, 0}, {"z1", 0, 1}};
  CHECK_THROWS_WITH_AS(Presentation::create(std::move(gens), {}),
                       doctest::Contains("MissingRule"), Error);
}

TEST_CASE("registration rejects duplicate names") {
  std::vector<GeneratorDecl> gens{{"x", 0, 0}, {"x", 0, 1}};
  CHECK_THROWS_WITH_AS(Presentation::create(std::move(gens), {}),
                       doctest::Contains("DuplicateGenerator"), Error);
}

TEST_CASE("grassmann pair is accepted") {
  auto p = test::grassmann2();
  CHECK(p->rules().size() == 3);
}

TEST_CASE("normal forms") {
  auto g = test::grassmann2();
  CHECK(Element::monomial(g, Word({0, 0})).is_zero());
  CHECK(Element::monomial(g, Word({1, 0})) == -Element::monomial(g, Word({0, 1})));

  auto p = deformed_pair();
  Element got = Element::monomial(p, Word({1, 0}));
  Element want = Element::monomial(p, Word({0, 1})) +
                 Element::monomial(p, Word::single(1), Scalar::i() * Scalar::kappa(-1));
  CHECK(got == want);
}

TEST_CASE("products") {
  auto p = deformed_pair();
  Element z0 = Element::generator(p, 0), z1 = Element::generator(p, 1);
  CHECK(z0 * z1 == Element::monomial(p, Word({0, 1})));
  CHECK(z1 * z0 == Element::monomial(p, Word({0, 1})) +
                       Element::monomial(p, Word::single(1), Scalar::i() * Scalar::kappa(-1)));

  auto g = test::grassmann2();
  Element th1 = Element::generator(g, 0), th2 = Element::generator(g, 1);
  Element sum = th1 + th2;
  // oracle: expand the square term by term
  Element expanded = Element::zero(g);
  for (const Word& wa : {Word::single(0), Word::single(1)})
    for (const Word& wb : {Word::single(0), Word::single(1)})
      expanded += Element::monomial(g, wa.concat(wb));
  CHECK(expanded.is_zero());
  CHECK((sum * sum).is_zero());
}

TEST_CASE("parity classification") {
  auto cs = make_chiral_superspace().algebra;
  auto th1 = *cs->find("th1");
  auto th2 = *cs->find("th2");
  auto z0 = *cs->find("z0");
  CHECK(Element::monomial(cs, Word({th1, th2})).parity_class() == ParityClass::Even);
  CHECK(Element::monomial(cs, Word({z0, th1})).parity_class() == ParityClass::Odd);
  CHECK((Element::generator(cs, z0) + Element::generator(cs, th1)).parity_class() ==
        ParityClass::Mixed);
  CHECK(Element::zero(cs).parity_class() == ParityClass::Zero);
}

TEST_CASE("mixed-presentation products are rejected") {
  auto a = deformed_pair();
  auto b = test::grassmann2();
  CHECK_THROWS_WITH_AS(Element::generator(a, 0) * Element::generator(b, 0),
                       doctest::Contains("MixedPresentation"), Error);
}

TEST_CASE("local confluence of an abelian presentation") {
  std::vector<GeneratorDecl> gens;
  std::vector<RawRule> rules;
  for (int k = 0; k < 3; ++k) gens.push_back({"x" + std::to_string(k), 0, k});
  for (GenId a = 0; a < 3; ++a)
    for (GenId b = 0; b < a; ++b) rules.push_back({a, b, {{Word({b, a}), Scalar::one()}}});
  auto p = Presentation::create(std::move(gens), std::move(rules));
  CHECK(p->local_confluence(100).empty());
}

TEST_CASE("local confluence flags inconsistent structure constants") {
  // brackets [y,x] = z, [z,x] = 0, [z,y] = y violate the Jacobi identity,
  // so the reordering rules cannot resolve all overlaps
  std::vector<GeneratorDecl> gens{{"x", 0, 0}, {"y", 0, 1}, {"zz", 0, 2}};
  std::vector<RawRule> rules;
  rules.push_back({1, 0, {{Word({0, 1}), Scalar::one()}, {Word::single(2), Scalar::one()}}});
  rules.push_back({2, 0, {{Word({0, 2}), Scalar::one()}}});
  rules.push_back({2, 1, {{Word({1, 2}), Scalar::one()}, {Word::single(1), Scalar::one()}}});
  auto p = Presentation::create(std::move(gens), std::move(rules));
  auto issues = p->local_confluence(100);
  CHECK(!issues.empty());
}

TEST_CASE("normal form is idempotent on random inputs") {
  auto cs = make_chiral_superspace().algebra;
  Sampler rng(717273);
  for (int t = 0; t < 150; ++t) {
    Element e = test::random_element(cs, rng);
    CHECK(cs->normal_form(e) == e);
  }
}

TEST_CASE("multiplication is associative on random triples") {
  auto cs = make_chiral_superspace().algebra;
  auto sl = make_super_lorentz().algebra;
  Sampler rng(818283);
  for (auto& p : {cs, sl}) {
    for (int t = 0; t < 60; ++t) {
      Element a = test::random_element(p, rng);
      Element b = test::random_element(p, rng);
      Element c = test::random_element(p, rng);
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("pure (anti)commutation presentations supercommute") {
  auto g = test::grassmann2();
  Sampler rng(919293);
  for (int t = 0; t < 80; ++t) {
    Element a = test::random_homogeneous(g, rng, static_cast<int>(rng.pick(2)));
    Element b = test::random_homogeneous(g, rng, static_cast<int>(rng.pick(2)));
    int pa = a.parity_class() == ParityClass::Odd ? 1 : 0;
    int pb = b.parity_class() == ParityClass::Odd ? 1 : 0;
    Element rhs = (pa * pb) ? -(b * a) : b * a;
    CHECK(a * b == rhs);
  }
}

TEST_SUITE_END();
