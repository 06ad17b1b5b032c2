#include "doctest.h"
#include "hsa/scalar.hpp"
#include "test_util.hpp"

using namespace hsa;

namespace {
Scalar i_over(long den, int kexp) {
  return Scalar(GaussianRational(mpq_class(0), mpq_class(1, den)), kexp);
}
}  // namespace

TEST_SUITE_BEGIN("scalar");

TEST_CASE("addition merges and cancels") {
  CHECK(i_over(2, -1) + (-i_over(2, -1)) == Scalar::zero());
  CHECK(Scalar::one() + Scalar::zero() == Scalar::one());
  CHECK(Scalar::kappa(-1) + Scalar::kappa(-1) ==
        Scalar(GaussianRational(2), -1));
}

TEST_CASE("multiplication adds exponents and multiplies gaussian parts") {
  CHECK(i_over(2, -1) * Scalar(GaussianRational(2), 1) == Scalar::i());
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  Scalar mi_over_k = -Scalar::i() * Scalar::kappa(-1);
  CHECK(mi_over_k * mi_over_k == Scalar(GaussianRational(-1), -2));
}

TEST_CASE("monomial inversion") {
  Scalar two_k = Scalar(GaussianRational(2), 1);
  CHECK(two_k.inverse_monomial() == Scalar(GaussianRational::ratio(1, 2), -1));
  CHECK(Scalar::i().inverse_monomial() == -Scalar::i());
  Scalar onepk = Scalar::one() + Scalar::kappa(1);
  CHECK_THROWS_WITH_AS(onepk.inverse_monomial(), doctest::Contains("NotMonomial"), Error);
  CHECK_THROWS_WITH_AS(Scalar::zero().inverse_monomial(), doctest::Contains("ZeroDivision"),
                       Error);
}

TEST_CASE("classical limit") {
  CHECK((Scalar(3) + Scalar::i() * Scalar::kappa(-1)).classical_limit() == Scalar(3));
  CHECK((-i_over(2, -1)).classical_limit() == Scalar::zero());
  CHECK_THROWS_WITH_AS(Scalar::kappa(1).classical_limit(), doctest::Contains("DivergentLimit"),
                       Error);
}

TEST_CASE("ring laws on random values") {
  Sampler rng(414243);
  for (int t = 0; t < 300; ++t) {
    Scalar a = test::random_scalar(rng);
    Scalar b = test::random_scalar(rng);
    Scalar c = test::random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("monomial inverse is a two-sided inverse") {
  Sampler rng(515253);
  for (int t = 0; t < 200; ++t) {
    Scalar m = test::random_scalar(rng);
    if (!m.is_monomial()) continue;
    CHECK(m.inverse_monomial() * m == Scalar::one());
  }
}

TEST_CASE("classical limit is a ring map on non-positive exponents") {
  Sampler rng(616263);
  for (int t = 0; t < 200; ++t) {
    Scalar a = test::random_scalar(rng, /*nonneg_exponents_only=*/true);
    Scalar b = test::random_scalar(rng, true);
    CHECK((a + b).classical_limit() == a.classical_limit() + b.classical_limit());
    CHECK((a * b).classical_limit() == a.classical_limit() * b.classical_limit());
  }
}

TEST_CASE("canonical rendering") {
  CHECK(Scalar::zero().str() == "0");
  CHECK(Scalar(-3).str() == "-3");
  CHECK((-i_over(2, -1)).str() == "-(i/2)*k^-1");
  CHECK(Scalar::kappa(2).str() == "k^2");
  CHECK((Scalar(1) + Scalar::kappa(-1)).str() == "1 + k^-1");
  CHECK(Scalar(GaussianRational(mpq_class(1, 2), mpq_class(-3, 4))).str() == "(1/2-3*i/4)");
}

TEST_SUITE_END();
