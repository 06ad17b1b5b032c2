#pragma once

#include <vector>

#include "hsa/hopf.hpp"
#include "hsa/report.hpp"

namespace hsa::test {

/// two odd anticommuting generators with vanishing squares
inline std::shared_ptr<const Presentation> grassmann2() {
  std::vector<GeneratorDecl> gens{{"th1", 1, 0}, {"th2", 1, 1}};
  std::vector<RawRule> rules;
  rules.push_back({1, 0, {{Word({0, 1}), -Scalar::one()}}});
  rules.push_back({0, 0, {}});
  rules.push_back({1, 1, {}});
  return Presentation::create(std::move(gens), std::move(rules));
}

inline HopfStructure grassmann2_hopf() {
  HopfStructure h;
  h.name = "grassmann2";
  h.algebra = grassmann2();
  for (GenId g = 0; g < 2; ++g) {
    TensorElement t = TensorElement::zero({h.algebra, h.algebra});
    t.add_term(WordTuple{{Word::single(g), Word::unit()}}, Scalar::one());
    t.add_term(WordTuple{{Word::unit(), Word::single(g)}}, Scalar::one());
    h.coproduct_table.push_back(t);
    h.counit_table.push_back(Scalar::zero());
    h.antipode_table.push_back(-Element::generator(h.algebra, g));
  }
  return h;
}

inline Scalar random_scalar(Sampler& rng, bool nonneg_exponents_only = false) {
  Scalar s;
  const size_t nterms = rng.pick(3);
  for (size_t t = 0; t <= nterms; ++t) {
    long num = static_cast<long>(rng.pick(9)) - 4;
    long den = 1 + static_cast<long>(rng.pick(3));
    int exp = nonneg_exponents_only ? -static_cast<int>(rng.pick(3))
                                    : static_cast<int>(rng.pick(5)) - 2;
    bool imag = rng.pick(2) == 1;
    GaussianRational c = imag ? GaussianRational(mpq_class(0), mpq_class(num, den))
                              : GaussianRational(mpq_class(num, den), mpq_class(0));
    s += Scalar(c, exp);
  }
  return s;
}

/// random linear combination of words (not necessarily normal) of degree
/// <= max_degree
inline Element random_element(const std::shared_ptr<const Presentation>& p, Sampler& rng,
                              int max_degree = 3, int max_terms = 3) {
  std::map<Word, Scalar> raw;
  const size_t nterms = 1 + rng.pick(max_terms);
  for (size_t t = 0; t < nterms; ++t) {
    std::vector<GenId> ids;
    const size_t len = rng.pick(max_degree + 1);
    for (size_t k = 0; k < len; ++k) ids.push_back(static_cast<GenId>(rng.pick(p->size())));
    long num = static_cast<long>(rng.pick(7)) - 3;
    if (num == 0) num = 1;
    auto [it, inserted] = raw.try_emplace(Word(std::move(ids)), Scalar(num));
    if (!inserted) it->second += Scalar(num);
  }
  return p->normalize(std::move(raw));
}

/// random homogeneous-parity element (all words of one parity)
inline Element random_homogeneous(const std::shared_ptr<const Presentation>& p, Sampler& rng,
                                  int parity, int max_degree = 2) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Element e = random_element(p, rng, max_degree, 2);
    auto pc = e.parity_class();
    if (parity == 0 && pc == ParityClass::Even) return e;
    if (parity == 1 && pc == ParityClass::Odd) return e;
  }
  // fall back to a bare generator of the wanted parity
  for (GenId g = 0; g < p->size(); ++g)
    if (p->parity(g) == parity) return Element::generator(p, g);
  return Element::zero(p);
}

inline size_t fails(const CheckReport& r) { return r.fail_count(); }

}  // namespace hsa::test
