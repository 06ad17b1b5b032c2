#include "hsa/hopf.hpp"

#include <algorithm>

namespace hsa {

void HopfStructure::validate() const {
  const size_t n = algebra->size();
  if (coproduct_table.size() != n || counit_table.size() != n || antipode_table.size() != n)
    throw Error(Errc::DomainMismatch, "hopf tables do not cover every generator");
  for (GenId g = 0; g < n; ++g) {
    const int par = algebra->parity(g);
    const auto& cop = coproduct_table[g];
    if (cop.arity() != 2) throw Error(Errc::ArityMismatch, "coproduct entries must have arity 2");
    for (const auto& [t, c] : cop.terms()) {
      if (cop.tuple_parity(t) != par)
        throw Error(Errc::ParityMismatch,
                    "coproduct of '" + algebra->name_of(g) + "' does not preserve parity");
    }
    if (par == 1 && !counit_table[g].is_zero())
      throw Error(Errc::ParityMismatch,
                  "counit of odd generator '" + algebra->name_of(g) + "' must vanish");
    for (const auto& [w, c] : antipode_table[g].terms()) {
      if (algebra->word_parity(w) != par)
        throw Error(Errc::ParityMismatch,
                    "antipode of '" + algebra->name_of(g) + "' does not preserve parity");
    }
  }
}

bool HopfStructure::structural_equal(const HopfStructure& o) const {
  if (!algebra->structural_equal(*o.algebra)) return false;
  if (coproduct_table.size() != o.coproduct_table.size()) return false;
  for (size_t g = 0; g < coproduct_table.size(); ++g) {
    if (!(coproduct_table[g] == o.coproduct_table[g])) return false;
    if (!(counit_table[g] == o.counit_table[g])) return false;
    if (!(antipode_table[g] == o.antipode_table[g])) return false;
  }
  return true;
}

TensorElement coproduct_word(const HopfStructure& h, const Word& w) {
  TensorElement acc = TensorElement::unit({h.algebra, h.algebra});
  for (GenId g : w.ids) acc = acc * h.coproduct_table[g];
  return acc;
}

TensorElement coproduct(const HopfStructure& h, const Element& e) {
  TensorElement acc = TensorElement::zero({h.algebra, h.algebra});
  for (const auto& [w, c] : e.terms()) acc = acc + coproduct_word(h, w).scaled(c);
  return acc;
}

Scalar counit_word(const HopfStructure& h, const Word& w) {
  Scalar acc = Scalar::one();
  for (GenId g : w.ids) {
    acc = acc * h.counit_table[g];
    if (acc.is_zero()) break;
  }
  return acc;
}

Scalar counit(const HopfStructure& h, const Element& e) {
  Scalar acc;
  for (const auto& [w, c] : e.terms()) acc += counit_word(h, w) * c;
  return acc;
}

Element antipode_word(const HopfStructure& h, const Word& w) {
  // S(g_1...g_k) = (-1)^{sum_{i<j} p(g_i)p(g_j)} S(g_k)...S(g_1)
  int sign_exp = 0;
  int odd_seen = 0;
  for (GenId g : w.ids) {
    if (h.algebra->parity(g) == 1) {
      sign_exp += odd_seen;
      ++odd_seen;
    }
  }
  Element acc = Element::unit(h.algebra);
  for (auto it = w.ids.rbegin(); it != w.ids.rend(); ++it) acc = acc * h.antipode_table[*it];
  return (sign_exp & 1) ? -acc : acc;
}

Element antipode(const HopfStructure& h, const Element& e) {
  Element acc = Element::zero(h.algebra);
  for (const auto& [w, c] : e.terms()) acc += antipode_word(h, w).scaled(c);
  return acc;
}

std::vector<Word> sample_words(const Presentation& p, int max_degree, int samples, Sampler& rng) {
  std::vector<Word> out;
  for (int d = 2; d <= max_degree; ++d) {
    std::vector<Word> all = p.normal_words(d);
    if (static_cast<int>(all.size()) <= samples) {
      out.insert(out.end(), all.begin(), all.end());
      continue;
    }
    // partial Fisher-Yates for a deterministic draw without replacement
    for (int k = 0; k < samples; ++k) {
      size_t j = k + rng.pick(all.size() - k);
      std::swap(all[k], all[j]);
      out.push_back(all[k]);
    }
  }
  return out;
}

namespace {

std::vector<Word> verification_targets(const HopfStructure& h, int degree, int samples,
                                       Sampler& rng) {
  std::vector<Word> targets;
  for (GenId g = 0; g < h.algebra->size(); ++g) targets.push_back(Word::single(g));
  auto sampled = sample_words(*h.algebra, degree, samples, rng);
  targets.insert(targets.end(), sampled.begin(), sampled.end());
  return targets;
}

}  // namespace

CheckReport verify_bialgebra(const HopfStructure& h, int degree, int samples,
                             std::uint64_t seed) {
  CheckReport report;
  Sampler rng(seed);
  const auto& p = *h.algebra;
  auto delta_w = [&](const Word& w) { return coproduct_word(h, w); };

  for (const Word& w : verification_targets(h, degree, samples, rng)) {
    const std::string wtag = p.word_str(w);
    TensorElement cop = coproduct_word(h, w);

    TensorElement left = cop.apply_factorwise_tensor(0, {h.algebra, h.algebra}, delta_w);
    TensorElement right = cop.apply_factorwise_tensor(1, {h.algebra, h.algebra}, delta_w);
    report.add("bialgebra/" + h.name + "/coassoc/" + wtag, "coassociativity", left == right,
               left == right ? "" : "lhs=" + left.str() + " rhs=" + right.str(), seed);

    Element via_left =
        cop.apply_counit_factor(0, [&](const Word& u) { return counit_word(h, u); }).to_element();
    Element via_right =
        cop.apply_counit_factor(1, [&](const Word& u) { return counit_word(h, u); }).to_element();
    Element expect = Element::monomial(h.algebra, w);
    bool ok = via_left == expect && via_right == expect;
    report.add("bialgebra/" + h.name + "/counit/" + wtag, "counit-law", ok,
               ok ? "" : "left=" + via_left.str() + " right=" + via_right.str() +
                             " expected=" + expect.str(),
               seed);
  }

  // the tables must agree across every rewrite rule
  for (const auto& rule : p.rules()) {
    Word lhs({rule.a, rule.b});
    const std::string tag = p.name_of(rule.a) + "*" + p.name_of(rule.b);
    Element rhs(h.algebra);
    for (const auto& [w, c] : rule.rhs) rhs += Element::monomial(h.algebra, w, c);

    TensorElement dl = coproduct_word(h, lhs);
    TensorElement dr = coproduct(h, rhs);
    report.add("bialgebra/" + h.name + "/rule-coproduct/" + tag, "coproduct-well-defined",
               dl == dr, dl == dr ? "" : "lhs=" + dl.str() + " rhs=" + dr.str(), seed);

    Scalar el = counit_word(h, lhs), er = counit(h, rhs);
    report.add("bialgebra/" + h.name + "/rule-counit/" + tag, "counit-well-defined", el == er,
               el == er ? "" : "lhs=" + el.str() + " rhs=" + er.str(), seed);

    Element sl = antipode_word(h, lhs), sr = antipode(h, rhs);
    report.add("bialgebra/" + h.name + "/rule-antipode/" + tag, "antipode-well-defined",
               sl == sr, sl == sr ? "" : "lhs=" + sl.str() + " rhs=" + sr.str(), seed);
  }

  report.sort();
  return report;
}

CheckReport verify_antipode(const HopfStructure& h, int degree, int samples,
                            std::uint64_t seed) {
  CheckReport report;
  Sampler rng(seed);
  const auto& p = *h.algebra;
  auto s_w = [&](const Word& w) { return antipode_word(h, w); };

  for (const Word& w : verification_targets(h, degree, samples, rng)) {
    const std::string wtag = p.word_str(w);
    TensorElement cop = coproduct_word(h, w);
    Element expect = Element::unit(h.algebra).scaled(counit_word(h, w));

    Element left = cop.apply_factorwise(0, h.algebra, s_w).multiply_adjacent(0).to_element();
    Element right = cop.apply_factorwise(1, h.algebra, s_w).multiply_adjacent(0).to_element();
    bool ok = left == expect && right == expect;
    report.add("antipode/" + h.name + "/axiom/" + wtag, "antipode-axiom", ok,
               ok ? "" : "m(S,1)=" + left.str() + " m(1,S)=" + right.str() +
                             " expected=" + expect.str(),
               seed);

    TensorElement both = cop.apply_factorwise(0, h.algebra, s_w).apply_factorwise(1, h.algebra, s_w);
    TensorElement flipped = coproduct(h, antipode_word(h, w)).graded_flip(0);
    report.add("antipode/" + h.name + "/flip/" + wtag, "antipode-coproduct-flip",
               both == flipped,
               both == flipped ? "" : "lhs=" + both.str() + " rhs=" + flipped.str(), seed);
  }

  report.sort();
  return report;
}

}  // namespace hsa
