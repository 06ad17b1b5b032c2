#include "hsa/bicross.hpp"

#include <algorithm>

namespace hsa {

namespace {

constexpr int kMaxExpansionDepth = 256;
constexpr std::uint64_t kGateSeed = 0x1CEB00DA;

std::string pair_tag(const Presentation& pa, const Word& a, const Presentation& pb,
                     const Word& b) {
  return pa.word_str(a) + "|" + pb.word_str(b);
}

}  // namespace

void BicrossData::validate() const {
  h1.validate();
  h2.validate();
  const size_t n1 = h1.algebra->size(), n2 = h2.algebra->size();
  if (action.entries.size() != n2)
    throw Error(Errc::DomainMismatch, "action table does not cover every acted generator");
  for (GenId a = 0; a < n2; ++a) {
    if (action.entries[a].size() != n1)
      throw Error(Errc::DomainMismatch,
                  "action table row '" + h2.algebra->name_of(a) + "' is incomplete");
    for (GenId g = 0; g < n1; ++g) {
      const Element& img = action.entries[a][g];
      const int want = (h2.algebra->parity(a) + h1.algebra->parity(g)) & 1;
      for (const auto& [w, c] : img.terms()) {
        if (h2.algebra->word_parity(w) != want)
          throw Error(Errc::ParityMismatch, "action entry " + h2.algebra->name_of(a) + " <| " +
                                                h1.algebra->name_of(g) +
                                                " is not parity-additive");
      }
    }
  }
  if (coaction.entries.size() != n1)
    throw Error(Errc::DomainMismatch, "coaction table does not cover every generator");
  for (GenId g = 0; g < n1; ++g) {
    const TensorElement& img = coaction.entries[g];
    if (img.arity() != 2)
      throw Error(Errc::ArityMismatch, "coaction entries must have arity 2");
    for (const auto& [t, c] : img.terms()) {
      int par = h2.algebra->word_parity(t.words[0]) ^ h1.algebra->word_parity(t.words[1]);
      if (par != h1.algebra->parity(g))
        throw Error(Errc::ParityMismatch,
                    "coaction of '" + h1.algebra->name_of(g) + "' does not preserve parity");
    }
  }
}

ActionTable trivial_action(const HopfStructure& h1, const HopfStructure& h2) {
  ActionTable t;
  t.entries.resize(h2.algebra->size());
  for (GenId a = 0; a < h2.algebra->size(); ++a) {
    for (GenId g = 0; g < h1.algebra->size(); ++g) {
      t.entries[a].push_back(
          Element::generator(h2.algebra, a).scaled(h1.counit_table[g]));
    }
  }
  return t;
}

CoactionTable trivial_coaction(const HopfStructure& h1, const HopfStructure& h2) {
  CoactionTable t;
  for (GenId g = 0; g < h1.algebra->size(); ++g) {
    TensorElement e = TensorElement::zero({h2.algebra, h1.algebra});
    e.add_term(WordTuple{{Word::unit(), Word::single(g)}}, Scalar::one());
    t.entries.push_back(e);
  }
  return t;
}

struct BicrossOps::DepthGuard {
  explicit DepthGuard(const BicrossOps& ops) : ops_(ops) {
    if (++ops_.depth_ > kMaxExpansionDepth)
      throw Error(Errc::ExpansionBudget, "action/coaction expansion recurses too deeply");
  }
  ~DepthGuard() { --ops_.depth_; }
  const BicrossOps& ops_;
};

Element BicrossOps::act_word_gen(const Word& a, GenId g) const {
  if (a.empty())
    return Element::unit(d_.h2.algebra).scaled(d_.h1.counit_table[g]);
  if (a.size() == 1) return d_.action.entries[a.ids[0]][g];

  auto key = std::make_pair(a, g);
  auto hit = act_cache_.find(key);
  if (hit != act_cache_.end()) return hit->second;

  DepthGuard guard(*this);
  // (a b) <| h = (-1)^{p(h_(1)) p(b)} (a <| h_(1)) (b <| h_(2)) on the
  // leading-letter split a = first * rest
  Word first = a.slice(0, 1), rest = a.slice(1, a.size());
  const int p_rest = d_.h2.algebra->word_parity(rest);
  Element out = Element::zero(d_.h2.algebra);
  for (const auto& [t, c] : d_.h1.coproduct_table[g].terms()) {
    const Word& u = t.words[0];
    const Word& v = t.words[1];
    Element left = act_word_word(first, u);
    if (left.is_zero()) continue;
    Element right = act_word_word(rest, v);
    if (right.is_zero()) continue;
    Scalar coeff = c;
    if ((d_.h1.algebra->word_parity(u) * p_rest) & 1) coeff = -coeff;
    out += (left * right).scaled(coeff);
  }
  act_cache_.emplace(std::move(key), out);
  return out;
}

Element BicrossOps::act_word_word(const Word& a, const Word& h) const {
  Element acc = Element::monomial(d_.h2.algebra, a);
  for (GenId g : h.ids) {
    if (acc.is_zero()) break;
    acc = act_element_gen(acc, g);
  }
  return acc;
}

Element BicrossOps::act_element_gen(const Element& a, GenId g) const {
  Element out = Element::zero(d_.h2.algebra);
  for (const auto& [w, c] : a.terms()) out += act_word_gen(w, g).scaled(c);
  return out;
}

Element BicrossOps::act_element_word(const Element& a, const Word& h) const {
  Element acc = a;
  for (GenId g : h.ids) {
    if (acc.is_zero()) break;
    acc = act_element_gen(acc, g);
  }
  return acc;
}

Element BicrossOps::act(const Element& a, const Element& h) const {
  Element out = Element::zero(d_.h2.algebra);
  for (const auto& [wh, ch] : h.terms()) {
    Element img = act_element_word(a, wh);
    out += img.scaled(ch);
  }
  return out;
}

TensorElement BicrossOps::coact_product_formula(const Word& h, const Word& g) const {
  // beta(h g) = (-1)^{p(h^(2)) [p(g_(1)) + p(g_(2)^(1))]}
  //             (h^(1) <| g_(1)) g_(2)^(1)  (x)  h^(2) g_(2)^(2)
  const auto& p1 = d_.h1.algebra;
  const auto& p2 = d_.h2.algebra;
  TensorElement out = TensorElement::zero({p2, p1});
  TensorElement bh = coact_word(h);
  for (const auto& [ht, hc] : bh.terms()) {
    const Word& u = ht.words[0];  // h^(1) in H2
    const Word& v = ht.words[1];  // h^(2) in H1
    const int pv = p1->word_parity(v);
    TensorElement dg = coproduct_word(d_.h1, g);
    for (const auto& [dt, dc] : dg.terms()) {
      const Word& g1 = dt.words[0];
      const Word& g2 = dt.words[1];
      Element acted = act_word_word(u, g1);
      if (acted.is_zero()) continue;
      TensorElement bg2 = coact_word(g2);
      for (const auto& [bt, bc] : bg2.terms()) {
        const Word& r = bt.words[0];  // g_(2)^(1) in H2
        const Word& s = bt.words[1];  // g_(2)^(2) in H1
        Scalar coeff = hc * dc * bc;
        if ((pv * ((p1->word_parity(g1) + p2->word_parity(r)) & 1)) & 1) coeff = -coeff;
        Element slot1 = acted * Element::monomial(p2, r);
        if (slot1.is_zero()) continue;
        Element slot2 = Element::monomial(p1, v) * Element::monomial(p1, s);
        if (slot2.is_zero()) continue;
        out = out + TensorElement::outer({slot1, slot2}).scaled(coeff);
      }
    }
  }
  return out;
}

TensorElement BicrossOps::coact_word(const Word& h) const {
  const auto& p1 = d_.h1.algebra;
  const auto& p2 = d_.h2.algebra;
  if (h.empty()) return TensorElement::unit({p2, p1});
  if (h.size() == 1) return d_.coaction.entries[h.ids[0]];

  auto hit = coact_cache_.find(h);
  if (hit != coact_cache_.end()) return hit->second;

  DepthGuard guard(*this);
  TensorElement out = coact_product_formula(h.slice(0, h.size() - 1), h.slice(h.size() - 1, h.size()));
  coact_cache_.emplace(h, out);
  return out;
}

TensorElement BicrossOps::coact(const Element& h) const {
  TensorElement out = TensorElement::zero({d_.h2.algebra, d_.h1.algebra});
  for (const auto& [w, c] : h.terms()) out = out + coact_word(w).scaled(c);
  return out;
}

namespace {

/// generators first, then sampled higher-degree normal words
std::vector<Word> check_targets(const Presentation& p, int degree, int samples, Sampler& rng) {
  std::vector<Word> out;
  for (GenId g = 0; g < p.size(); ++g) out.push_back(Word::single(g));
  auto sampled = sample_words(p, degree, samples, rng);
  out.insert(out.end(), sampled.begin(), sampled.end());
  return out;
}

}  // namespace

CheckReport check_module_algebra(const BicrossData& d, int degree, int samples,
                                 std::uint64_t seed) {
  d.validate();
  CheckReport report;
  Sampler rng(seed);
  BicrossOps ops(d);
  const auto& p1 = *d.h1.algebra;
  const auto& p2 = *d.h2.algebra;

  // product rule on pairs (a, b) against each acting generator
  auto words2 = check_targets(p2, degree, samples, rng);
  std::vector<std::pair<Word, Word>> pairs;
  for (GenId a = 0; a < p2.size(); ++a)
    for (GenId b = 0; b < p2.size(); ++b) pairs.push_back({Word::single(a), Word::single(b)});
  for (int k = 0; k < samples; ++k)
    pairs.push_back({words2[rng.pick(words2.size())], words2[rng.pick(words2.size())]});

  for (const auto& [wa, wb] : pairs) {
    Element a = Element::monomial(d.h2.algebra, wa);
    Element b = Element::monomial(d.h2.algebra, wb);
    Element prod = a * b;
    const int pb = p2.word_parity(wb);
    for (GenId g = 0; g < p1.size(); ++g) {
      Element lhs = ops.act_element_gen(prod, g);
      Element rhs = Element::zero(d.h2.algebra);
      for (const auto& [t, c] : d.h1.coproduct_table[g].terms()) {
        Element left = ops.act_word_word(wa, t.words[0]);
        if (left.is_zero()) continue;
        Element right = ops.act_word_word(wb, t.words[1]);
        if (right.is_zero()) continue;
        Scalar coeff = c;
        if ((p1.word_parity(t.words[0]) * pb) & 1) coeff = -coeff;
        rhs += (left * right).scaled(coeff);
      }
      bool ok = lhs == rhs;
      report.add("module/product/" + pair_tag(p2, wa, p2, wb) + "|" + p1.name_of(g),
                 "action-product-rule", ok,
                 ok ? "" : "lhs=" + lhs.str() + " rhs=" + rhs.str(), seed);
    }
  }

  // iterated action on pairs of acting words
  auto words1 = check_targets(p1, degree, samples, rng);
  for (int k = 0; k < samples; ++k) {
    const Word& wh = words1[rng.pick(words1.size())];
    const Word& wg = words1[rng.pick(words1.size())];
    const Word& wa = words2[rng.pick(words2.size())];
    Element prod = Element::monomial(d.h1.algebra, wh) * Element::monomial(d.h1.algebra, wg);
    Element lhs = ops.act(Element::monomial(d.h2.algebra, wa), prod);
    Element rhs = ops.act_element_word(ops.act_word_word(wa, wh), wg);
    bool ok = lhs == rhs;
    report.add("module/iterate/" + pair_tag(p2, wa, p1, wh) + "|" + p1.word_str(wg),
               "action-iterated", ok, ok ? "" : "lhs=" + lhs.str() + " rhs=" + rhs.str(), seed);
  }

  // the extended action must agree across the rewrite rules of both factors
  for (const auto& rule : p2.rules()) {
    Word lhs_word({rule.a, rule.b});
    Element rhs(d.h2.algebra);
    for (const auto& [w, c] : rule.rhs) rhs += Element::monomial(d.h2.algebra, w, c);
    for (GenId g = 0; g < p1.size(); ++g) {
      Element lv = ops.act_word_gen(lhs_word, g);
      Element rv = ops.act_element_gen(rhs, g);
      bool ok = lv == rv;
      report.add("module/rule-acted/" + p2.word_str(lhs_word) + "|" + p1.name_of(g),
                 "action-respects-relations", ok,
                 ok ? "" : "lhs=" + lv.str() + " rhs=" + rv.str(), seed);
    }
  }
  for (const auto& rule : p1.rules()) {
    Word lhs_word({rule.a, rule.b});
    Element rhs(d.h1.algebra);
    for (const auto& [w, c] : rule.rhs) rhs += Element::monomial(d.h1.algebra, w, c);
    for (GenId a = 0; a < p2.size(); ++a) {
      Element lv = ops.act_word_word(Word::single(a), lhs_word);
      Element rv = ops.act(Element::generator(d.h2.algebra, a), rhs);
      bool ok = lv == rv;
      report.add("module/rule-acting/" + p2.name_of(a) + "|" + p1.word_str(lhs_word),
                 "action-respects-relations", ok,
                 ok ? "" : "lhs=" + lv.str() + " rhs=" + rv.str(), seed);
    }
  }

  report.sort();
  return report;
}

CheckReport check_comodule_coalgebra(const BicrossData& d, int degree, int samples,
                                     std::uint64_t seed) {
  d.validate();
  CheckReport report;
  Sampler rng(seed);
  BicrossOps ops(d);
  const auto& p1 = d.h1.algebra;
  const auto& p2 = d.h2.algebra;
  auto beta_w = [&](const Word& w) { return ops.coact_word(w); };
  auto delta1_w = [&](const Word& w) { return coproduct_word(d.h1, w); };
  auto delta2_w = [&](const Word& w) { return coproduct_word(d.h2, w); };

  for (const Word& w : check_targets(*p1, degree, samples, rng)) {
    const std::string wtag = p1->word_str(w);
    TensorElement bw = ops.coact_word(w);

    TensorElement lhs_a = bw.apply_factorwise_tensor(1, {p2, p1}, beta_w);
    TensorElement rhs_a = bw.apply_factorwise_tensor(0, {p2, p2}, delta2_w);
    report.add("comodule/coassoc/" + wtag, "coaction-coassociativity", lhs_a == rhs_a,
               lhs_a == rhs_a ? "" : "lhs=" + lhs_a.str() + " rhs=" + rhs_a.str(), seed);

    Element collapsed =
        bw.apply_counit_factor(0, [&](const Word& u) { return counit_word(d.h2, u); })
            .to_element();
    Element expect = Element::monomial(p1, w);
    report.add("comodule/counit/" + wtag, "coaction-counit", collapsed == expect,
               collapsed == expect ? "" : "lhs=" + collapsed.str() + " rhs=" + expect.str(),
               seed);

    TensorElement lhs_c = bw.apply_factorwise_tensor(1, {p1, p1}, delta1_w);
    TensorElement rhs_c = coproduct_word(d.h1, w)
                              .apply_factorwise_tensor(0, {p2, p1}, beta_w)
                              .apply_factorwise_tensor(2, {p2, p1}, beta_w)
                              .graded_flip(1)
                              .multiply_adjacent(0);
    report.add("comodule/coalgebra-map/" + wtag, "coaction-coalgebra-map", lhs_c == rhs_c,
               lhs_c == rhs_c ? "" : "lhs=" + lhs_c.str() + " rhs=" + rhs_c.str(), seed);
  }

  report.sort();
  return report;
}

CheckReport check_compatibility(const BicrossData& d, int degree, int samples,
                                std::uint64_t seed) {
  d.validate();
  CheckReport report;
  Sampler rng(seed);
  BicrossOps ops(d);
  const auto& p1 = *d.h1.algebra;
  const auto& p2 = *d.h2.algebra;

  auto words1 = check_targets(p1, degree, samples, rng);
  auto words2 = check_targets(p2, degree, samples, rng);
  std::vector<std::pair<Word, Word>> acted_pairs;  // (a in H2, h in H1)
  for (GenId a = 0; a < p2.size(); ++a)
    for (GenId g = 0; g < p1.size(); ++g)
      acted_pairs.push_back({Word::single(a), Word::single(g)});
  for (int k = 0; k < samples; ++k)
    acted_pairs.push_back({words2[rng.pick(words2.size())], words1[rng.pick(words1.size())]});

  for (const auto& [wa, wh] : acted_pairs) {
    const std::string tag = pair_tag(p2, wa, p1, wh);
    Element acted = ops.act_word_word(wa, wh);

    // counit compatibility
    Scalar lhs_e = counit(d.h2, acted);
    Scalar rhs_e = counit_word(d.h2, wa) * counit_word(d.h1, wh);
    report.add("compat/counit/" + tag, "compat-counit-of-action", lhs_e == rhs_e,
               lhs_e == rhs_e ? "" : "lhs=" + lhs_e.str() + " rhs=" + rhs_e.str(), seed);

    // coproduct of an acted element
    TensorElement lhs_d = coproduct(d.h2, acted);
    TensorElement rhs_d = TensorElement::zero({d.h2.algebra, d.h2.algebra});
    TensorElement dwa = coproduct_word(d.h2, wa);
    TensorElement dwh = coproduct_word(d.h1, wh);
    for (const auto& [at, ac] : dwa.terms()) {
      const Word& a1 = at.words[0];
      const Word& a2 = at.words[1];
      const int pa2 = p2.word_parity(a2);
      for (const auto& [ht, hc] : dwh.terms()) {
        const Word& h1w = ht.words[0];
        const Word& h2w = ht.words[1];
        Element first_base = ops.act_word_word(a1, h1w);
        if (first_base.is_zero()) continue;
        TensorElement bh2 = ops.coact_word(h2w);
        for (const auto& [bt, bc] : bh2.terms()) {
          const Word& r = bt.words[0];  // h_(2)^(1) in H2
          const Word& s = bt.words[1];  // h_(2)^(2) in H1
          Scalar coeff = ac * hc * bc;
          if ((pa2 * ((p1.word_parity(h1w) + p2.word_parity(r)) & 1)) & 1) coeff = -coeff;
          Element slot1 = first_base * Element::monomial(d.h2.algebra, r);
          if (slot1.is_zero()) continue;
          Element slot2 = ops.act_word_word(a2, s);
          if (slot2.is_zero()) continue;
          rhs_d = rhs_d + TensorElement::outer({slot1, slot2}).scaled(coeff);
        }
      }
    }
    report.add("compat/coproduct-of-action/" + tag, "compat-coproduct-of-action",
               lhs_d == rhs_d, lhs_d == rhs_d ? "" : "lhs=" + lhs_d.str() + " rhs=" + rhs_d.str(),
               seed);

    // mixed condition
    TensorElement lhs_m = TensorElement::zero({d.h2.algebra, d.h1.algebra});
    TensorElement rhs_m = TensorElement::zero({d.h2.algebra, d.h1.algebra});
    TensorElement dwh2 = coproduct_word(d.h1, wh);
    for (const auto& [ht, hc] : dwh2.terms()) {
      const Word& h1w = ht.words[0];
      const Word& h2w = ht.words[1];
      TensorElement bh1 = ops.coact_word(h1w);
      for (const auto& [bt, bc] : bh1.terms()) {
        Element slot1 = Element::monomial(d.h2.algebra, bt.words[0]) * ops.act_word_word(wa, h2w);
        if (slot1.is_zero()) continue;
        lhs_m = lhs_m + TensorElement::outer(
                            {slot1, Element::monomial(d.h1.algebra, bt.words[1])})
                            .scaled(hc * bc);
      }
      const int pa = p2.word_parity(wa);
      const int ph1 = p1.word_parity(h1w);
      Element acted1 = ops.act_word_word(wa, h1w);
      if (acted1.is_zero()) continue;
      TensorElement bh2m = ops.coact_word(h2w);
      for (const auto& [bt, bc] : bh2m.terms()) {
        Scalar coeff = hc * bc;
        int sign = pa * p2.word_parity(bt.words[0]) + ph1 * p1.word_parity(bt.words[1]);
        if (sign & 1) coeff = -coeff;
        Element slot1 = acted1 * Element::monomial(d.h2.algebra, bt.words[0]);
        if (slot1.is_zero()) continue;
        rhs_m = rhs_m + TensorElement::outer(
                            {slot1, Element::monomial(d.h1.algebra, bt.words[1])})
                            .scaled(coeff);
      }
    }
    report.add("compat/mixed/" + tag, "compat-mixed", lhs_m == rhs_m,
               lhs_m == rhs_m ? "" : "lhs=" + lhs_m.str() + " rhs=" + rhs_m.str(), seed);
  }

  // multiplicativity of the coaction over sampled acting pairs
  std::vector<std::pair<Word, Word>> co_pairs;
  for (GenId g = 0; g < p1.size(); ++g)
    for (GenId h = 0; h < p1.size(); ++h) co_pairs.push_back({Word::single(g), Word::single(h)});
  for (int k = 0; k < samples; ++k)
    co_pairs.push_back({words1[rng.pick(words1.size())], words1[rng.pick(words1.size())]});
  for (const auto& [wh, wg] : co_pairs) {
    const std::string tag = pair_tag(p1, wh, p1, wg);
    Element prod = Element::monomial(d.h1.algebra, wh) * Element::monomial(d.h1.algebra, wg);
    TensorElement lhs = ops.coact(prod);
    TensorElement rhs = ops.coact_product_formula(wh, wg);
    report.add("compat/coaction-product/" + tag, "coaction-multiplicativity", lhs == rhs,
               lhs == rhs ? "" : "lhs=" + lhs.str() + " rhs=" + rhs.str(), seed);
  }

  report.sort();
  return report;
}

Element BuiltBicross::embed1(const Element& e) const {
  Element out(hopf.algebra);
  for (const auto& [w, c] : e.terms()) out += Element::monomial(hopf.algebra, w, c);
  return out;
}

Word BuiltBicross::embed2_word(const Word& w) const {
  Word out = w;
  for (auto& id : out.ids) id = static_cast<GenId>(id + n1);
  return out;
}

Element BuiltBicross::embed2(const Element& e) const {
  Element out(hopf.algebra);
  for (const auto& [w, c] : e.terms()) out += Element::monomial(hopf.algebra, embed2_word(w), c);
  return out;
}

Element BuiltBicross::embed_mixed(const Word& h1w, const Word& h2w) const {
  return Element::monomial(hopf.algebra, h1w.concat(embed2_word(h2w)));
}

BuiltBicross build_bicrossproduct(const BicrossData& d, bool bypass_checks) {
  d.validate();
  if (!bypass_checks) {
    CheckReport gate;
    gate.merge(check_module_algebra(d, 2, 8, kGateSeed));
    gate.merge(check_comodule_coalgebra(d, 2, 8, kGateSeed));
    gate.merge(check_compatibility(d, 2, 8, kGateSeed));
    if (!gate.all_pass())
      throw Error(Errc::CompatibilityFailed,
                  std::to_string(gate.fail_count()) + " condition(s) failed:\n" +
                      gate.failure_summary());
  }

  BicrossOps ops(d);
  const auto& p1 = d.h1.algebra;
  const auto& p2 = d.h2.algebra;
  const size_t n1 = p1->size(), n2 = p2->size();

  BuiltBicross built;
  built.p1 = p1;
  built.p2 = p2;
  built.n1 = n1;

  // combined generators: the acting block first; order indexes are the ranks
  // of the factor order indexes, so block-internal orientations are kept
  std::vector<GeneratorDecl> gens;
  {
    auto ranked = [](const Presentation& p, int base) {
      std::vector<GeneratorDecl> out = p.generators();
      std::vector<int> keys;
      for (const auto& g : out) keys.push_back(g.order_index);
      std::sort(keys.begin(), keys.end());
      for (auto& g : out) {
        auto rank = std::lower_bound(keys.begin(), keys.end(), g.order_index) - keys.begin();
        g.order_index = base + static_cast<int>(rank);
      }
      return out;
    };
    gens = ranked(*p1, 0);
    auto right = ranked(*p2, static_cast<int>(n1));
    gens.insert(gens.end(), right.begin(), right.end());
  }

  std::vector<RawRule> rules;
  for (const auto& r : p1->rules()) {
    RawRule raw{r.a, r.b, {}};
    for (const auto& [w, c] : r.rhs) raw.rhs.push_back({w, c});
    rules.push_back(std::move(raw));
  }
  auto shift_word = [&](const Word& w) {
    Word out = w;
    for (auto& id : out.ids) id = static_cast<GenId>(id + n1);
    return out;
  };
  for (const auto& r : p2->rules()) {
    RawRule raw{static_cast<GenId>(r.a + n1), static_cast<GenId>(r.b + n1), {}};
    for (const auto& [w, c] : r.rhs) raw.rhs.push_back({shift_word(w), c});
    rules.push_back(std::move(raw));
  }
  // crossing rules realize the mixed product: a g = sum over the coproduct of
  // g of (-1)^{p(a)p(g_(1))} g_(1) (a <| g_(2))
  for (GenId a = 0; a < n2; ++a) {
    const int pa = p2->parity(a);
    for (GenId g = 0; g < n1; ++g) {
      RawRule raw{static_cast<GenId>(a + n1), g, {}};
      for (const auto& [t, c] : d.h1.coproduct_table[g].terms()) {
        const Word& u = t.words[0];
        const Word& v = t.words[1];
        Element acted = ops.act_word_word(Word::single(a), v);
        Scalar coeff = c;
        if ((pa * p1->word_parity(u)) & 1) coeff = -coeff;
        for (const auto& [w2, c2] : acted.terms())
          raw.rhs.push_back({u.concat(shift_word(w2)), coeff * c2});
      }
      rules.push_back(std::move(raw));
    }
  }

  auto combined = Presentation::create(std::move(gens), std::move(rules), n1);
  built.hopf.name = d.name + "_built";
  built.hopf.algebra = combined;

  auto embed_tensor12 = [&](const Word& h1w, const Word& h2w) {
    return Element::monomial(combined, h1w.concat(shift_word(h2w)));
  };

  // coproduct tables
  for (GenId g = 0; g < n1; ++g) {
    TensorElement entry = TensorElement::zero({combined, combined});
    for (const auto& [t, c] : d.h1.coproduct_table[g].terms()) {
      const Word& u = t.words[0];
      const Word& v = t.words[1];
      TensorElement bv = ops.coact_word(v);
      for (const auto& [bt, bc] : bv.terms()) {
        Element first = embed_tensor12(u, bt.words[0]);
        Element second = Element::monomial(combined, bt.words[1]);
        entry = entry + TensorElement::outer({first, second}).scaled(c * bc);
      }
    }
    built.hopf.coproduct_table.push_back(entry);
    built.hopf.counit_table.push_back(d.h1.counit_table[g]);
  }
  for (GenId a = 0; a < n2; ++a) {
    TensorElement entry = TensorElement::zero({combined, combined});
    for (const auto& [t, c] : d.h2.coproduct_table[a].terms()) {
      entry.add_term(WordTuple{{shift_word(t.words[0]), shift_word(t.words[1])}}, c);
    }
    built.hopf.coproduct_table.push_back(entry);
    built.hopf.counit_table.push_back(d.h2.counit_table[a]);
  }

  // antipode tables: S(g) = (-1)^{p(g^(2)) p(g^(1))} S(g^(1)) S(g^(2)) with
  // the H2 antipode landing left of the H1 one, resolved by crossing rules
  for (GenId g = 0; g < n1; ++g) {
    Element entry = Element::zero(combined);
    for (const auto& [t, c] : d.coaction.entries[g].terms()) {
      const Word& r = t.words[0];
      const Word& s = t.words[1];
      Scalar coeff = c;
      if ((p2->word_parity(r) * p1->word_parity(s)) & 1) coeff = -coeff;
      Element left = built.embed2(antipode_word(d.h2, r));
      Element right = built.embed1(antipode_word(d.h1, s));
      entry += (left * right).scaled(coeff);
    }
    built.hopf.antipode_table.push_back(entry);
  }
  for (GenId a = 0; a < n2; ++a)
    built.hopf.antipode_table.push_back(built.embed2(antipode_word(d.h2, Word::single(a))));

  built.hopf.validate();
  return built;
}

namespace {

std::shared_ptr<const Presentation> limit_presentation(const Presentation& p) {
  std::vector<RawRule> rules;
  for (const auto& r : p.rules()) {
    RawRule raw{r.a, r.b, {}};
    for (const auto& [w, c] : r.rhs) {
      Scalar lc = c.classical_limit();
      if (!lc.is_zero()) raw.rhs.push_back({w, lc});
    }
    rules.push_back(std::move(raw));
  }
  return Presentation::create(p.generators(), std::move(rules), p.crossing_boundary());
}

Element limit_element(const Element& e, const std::shared_ptr<const Presentation>& np) {
  Element out(np);
  for (const auto& [w, c] : e.terms()) {
    Scalar lc = c.classical_limit();
    if (!lc.is_zero()) out += Element::monomial(np, w, lc);
  }
  return out;
}

TensorElement limit_tensor(const TensorElement& t, TensorElement::Factors nf) {
  TensorElement out = TensorElement::zero(std::move(nf));
  for (const auto& [tup, c] : t.terms()) {
    Scalar lc = c.classical_limit();
    if (!lc.is_zero()) out.add_term(tup, lc);
  }
  return out;
}

HopfStructure limit_hopf(const HopfStructure& h) {
  HopfStructure out;
  out.name = h.name;
  out.algebra = limit_presentation(*h.algebra);
  for (GenId g = 0; g < h.algebra->size(); ++g) {
    out.coproduct_table.push_back(
        limit_tensor(h.coproduct_table[g], {out.algebra, out.algebra}));
    out.counit_table.push_back(h.counit_table[g].classical_limit());
    out.antipode_table.push_back(limit_element(h.antipode_table[g], out.algebra));
  }
  out.validate();
  return out;
}

}  // namespace

BicrossData classical_limit_of(const BicrossData& d) {
  BicrossData out;
  out.name = d.name;
  out.notes = d.notes;
  out.h1 = limit_hopf(d.h1);
  out.h2 = limit_hopf(d.h2);
  out.action.entries.resize(d.action.entries.size());
  for (size_t a = 0; a < d.action.entries.size(); ++a)
    for (const auto& e : d.action.entries[a])
      out.action.entries[a].push_back(limit_element(e, out.h2.algebra));
  for (const auto& t : d.coaction.entries)
    out.coaction.entries.push_back(limit_tensor(t, {out.h2.algebra, out.h1.algebra}));
  out.validate();
  return out;
}

CheckReport verify_built(const BicrossData& d, const BuiltBicross& built, int degree,
                         int samples, std::uint64_t seed) {
  CheckReport report;
  report.merge(verify_bialgebra(built.hopf, degree, samples, seed));
  report.merge(verify_antipode(built.hopf, degree, samples, seed));

  Sampler rng(seed);
  const auto& p = *built.hopf.algebra;
  auto words = check_targets(p, std::max(degree, 2), samples, rng);

  for (int k = 0; k < samples; ++k) {
    const Word& x = words[rng.pick(words.size())];
    const Word& y = words[rng.pick(words.size())];
    const Word& z = words[rng.pick(words.size())];
    Element ex = Element::monomial(built.hopf.algebra, x);
    Element ey = Element::monomial(built.hopf.algebra, y);
    Element ez = Element::monomial(built.hopf.algebra, z);
    Element lhs = (ex * ey) * ez;
    Element rhs = ex * (ey * ez);
    bool ok = lhs == rhs;
    report.add("built/assoc/" + p.word_str(x) + "|" + p.word_str(y) + "|" + p.word_str(z),
               "product-associativity", ok,
               ok ? "" : "lhs=" + lhs.str() + " rhs=" + rhs.str(), seed);
  }

  for (int k = 0; k < samples; ++k) {
    const Word& x = words[rng.pick(words.size())];
    const Word& y = words[rng.pick(words.size())];
    Element ex = Element::monomial(built.hopf.algebra, x);
    Element ey = Element::monomial(built.hopf.algebra, y);
    TensorElement lhs = coproduct(built.hopf, ex * ey);
    TensorElement rhs = coproduct(built.hopf, ex) * coproduct(built.hopf, ey);
    bool ok = lhs == rhs;
    report.add("built/homomorphism/" + p.word_str(x) + "|" + p.word_str(y),
               "coproduct-homomorphism", ok,
               ok ? "" : "lhs=" + lhs.str() + " rhs=" + rhs.str(), seed);
  }

  report.sort();
  return report;
}

}  // namespace hsa
