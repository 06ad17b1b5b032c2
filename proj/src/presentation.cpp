#include "hsa/presentation.hpp"

#include <algorithm>
#include <set>

namespace hsa {

namespace {

constexpr size_t kRewriteStepBudget = 50'000'000;

void add_term(std::map<Word, Scalar>& m, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = m.find(w);
  if (it == m.end()) {
    m.emplace(w, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) m.erase(it);
  }
}

}  // namespace

Element Element::unit(std::shared_ptr<const Presentation> p) {
  return monomial(std::move(p), Word::unit());
}

Element Element::monomial(std::shared_ptr<const Presentation> p, Word w, Scalar c) {
  std::map<Word, Scalar> raw;
  add_term(raw, w, c);
  Element e = p->normalize(std::move(raw));
  return e;
}

Element Element::generator(std::shared_ptr<const Presentation> p, GenId g) {
  return monomial(std::move(p), Word::single(g));
}

Element Element::operator+(const Element& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (pres_ != o.pres_)
    throw Error(Errc::MixedPresentation, "sum of elements over different presentations");
  Element out = *this;
  for (const auto& [w, c] : o.terms_) add_term(out.terms_, w, c);
  return out;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator-() const {
  Element out(pres_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

Element Element::scaled(const Scalar& c) const {
  Element out(pres_);
  if (c.is_zero()) return out;
  for (const auto& [w, cf] : terms_) {
    Scalar prod = cf * c;
    if (!prod.is_zero()) out.terms_.emplace(w, prod);
  }
  return out;
}

Element Element::operator*(const Element& o) const {
  if (pres_ != o.pres_) {
    if (!pres_ || !o.pres_ || !pres_->structural_equal(*o.pres_))
      throw Error(Errc::MixedPresentation, "product of elements over different presentations");
  }
  std::map<Word, Scalar> raw;
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) add_term(raw, wa.concat(wb), ca * cb);
  return pres_->normalize(std::move(raw));
}

bool Element::operator==(const Element& o) const {
  if (pres_ != o.pres_) {
    if (!pres_ || !o.pres_) return is_zero() && o.is_zero();
    if (!pres_->structural_equal(*o.pres_)) return false;
  }
  return terms_ == o.terms_;
}

ParityClass Element::parity_class() const {
  if (terms_.empty()) return ParityClass::Zero;
  bool even = false, odd = false;
  for (const auto& [w, c] : terms_) {
    (pres_->word_parity(w) == 0 ? even : odd) = true;
  }
  if (even && odd) return ParityClass::Mixed;
  return even ? ParityClass::Even : ParityClass::Odd;
}

Element Element::map_coefficients(const std::function<Scalar(const Scalar&)>& f) const {
  Element out(pres_);
  for (const auto& [w, c] : terms_) {
    Scalar fc = f(c);
    if (!fc.is_zero()) out.terms_.emplace(w, fc);
  }
  return out;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string cs = c.str();
    bool neg = cs.size() > 1 && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    bool multi = c.terms().size() > 1;
    std::string body;
    if (w.empty()) {
      body = multi ? "(" + cs + ")" : cs;
    } else if (cs == "1" && !multi) {
      body = pres_->word_str(w);
    } else {
      body = (multi ? "(" + cs + ")" : cs) + "*" + pres_->word_str(w);
    }
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

std::shared_ptr<const Presentation> Presentation::create(std::vector<GeneratorDecl> gens,
                                                         std::vector<RawRule> rules,
                                                         size_t crossing_boundary) {
  auto p = std::shared_ptr<Presentation>(new Presentation());
  {
    std::set<std::string> names;
    std::set<int> orders;
    for (const auto& g : gens) {
      if (!names.insert(g.name).second)
        throw Error(Errc::DuplicateGenerator, "generator name '" + g.name + "' declared twice");
      if (!orders.insert(g.order_index).second)
        throw Error(Errc::DuplicateGenerator,
                    "order index " + std::to_string(g.order_index) + " used twice");
      if (g.parity != 0 && g.parity != 1)
        throw Error(Errc::ParityMismatch, "generator '" + g.name + "' has parity outside {0,1}");
    }
  }
  p->gens_ = std::move(gens);
  p->crossing_boundary_ = crossing_boundary;
  const size_t n = p->gens_.size();
  p->rule_index_.assign(n * n, -1);

  auto okey = [&](GenId g) { return p->gens_[g].order_index; };
  auto in_left = [&](GenId g) { return crossing_boundary > 0 && g < crossing_boundary; };

  for (auto& raw : rules) {
    if (raw.a >= n || raw.b >= n)
      throw Error(Errc::UndeclaredGenerator, "rule refers to an unknown generator id");
    RewriteRule rule;
    rule.a = raw.a;
    rule.b = raw.b;
    // canonicalize rhs: merge duplicate words, prune zeros
    {
      std::map<Word, Scalar> merged;
      for (auto& [w, c] : raw.rhs) add_term(merged, w, c);
      rule.rhs.assign(merged.begin(), merged.end());
    }
    Word lhs({raw.a, raw.b});
    const std::string lhs_name = p->gens_[raw.a].name + "*" + p->gens_[raw.b].name;

    bool crossing = crossing_boundary > 0 && !in_left(raw.a) && in_left(raw.b);
    if (crossing) {
      rule.kind = RuleKind::Crossing;
      // each rhs word is the plain swap or lives entirely in the right block
      Word swap({raw.b, raw.a});
      for (const auto& [w, c] : rule.rhs) {
        if (w == swap) continue;
        bool pure_right = std::all_of(w.ids.begin(), w.ids.end(),
                                      [&](GenId g) { return !in_left(g); });
        if (!pure_right)
          throw Error(Errc::NonTerminatingRule,
                      "crossing rule " + lhs_name + " has tail word " + p->word_str(w) +
                          " that is neither the swap nor block-internal");
      }
    } else {
      rule.kind = raw.a == raw.b           ? RuleKind::Square
                  : okey(raw.a) > okey(raw.b) ? RuleKind::Reorder
                                              : RuleKind::Extra;
      if (rule.kind == RuleKind::Square && p->gens_[raw.a].parity != 1)
        throw Error(Errc::NonTerminatingRule,
                    "square rule on even generator '" + p->gens_[raw.a].name + "'");
      for (const auto& [w, c] : rule.rhs) {
        if (!p->monomial_less(w, lhs))
          throw Error(Errc::NonTerminatingRule, "rule " + lhs_name + " has rhs word " +
                                                    p->word_str(w) + " not below its lhs");
      }
    }

    int& slot = p->rule_index_[raw.a * n + raw.b];
    if (slot != -1) throw Error(Errc::DuplicateRule, "two rules with lhs " + lhs_name);
    slot = static_cast<int>(p->rules_.size());
    p->rules_.push_back(std::move(rule));
  }

  // every misordered generator pair must be covered
  for (GenId a = 0; a < n; ++a) {
    for (GenId b = 0; b < n; ++b) {
      if (a == b) continue;
      if (okey(a) > okey(b) && p->rule_index_[a * n + b] == -1)
        throw Error(Errc::MissingRule, "no rule normalizes " + p->gens_[a].name + "*" +
                                           p->gens_[b].name);
    }
  }
  return p;
}

std::optional<GenId> Presentation::find(const std::string& name) const {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<GenId>(i);
  return std::nullopt;
}

int Presentation::word_parity(const Word& w) const {
  int par = 0;
  for (GenId g : w.ids) par ^= gens_[g].parity;
  return par;
}

int Presentation::misordering_count(const Word& w) const {
  int count = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (gens_[w.ids[i]].order_index > gens_[w.ids[j]].order_index) ++count;
  return count;
}

bool Presentation::monomial_less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  int ma = misordering_count(a), mb = misordering_count(b);
  if (ma != mb) return ma < mb;
  for (size_t i = 0; i < a.size(); ++i) {
    int oa = gens_[a.ids[i]].order_index, ob = gens_[b.ids[i]].order_index;
    if (oa != ob) return oa < ob;
  }
  return false;
}

const RewriteRule* Presentation::rule_for(GenId a, GenId b) const {
  int idx = rule_index_[a * gens_.size() + b];
  return idx < 0 ? nullptr : &rules_[idx];
}

bool Presentation::word_is_normal(const Word& w) const {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (rule_for(w.ids[i], w.ids[i + 1])) return false;
  return true;
}

Element Presentation::normalize(std::map<Word, Scalar> pending) const {
  Element out(shared_from_this());
  size_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Scalar& c = node.mapped();
    if (c.is_zero()) continue;

    size_t pos = 0;
    const RewriteRule* rule = nullptr;
    for (; pos + 1 < w.size(); ++pos) {
      rule = rule_for(w.ids[pos], w.ids[pos + 1]);
      if (rule) break;
    }
    if (!rule) {
      add_term(out.terms_, w, c);
      continue;
    }
    if (++steps > kRewriteStepBudget)
      throw Error(Errc::ExpansionBudget, "rewrite step budget exhausted");
    for (const auto& [rw, rc] : rule->rhs) {
      Word nw = w.slice(0, pos).concat(rw).concat(w.slice(pos + 2, w.size()));
      add_term(pending, nw, c * rc);
    }
  }
  return out;
}

std::vector<Word> Presentation::normal_words(int degree) const {
  std::vector<Word> out;
  std::vector<GenId> current;
  auto dfs = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (GenId g = 0; g < gens_.size(); ++g) {
      if (!current.empty() && rule_for(current.back(), g)) continue;
      current.push_back(g);
      self(self, remaining - 1);
      current.pop_back();
    }
  };
  dfs(dfs, degree);
  return out;
}

std::vector<ConfluenceIssue> Presentation::local_confluence(size_t report_limit) const {
  std::vector<ConfluenceIssue> issues;
  const size_t n = gens_.size();
  for (const auto& r1 : rules_) {
    for (GenId c = 0; c < n; ++c) {
      const RewriteRule* r2 = rule_for(r1.b, c);
      if (!r2) continue;
      // overlap word a b c, reduced first at (a,b) and first at (b,c)
      std::map<Word, Scalar> left, right;
      for (const auto& [w, cf] : r1.rhs) add_term(left, w.concat(Word::single(c)), cf);
      for (const auto& [w, cf] : r2->rhs) add_term(right, Word::single(r1.a).concat(w), cf);
      Element nf_left = normalize(std::move(left));
      Element nf_right = normalize(std::move(right));
      if (!(nf_left == nf_right)) {
        issues.push_back({Word({r1.a, r1.b, c}), nf_left, nf_right});
        if (issues.size() >= report_limit) return issues;
      }
    }
  }
  return issues;
}

bool Presentation::structural_equal(const Presentation& o) const {
  if (gens_.size() != o.gens_.size() || rules_.size() != o.rules_.size()) return false;
  if (crossing_boundary_ != o.crossing_boundary_) return false;
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name != o.gens_[i].name || gens_[i].parity != o.gens_[i].parity ||
        gens_[i].order_index != o.gens_[i].order_index)
      return false;
  }
  for (size_t i = 0; i < rules_.size(); ++i) {
    const auto& a = rules_[i];
    const auto& b = o.rules_[i];
    if (a.a != b.a || a.b != b.b || a.kind != b.kind || a.rhs != b.rhs) return false;
  }
  return true;
}

std::string Presentation::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += gens_[w.ids[i]].name;
  }
  return out;
}

}  // namespace hsa
