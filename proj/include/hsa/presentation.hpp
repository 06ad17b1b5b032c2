#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hsa/scalar.hpp"

namespace hsa {

using GenId = std::uint16_t;

struct GeneratorDecl {
  std::string name;
  int parity = 0;       // 0 even, 1 odd
  int order_index = 0;  // position in the normal ordering
};

/// A monomial: sequence of generator ids.  The empty word is the unit.
struct Word {
  std::vector<GenId> ids;

  Word() = default;
  explicit Word(std::vector<GenId> v) : ids(std::move(v)) {}
  static Word unit() { return Word(); }
  static Word single(GenId g) { return Word({g}); }

  size_t size() const { return ids.size(); }
  bool empty() const { return ids.empty(); }

  Word concat(const Word& o) const {
    Word w = *this;
    w.ids.insert(w.ids.end(), o.ids.begin(), o.ids.end());
    return w;
  }
  Word slice(size_t from, size_t to) const {
    return Word(std::vector<GenId>(ids.begin() + from, ids.begin() + to));
  }

  // storage order: length, then id sequence
  bool operator<(const Word& o) const {
    if (ids.size() != o.ids.size()) return ids.size() < o.ids.size();
    return ids < o.ids;
  }
  bool operator==(const Word& o) const { return ids == o.ids; }
};

enum class RuleKind {
  Reorder,   // lhs is a misordered pair g_a g_b, order(a) > order(b)
  Square,    // lhs is g g for an odd generator
  Extra,     // lhs is an ordered pair (e.g. a determinant relation)
  Crossing,  // lhs is (right-block gen, left-block gen) in a combined algebra
};

class Presentation;
class Element;

/// Rule rhs as raw (word, coefficient) terms, before validation.
struct RawRule {
  GenId a = 0, b = 0;  // lhs = a then b
  std::vector<std::pair<Word, Scalar>> rhs;
};

struct RewriteRule {
  GenId a = 0, b = 0;
  std::vector<std::pair<Word, Scalar>> rhs;
  RuleKind kind = RuleKind::Reorder;
};

enum class ParityClass { Zero, Even, Odd, Mixed };

/// Linear combination of normal-form words over one presentation.
class Element {
 public:
  Element() = default;
  explicit Element(std::shared_ptr<const Presentation> p) : pres_(std::move(p)) {}

  static Element zero(std::shared_ptr<const Presentation> p) { return Element(std::move(p)); }
  static Element unit(std::shared_ptr<const Presentation> p);
  static Element monomial(std::shared_ptr<const Presentation> p, Word w, Scalar c = Scalar::one());
  static Element generator(std::shared_ptr<const Presentation> p, GenId g);

  const std::shared_ptr<const Presentation>& presentation() const { return pres_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;
  Element scaled(const Scalar& c) const;
  Element& operator+=(const Element& o) { return *this = *this + o; }
  bool operator==(const Element& o) const;

  ParityClass parity_class() const;
  /// Applies f to every coefficient, pruning zeros (e.g. classical_limit).
  Element map_coefficients(const std::function<Scalar(const Scalar&)>& f) const;

  std::string str() const;

 private:
  friend class Presentation;
  std::shared_ptr<const Presentation> pres_;
  std::map<Word, Scalar> terms_;
};

struct ConfluenceIssue {
  Word overlap;
  Element via_left, via_right;
};

/// A finitely presented Z2-graded algebra whose two-letter rewrite rules have
/// been checked for termination.  Immutable after creation.
class Presentation : public std::enable_shared_from_this<Presentation> {
 public:
  /// Validates and registers.  crossing_boundary > 0 marks a combined algebra
  /// whose first crossing_boundary generators form the left block; rules from
  /// a right-block generator past a left-block one are then held to the
  /// crossing-rule shape instead of the monomial-order decrease.
  static std::shared_ptr<const Presentation> create(std::vector<GeneratorDecl> gens,
                                                    std::vector<RawRule> rules,
                                                    size_t crossing_boundary = 0);

  const std::vector<GeneratorDecl>& generators() const { return gens_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  size_t crossing_boundary() const { return crossing_boundary_; }
  size_t size() const { return gens_.size(); }

  std::optional<GenId> find(const std::string& name) const;
  const std::string& name_of(GenId g) const { return gens_[g].name; }
  int parity(GenId g) const { return gens_[g].parity; }
  int word_parity(const Word& w) const;

  /// total monomial order: degree, then misordering count, then
  /// lexicographic by order_index sequence
  bool monomial_less(const Word& a, const Word& b) const;
  int misordering_count(const Word& w) const;

  const RewriteRule* rule_for(GenId a, GenId b) const;
  bool word_is_normal(const Word& w) const;

  /// Rewrites a raw linear combination to its normal form.
  Element normalize(std::map<Word, Scalar> raw) const;
  Element normal_form(const Element& e) const { return normalize(e.terms()); }

  /// All irreducible words of exactly the given degree, in storage order.
  std::vector<Word> normal_words(int degree) const;

  /// Reduces every three-letter overlap both ways; returns mismatches.
  std::vector<ConfluenceIssue> local_confluence(size_t report_limit) const;

  bool structural_equal(const Presentation& o) const;

  std::string word_str(const Word& w) const;

 private:
  Presentation() = default;

  std::vector<GeneratorDecl> gens_;
  std::vector<RewriteRule> rules_;
  std::vector<int> rule_index_;  // gens*gens -> rule index or -1
  size_t crossing_boundary_ = 0;
};

}  // namespace hsa
