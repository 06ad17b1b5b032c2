#pragma once

#include <map>
#include <string>
#include <vector>

#include "hsa/hopf.hpp"

namespace hsa {

/// Right action of H1 generators on H2 generators: entries[h2_gen][h1_gen]
/// is an element of H2 with parity p(a)+p(h) mod 2.
struct ActionTable {
  std::vector<std::vector<Element>> entries;
};

/// Left coaction of H2 on H1 generators: entries[h1_gen] lives in H2 (x) H1.
struct CoactionTable {
  std::vector<TensorElement> entries;
};

struct BicrossData {
  std::string name;
  HopfStructure h1;  // acting factor (left tensor slot of the product)
  HopfStructure h2;  // acted factor
  ActionTable action;
  CoactionTable coaction;
  /// convention annotations: entries whose transcription amends a printed
  /// variant, recorded verbatim into every report
  std::vector<std::string> notes;

  void validate() const;
};

ActionTable trivial_action(const HopfStructure& h1, const HopfStructure& h2);
CoactionTable trivial_coaction(const HopfStructure& h1, const HopfStructure& h2);

/// Extension engine for the action and coaction.  Holds memoization caches,
/// so one instance should be reused across a check run (single-threaded use;
/// the underlying data stays immutable).
class BicrossOps {
 public:
  explicit BicrossOps(const BicrossData& d) : d_(d) {}

  const BicrossData& data() const { return d_; }

  /// a <| g for a single H1 generator, recursing through the H1 coproduct
  Element act_word_gen(const Word& a, GenId g) const;
  /// a <| h for words, iterating letters of h left to right
  Element act_word_word(const Word& a, const Word& h) const;
  Element act_element_gen(const Element& a, GenId g) const;
  Element act_element_word(const Element& a, const Word& h) const;
  Element act(const Element& a, const Element& h) const;

  /// coaction of a word, extended from the generator table by the graded
  /// product rule applied to the last letter
  TensorElement coact_word(const Word& h) const;
  TensorElement coact(const Element& h) const;
  /// the product-rule right side for an arbitrary pair of words (h, g),
  /// used both by the extension and by the multiplicativity check
  TensorElement coact_product_formula(const Word& h, const Word& g) const;

 private:
  const BicrossData& d_;
  mutable std::map<std::pair<Word, GenId>, Element> act_cache_;
  mutable std::map<Word, TensorElement> coact_cache_;
  mutable int depth_ = 0;

  struct DepthGuard;
};

CheckReport check_module_algebra(const BicrossData& d, int degree, int samples,
                                 std::uint64_t seed);
CheckReport check_comodule_coalgebra(const BicrossData& d, int degree, int samples,
                                     std::uint64_t seed);
CheckReport check_compatibility(const BicrossData& d, int degree, int samples,
                                std::uint64_t seed);

/// The combined Hopf superalgebra on H1 (x) H2 plus the embedding data.
struct BuiltBicross {
  HopfStructure hopf;
  std::shared_ptr<const Presentation> p1, p2;
  size_t n1 = 0;  // generators of the left block

  Element embed1(const Element& e) const;
  Element embed2(const Element& e) const;
  Word embed2_word(const Word& w) const;
  /// normal-form monomial with the H1 letters first: h1w then h2w
  Element embed_mixed(const Word& h1w, const Word& h2w) const;
};

/// Constructs the combined structure.  Unless bypass_checks is set, the three
/// check suites must pass first (throws Error(CompatibilityFailed) with the
/// failing records in the message otherwise).
BuiltBicross build_bicrossproduct(const BicrossData& d, bool bypass_checks = false);

/// Hopf axioms on the built structure plus associativity and
/// coproduct-homomorphy on sampled mixed products.
CheckReport verify_built(const BicrossData& d, const BuiltBicross& built, int degree,
                         int samples, std::uint64_t seed);

/// Applies the k^-1 -> 0 limit to every rule tail and table coefficient,
/// returning the undeformed data over fresh presentations.
BicrossData classical_limit_of(const BicrossData& d);

}  // namespace hsa
