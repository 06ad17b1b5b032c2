#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hsa/report.hpp"
#include "hsa/tensor.hpp"

namespace hsa {

/// Hopf superalgebra structure: a presentation plus generator tables for the
/// coproduct, counit and antipode, extended to all elements multiplicatively
/// (counit, coproduct) and anti-multiplicatively with the graded sign
/// (antipode).
struct HopfStructure {
  std::string name;
  std::shared_ptr<const Presentation> algebra;
  std::vector<TensorElement> coproduct_table;  // arity 2 over (algebra, algebra)
  std::vector<Scalar> counit_table;
  std::vector<Element> antipode_table;

  /// checks table shapes and the parity-preservation invariants
  void validate() const;

  bool structural_equal(const HopfStructure& o) const;
};

TensorElement coproduct_word(const HopfStructure& h, const Word& w);
TensorElement coproduct(const HopfStructure& h, const Element& e);
Scalar counit_word(const HopfStructure& h, const Word& w);
Scalar counit(const HopfStructure& h, const Element& e);
Element antipode_word(const HopfStructure& h, const Word& w);
Element antipode(const HopfStructure& h, const Element& e);

/// words of every degree <= max_degree drawn without replacement per degree
std::vector<Word> sample_words(const Presentation& p, int max_degree, int samples, Sampler& rng);

/// coassociativity, counit laws and well-definedness of all three tables
/// against the rewrite rules, on generators and sampled normal words
CheckReport verify_bialgebra(const HopfStructure& h, int degree, int samples, std::uint64_t seed);

/// antipode axiom on both sides plus the flipped-coproduct identity
CheckReport verify_antipode(const HopfStructure& h, int degree, int samples, std::uint64_t seed);

}  // namespace hsa
