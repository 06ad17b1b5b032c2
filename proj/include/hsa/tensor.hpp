#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "hsa/presentation.hpp"

namespace hsa {

struct WordTuple {
  std::vector<Word> words;

  bool operator<(const WordTuple& o) const { return words < o.words; }
  bool operator==(const WordTuple& o) const { return words == o.words; }
};

/// Linear combination of tuples of normal-form words across several (possibly
/// distinct) presentations, multiplied with the Koszul sign rule.  Factor
/// indices are 0-based throughout.
class TensorElement {
 public:
  using Factors = std::vector<std::shared_ptr<const Presentation>>;

  TensorElement() = default;
  explicit TensorElement(Factors f);

  static TensorElement zero(Factors f) { return TensorElement(std::move(f)); }
  static TensorElement unit(Factors f);
  /// outer product e1 (x) e2 (x) ... — no sign is involved in assembling
  /// a simple tensor from its factors
  static TensorElement outer(const std::vector<Element>& factors);

  size_t arity() const { return factors_.size(); }
  const Factors& factors() const { return factors_; }
  const std::map<WordTuple, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const WordTuple& t, const Scalar& c);

  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement operator-() const;
  TensorElement scaled(const Scalar& c) const;
  /// componentwise product with the graded crossing sign
  TensorElement operator*(const TensorElement& o) const;
  bool operator==(const TensorElement& o) const;

  /// swaps factors i and i+1 with the sign (-1)^{p(left)p(right)} per term
  TensorElement graded_flip(size_t i) const;

  /// replaces factor i by its image under a linear map given on words;
  /// no sign is introduced by application itself
  TensorElement apply_factorwise(size_t i, std::shared_ptr<const Presentation> image,
                                 const std::function<Element(const Word&)>& f) const;
  /// same, for a tensor-valued map; the image factors are spliced in place
  TensorElement apply_factorwise_tensor(
      size_t i, const Factors& image,
      const std::function<TensorElement(const Word&)>& f) const;
  /// collapses factor i through a scalar-valued map (a counit); arity drops
  TensorElement apply_counit_factor(size_t i,
                                    const std::function<Scalar(const Word&)>& f) const;

  /// multiplies factors i and i+1 (same presentation) in place; no extra sign
  TensorElement multiply_adjacent(size_t i) const;

  /// arity-1 tensors convert back to plain elements
  Element to_element() const;

  int tuple_parity(const WordTuple& t) const;

  std::string str() const;

 private:
  void check_same_shape(const TensorElement& o) const;

  Factors factors_;
  std::map<WordTuple, Scalar> terms_;
};

}  // namespace hsa
