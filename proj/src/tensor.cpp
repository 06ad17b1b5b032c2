#include "hsa/tensor.hpp"

#include <algorithm>

namespace hsa {

TensorElement::TensorElement(Factors f) : factors_(std::move(f)) {
  if (factors_.empty()) throw Error(Errc::ArityMismatch, "tensor arity must be at least 1");
}

TensorElement TensorElement::unit(Factors f) {
  TensorElement t(std::move(f));
  WordTuple u;
  u.words.resize(t.arity());
  t.terms_.emplace(std::move(u), Scalar::one());
  return t;
}

TensorElement TensorElement::outer(const std::vector<Element>& factors) {
  Factors f;
  f.reserve(factors.size());
  for (const auto& e : factors) f.push_back(e.presentation());
  TensorElement t(std::move(f));
  // cartesian expansion of the factor term lists
  std::vector<std::pair<WordTuple, Scalar>> acc = {{WordTuple{}, Scalar::one()}};
  for (const auto& e : factors) {
    std::vector<std::pair<WordTuple, Scalar>> next;
    for (const auto& [tuple, c] : acc) {
      for (const auto& [w, cw] : e.terms()) {
        WordTuple t2 = tuple;
        t2.words.push_back(w);
        next.emplace_back(std::move(t2), c * cw);
      }
    }
    acc = std::move(next);
  }
  for (auto& [tuple, c] : acc) t.add_term(tuple, c);
  return t;
}

void TensorElement::add_term(const WordTuple& t, const Scalar& c) {
  if (c.is_zero()) return;
  if (t.words.size() != arity()) throw Error(Errc::ArityMismatch, "tuple arity mismatch");
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorElement::check_same_shape(const TensorElement& o) const {
  if (arity() != o.arity()) throw Error(Errc::ArityMismatch, "tensor arities differ");
  for (size_t i = 0; i < arity(); ++i) {
    if (factors_[i] != o.factors_[i] && !factors_[i]->structural_equal(*o.factors_[i]))
      throw Error(Errc::PresentationMismatch,
                  "tensor factor " + std::to_string(i) + " presentations differ");
  }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  if (terms_.empty()) return o;
  if (o.terms_.empty()) return *this;
  check_same_shape(o);
  TensorElement out = *this;
  for (const auto& [t, c] : o.terms_) out.add_term(t, c);
  return out;
}

TensorElement TensorElement::operator-(const TensorElement& o) const { return *this + (-o); }

TensorElement TensorElement::operator-() const {
  TensorElement out(factors_);
  for (const auto& [t, c] : terms_) out.terms_.emplace(t, -c);
  return out;
}

TensorElement TensorElement::scaled(const Scalar& c) const {
  TensorElement out(factors_);
  if (c.is_zero()) return out;
  for (const auto& [t, cf] : terms_) {
    Scalar prod = cf * c;
    if (!prod.is_zero()) out.terms_.emplace(t, prod);
  }
  return out;
}

int TensorElement::tuple_parity(const WordTuple& t) const {
  int par = 0;
  for (size_t i = 0; i < t.words.size(); ++i) par ^= factors_[i]->word_parity(t.words[i]);
  return par;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
  check_same_shape(o);
  TensorElement out(factors_);
  const size_t n = arity();
  for (const auto& [xt, xc] : terms_) {
    for (const auto& [yt, yc] : o.terms_) {
      // crossing sign: y_i passes x_j for every i < j
      int sign_exp = 0;
      for (size_t i = 0; i < n; ++i) {
        int py = factors_[i]->word_parity(yt.words[i]);
        if (py == 0) continue;
        for (size_t j = i + 1; j < n; ++j) sign_exp += py * factors_[j]->word_parity(xt.words[j]);
      }
      Scalar coeff = xc * yc;
      if (sign_exp & 1) coeff = -coeff;
      if (coeff.is_zero()) continue;
      // componentwise products, each normalized in its own factor algebra
      std::vector<std::pair<WordTuple, Scalar>> acc = {{WordTuple{}, coeff}};
      for (size_t i = 0; i < n && !acc.empty(); ++i) {
        Element prod = factors_[i]->normalize({{xt.words[i].concat(yt.words[i]), Scalar::one()}});
        std::vector<std::pair<WordTuple, Scalar>> next;
        for (const auto& [tuple, c] : acc) {
          for (const auto& [w, cw] : prod.terms()) {
            WordTuple t2 = tuple;
            t2.words.push_back(w);
            next.emplace_back(std::move(t2), c * cw);
          }
        }
        acc = std::move(next);
      }
      for (auto& [tuple, c] : acc) out.add_term(tuple, c);
    }
  }
  return out;
}

bool TensorElement::operator==(const TensorElement& o) const {
  if (arity() != o.arity()) return false;
  return terms_ == o.terms_;
}

TensorElement TensorElement::graded_flip(size_t i) const {
  if (i + 1 >= arity()) throw Error(Errc::BadIndex, "flip index out of range");
  Factors f = factors_;
  std::swap(f[i], f[i + 1]);
  TensorElement out(std::move(f));
  for (const auto& [t, c] : terms_) {
    int pl = factors_[i]->word_parity(t.words[i]);
    int pr = factors_[i + 1]->word_parity(t.words[i + 1]);
    WordTuple nt = t;
    std::swap(nt.words[i], nt.words[i + 1]);
    out.add_term(nt, (pl * pr) & 1 ? -c : c);
  }
  return out;
}

TensorElement TensorElement::apply_factorwise(
    size_t i, std::shared_ptr<const Presentation> image,
    const std::function<Element(const Word&)>& f) const {
  if (i >= arity()) throw Error(Errc::BadIndex, "factor index out of range");
  Factors fs = factors_;
  fs[i] = std::move(image);
  TensorElement out(std::move(fs));
  for (const auto& [t, c] : terms_) {
    Element img = f(t.words[i]);
    for (const auto& [w, cw] : img.terms()) {
      WordTuple nt = t;
      nt.words[i] = w;
      out.add_term(nt, c * cw);
    }
  }
  return out;
}

TensorElement TensorElement::apply_factorwise_tensor(
    size_t i, const Factors& image, const std::function<TensorElement(const Word&)>& f) const {
  if (i >= arity()) throw Error(Errc::BadIndex, "factor index out of range");
  Factors fs;
  fs.insert(fs.end(), factors_.begin(), factors_.begin() + i);
  fs.insert(fs.end(), image.begin(), image.end());
  fs.insert(fs.end(), factors_.begin() + i + 1, factors_.end());
  TensorElement out(std::move(fs));
  for (const auto& [t, c] : terms_) {
    TensorElement img = f(t.words[i]);
    if (img.arity() != image.size())
      throw Error(Errc::DomainMismatch, "factor image arity differs from the declared shape");
    for (const auto& [it, ic] : img.terms()) {
      WordTuple nt;
      nt.words.insert(nt.words.end(), t.words.begin(), t.words.begin() + i);
      nt.words.insert(nt.words.end(), it.words.begin(), it.words.end());
      nt.words.insert(nt.words.end(), t.words.begin() + i + 1, t.words.end());
      out.add_term(nt, c * ic);
    }
  }
  return out;
}

TensorElement TensorElement::apply_counit_factor(
    size_t i, const std::function<Scalar(const Word&)>& f) const {
  if (i >= arity()) throw Error(Errc::BadIndex, "factor index out of range");
  if (arity() < 2) throw Error(Errc::ArityMismatch, "cannot collapse the only factor");
  Factors fs = factors_;
  fs.erase(fs.begin() + i);
  TensorElement out(std::move(fs));
  for (const auto& [t, c] : terms_) {
    Scalar s = f(t.words[i]);
    if (s.is_zero()) continue;
    WordTuple nt;
    nt.words.insert(nt.words.end(), t.words.begin(), t.words.begin() + i);
    nt.words.insert(nt.words.end(), t.words.begin() + i + 1, t.words.end());
    out.add_term(nt, c * s);
  }
  return out;
}

TensorElement TensorElement::multiply_adjacent(size_t i) const {
  if (i + 1 >= arity()) throw Error(Errc::BadIndex, "factor index out of range");
  if (factors_[i] != factors_[i + 1] && !factors_[i]->structural_equal(*factors_[i + 1]))
    throw Error(Errc::PresentationMismatch, "adjacent factors over different presentations");
  Factors fs = factors_;
  fs.erase(fs.begin() + i + 1);
  TensorElement out(std::move(fs));
  for (const auto& [t, c] : terms_) {
    Element prod =
        factors_[i]->normalize({{t.words[i].concat(t.words[i + 1]), Scalar::one()}});
    for (const auto& [w, cw] : prod.terms()) {
      WordTuple nt;
      nt.words.insert(nt.words.end(), t.words.begin(), t.words.begin() + i);
      nt.words.push_back(w);
      nt.words.insert(nt.words.end(), t.words.begin() + i + 2, t.words.end());
      out.add_term(nt, c * cw);
    }
  }
  return out;
}

Element TensorElement::to_element() const {
  if (arity() != 1) throw Error(Errc::ArityMismatch, "tensor arity is not 1");
  Element out(factors_[0]);
  for (const auto& [t, c] : terms_) out += Element::monomial(factors_[0], t.words[0], c);
  return out;
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    std::string cs = c.str();
    bool neg = cs.size() > 1 && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    bool multi = c.terms().size() > 1;
    std::string body;
    for (size_t i = 0; i < t.words.size(); ++i) {
      if (i) body += " @ ";
      body += factors_[i]->word_str(t.words[i]);
    }
    if (!(cs == "1" && !multi)) body = (multi ? "(" + cs + ")" : cs) + "*" + body;
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace hsa
