#include "hsa/scalar.hpp"

#include <sstream>

namespace hsa {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotMonomial: return "NotMonomial";
    case Errc::ZeroDivision: return "ZeroDivision";
    case Errc::DivergentLimit: return "DivergentLimit";
    case Errc::NonTerminatingRule: return "NonTerminatingRule";
    case Errc::MissingRule: return "MissingRule";
    case Errc::DuplicateGenerator: return "DuplicateGenerator";
    case Errc::DuplicateRule: return "DuplicateRule";
    case Errc::MixedPresentation: return "MixedPresentation";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::PresentationMismatch: return "PresentationMismatch";
    case Errc::BadIndex: return "BadIndex";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::CompatibilityFailed: return "CompatibilityFailed";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UndeclaredGenerator: return "UndeclaredGenerator";
    case Errc::ParityMismatch: return "ParityMismatch";
    case Errc::ExpansionBudget: return "ExpansionBudget";
  }
  return "UnknownError";
}

GaussianRational GaussianRational::ratio(long num, long den) {
  if (den == 0) throw Error(Errc::ZeroDivision, "rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussianRational(q, mpq_class(0));
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(Errc::ZeroDivision, "inverse of zero");
  mpq_class norm = re_ * re_ + im_ * im_;
  return GaussianRational(re_ / norm, -im_ / norm);
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar out = *this;
  for (const auto& [exp, c] : o.terms_) {
    auto it = out.terms_.find(exp);
    if (it == out.terms_.end()) {
      out.terms_.emplace(exp, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar out;
  for (const auto& [exp, c] : terms_) out.terms_.emplace(exp, -c);
  return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      GaussianRational prod = ca * cb;
      if (prod.is_zero()) continue;
      int exp = ea + eb;
      auto it = out.terms_.find(exp);
      if (it == out.terms_.end()) {
        out.terms_.emplace(exp, prod);
      } else {
        it->second = it->second + prod;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Scalar Scalar::inverse_monomial() const {
  if (terms_.empty()) throw Error(Errc::ZeroDivision, "inverse of zero scalar");
  if (terms_.size() != 1)
    throw Error(Errc::NotMonomial, "inverse of a " + std::to_string(terms_.size()) + "-term scalar");
  const auto& [exp, c] = *terms_.begin();
  return Scalar(c.inverse(), -exp);
}

Scalar Scalar::classical_limit() const {
  Scalar out;
  for (const auto& [exp, c] : terms_) {
    if (exp > 0) throw Error(Errc::DivergentLimit, "term with positive deformation exponent: " + str());
    if (exp == 0) out.terms_.emplace(exp, c);
  }
  return out;
}

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

// magnitude > 0 assumed
std::string imag_body(const mpq_class& b, bool wrap = true) {
  mpq_class num(b.get_num());
  mpq_class den(b.get_den());
  std::string numpart = (num == 1) ? "i" : num.get_str() + "*i";
  if (den == 1) return numpart;
  std::string frac = numpart + "/" + den.get_str();
  return wrap ? "(" + frac + ")" : frac;
}

struct Rendered {
  bool neg = false;
  std::string body;
};

Rendered render_coeff(const GaussianRational& c) {
  Rendered r;
  if (c.im() == 0) {
    r.neg = c.re() < 0;
    mpq_class a = abs(c.re());
    r.body = (a.get_den() == 1) ? a.get_str() : "(" + rat_str(a) + ")";
  } else if (c.re() == 0) {
    r.neg = c.im() < 0;
    r.body = imag_body(abs(c.im()));
  } else {
    // mixed part: keep both signs inside one parenthesized group
    std::string inner = rat_str(c.re());
    inner += (c.im() > 0) ? "+" : "-";
    inner += imag_body(abs(c.im()), /*wrap=*/false);
    r.body = "(" + inner + ")";
  }
  return r;
}

std::string kappa_part(int exp) {
  if (exp == 1) return "k";
  return "k^" + std::to_string(exp);
}

}  // namespace

std::string GaussianRational::str() const {
  Rendered r = render_coeff(*this);
  return (r.neg ? "-" : "") + r.body;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rendered r = render_coeff(it->second);
    std::string term;
    if (it->first == 0) {
      term = r.body;
    } else if (r.body == "1") {
      term = kappa_part(it->first);
    } else {
      term = r.body + "*" + kappa_part(it->first);
    }
    if (first) {
      out = (r.neg ? "-" : "") + term;
      first = false;
    } else {
      out += (r.neg ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace hsa
