#include "malcev/freepoly.hpp"

#include <sstream>

namespace malcev {

FreePoly FreePoly::monomial(Word w, Rational c) {
  FreePoly p;
  if (sgn(c) != 0) p.terms_.emplace(std::move(w), std::move(c));
  return p;
}

FreePoly FreePoly::generator(GenIndex g) { return monomial(Word::single(g)); }

Rational FreePoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

FreePoly& FreePoly::add_term(const Word& w, const Rational& c) {
  if (sgn(c) == 0) return *this;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
  return *this;
}

FreePoly& FreePoly::operator+=(const FreePoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

FreePoly& FreePoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

FreePoly FreePoly::operator-() const {
  FreePoly p = *this;
  for (auto& [w, v] : p.terms_) v = -v;
  return p;
}

FreePoly FreePoly::operator*(const FreePoly& other) const {
  FreePoly p;
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : other.terms_) p.add_term(wa.concat(wb), ca * cb);
  return p;
}

std::size_t FreePoly::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

Word FreePoly::leading_word() const {
  if (terms_.empty()) throw std::logic_error("leading word of zero polynomial");
  return terms_.rbegin()->first;
}

std::map<Multidegree, FreePoly> FreePoly::homogeneous_components() const {
  std::map<Multidegree, FreePoly> comps;
  for (const auto& [w, c] : terms_) comps[w.multidegree()].add_term(w, c);
  return comps;
}

FreePoly FreePoly::homogeneous_component(const Multidegree& d) const {
  FreePoly p;
  for (const auto& [w, c] : terms_)
    if (w.multidegree() == d) p.add_term(w, c);
  return p;
}

std::optional<Multidegree> FreePoly::homogeneous_multidegree() const {
  if (terms_.empty()) return std::nullopt;
  Multidegree d = terms_.begin()->first.multidegree();
  for (const auto& [w, c] : terms_)
    if (w.multidegree() != d) return std::nullopt;
  return d;
}

FreePoly FreePoly::substitute(const std::map<GenIndex, FreePoly>& images) const {
  FreePoly result;
  for (const auto& [w, c] : terms_) {
    FreePoly prod;
    bool started = false;
    for (GenIndex g : w.letters()) {
      auto it = images.find(g);
      if (it == images.end()) throw MissingAssignmentError(g);
      if (!started) {
        prod = it->second;
        started = true;
      } else {
        prod = prod * it->second;
      }
    }
    result += c * prod;
  }
  return result;
}

std::string FreePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading (deglex-greatest) term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    bool negative = sgn(c) < 0;
    Rational abs_c = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    if (abs_c != 1) os << to_string(abs_c) << '*';
    os << it->first.str();
    first = false;
  }
  return os.str();
}

FreePoly commutator(const FreePoly& p, const FreePoly& q) { return p * q - q * p; }

FreePoly anticommutator(const FreePoly& p, const FreePoly& q) { return p * q + q * p; }

FreePoly act_permutation(const std::vector<GenIndex>& sigma, const FreePoly& p) {
  FreePoly result;
  for (const auto& [w, c] : p.terms()) {
    std::vector<GenIndex> letters;
    letters.reserve(w.size());
    for (GenIndex g : w.letters()) {
      if (g > sigma.size())
        throw OutOfRangeError("generator x" + std::to_string(g) + " outside permutation domain");
      letters.push_back(sigma[g - 1]);
    }
    result.add_term(Word(std::move(letters)), c);
  }
  return result;
}

}  // namespace malcev
