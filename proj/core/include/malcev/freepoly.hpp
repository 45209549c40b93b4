#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "malcev/rational.hpp"
#include "malcev/word.hpp"

namespace malcev {

/// Sparse polynomial of the free (non-unital) associative algebra over Q.
/// Terms are kept in deglex order and never store a zero coefficient.
class FreePoly {
public:
  FreePoly() = default;  // zero

  static FreePoly monomial(Word w, Rational c = Rational(1));
  static FreePoly generator(GenIndex g);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, Rational>& terms() const { return terms_; }
  Rational coeff(const Word& w) const;

  /// Adds c * w, pruning the term if the sum cancels.
  FreePoly& add_term(const Word& w, const Rational& c);

  FreePoly& operator+=(const FreePoly& other);
  FreePoly& operator-=(const FreePoly& other);
  FreePoly& operator*=(const Rational& c);
  friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
  friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
  friend FreePoly operator*(FreePoly a, const Rational& c) { return a *= c; }
  friend FreePoly operator*(const Rational& c, FreePoly a) { return a *= c; }
  FreePoly operator-() const;
  FreePoly operator*(const FreePoly& other) const;  // bilinear concatenation

  bool operator==(const FreePoly& other) const { return terms_ == other.terms_; }
  bool operator!=(const FreePoly& other) const { return !(*this == other); }

  /// Maximum word length; 0 for the zero polynomial.
  std::size_t degree() const;
  Word leading_word() const;  // deglex-greatest; throws std::logic_error on zero

  std::map<Multidegree, FreePoly> homogeneous_components() const;
  FreePoly homogeneous_component(const Multidegree& d) const;
  /// Multidegree shared by all terms, or nullopt (zero or inhomogeneous).
  std::optional<Multidegree> homogeneous_multidegree() const;

  /// Algebra endomorphism determined by generator images.
  /// Throws MissingAssignmentError if some occurring generator has no image.
  FreePoly substitute(const std::map<GenIndex, FreePoly>& images) const;

  std::string str() const;  // canonical, parseable rendering

private:
  std::map<Word, Rational> terms_;
};

FreePoly commutator(const FreePoly& p, const FreePoly& q);      // pq - qp
FreePoly anticommutator(const FreePoly& p, const FreePoly& q);  // pq + qp

/// Relabels letters by sigma (sigma[i-1] = image of x_i). Throws OutOfRangeError
/// if p involves a generator above sigma's size.
FreePoly act_permutation(const std::vector<GenIndex>& sigma, const FreePoly& p);

}  // namespace malcev
