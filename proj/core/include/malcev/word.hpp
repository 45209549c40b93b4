#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "malcev/errors.hpp"

namespace malcev {

/// 1-based generator index: x1, x2, ...
using GenIndex = std::uint32_t;

/// Multiset of generators with multiplicities; indexes one homogeneous slice.
class Multidegree {
public:
  Multidegree() = default;
  explicit Multidegree(std::map<GenIndex, std::uint32_t> counts);
  static Multidegree multilinear(GenIndex n);  // {1:1, ..., n:1}

  const std::map<GenIndex, std::uint32_t>& counts() const { return counts_; }
  std::uint32_t total() const;
  std::uint32_t multiplicity(GenIndex g) const;
  bool contains(GenIndex g) const { return multiplicity(g) > 0; }
  bool is_multilinear() const;
  std::size_t distinct_count() const { return counts_.size(); }
  std::vector<GenIndex> support() const;  // ascending generator indices
  GenIndex max_generator() const;

  Multidegree operator+(const Multidegree& other) const;
  /// Removes one occurrence of g; throws OutOfRangeError if absent.
  Multidegree minus_one(GenIndex g) const;

  bool operator==(const Multidegree& other) const { return counts_ == other.counts_; }
  bool operator!=(const Multidegree& other) const { return !(*this == other); }
  bool operator<(const Multidegree& other) const;  // total degree, then entry-wise

  std::string str() const;           // "1:2,3:1"
  std::string monomial_str() const;  // "x1^2 x3"
  static Multidegree from_string(std::string_view text);

private:
  std::map<GenIndex, std::uint32_t> counts_;
};

/// Nonempty monomial of the free associative algebra. Total order is
/// degree-then-lexicographic on the letter sequence.
class Word {
public:
  explicit Word(std::vector<GenIndex> letters);
  static Word single(GenIndex g);

  std::size_t size() const { return letters_.size(); }
  GenIndex operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<GenIndex>& letters() const { return letters_; }
  GenIndex first() const { return letters_.front(); }
  GenIndex last() const { return letters_.back(); }

  Word concat(const Word& other) const;
  Multidegree multidegree() const;

  bool operator==(const Word& other) const { return letters_ == other.letters_; }
  bool operator!=(const Word& other) const { return !(*this == other); }
  bool operator<(const Word& other) const;  // deglex
  bool operator>(const Word& other) const { return other < *this; }

  std::string str() const;  // "x1*x2*x3"

private:
  std::vector<GenIndex> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

}  // namespace malcev
