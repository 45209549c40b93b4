#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "malcev/freepoly.hpp"

namespace malcev {

/// One of the degree-3 identities cutting out a subvariety of associative
/// algebras, or a custom multilinear degree-3 identity.
class VarietyId {
public:
  enum class Tag { As1, As2, As3, Custom };

  static VarietyId as1();  // abc+acb+bac+bca+cab+cba
  static VarietyId as2();  // abc-acb-bac+bca+cab-cba
  static VarietyId as3();  // abc+bac-bca-cba
  /// Defining polynomial must be multilinear of degree 3 in x1,x2,x3.
  static VarietyId custom(FreePoly defining);

  Tag tag() const { return tag_; }
  const FreePoly& defining() const { return defining_; }
  std::string name() const;
  /// Canonical string of the (monic) defining identity; cache key.
  std::string key() const;

  bool operator==(const VarietyId& other) const { return defining_ == other.defining_; }
  bool operator<(const VarietyId& other) const;

private:
  VarietyId(Tag tag, FreePoly defining) : tag_(tag), defining_(std::move(defining)) {}
  Tag tag_;
  FreePoly defining_;
};

struct CertificateTerm {
  Rational coeff;
  FreePoly consequence;
};
/// Explicit T-ideal membership witness: p == sum(coeff * consequence).
using Certificate = std::vector<CertificateTerm>;

/// Fully reduced row echelon basis of one multidegree slice of a T-ideal.
/// Rows are monic in their deglex-greatest word; leading words are distinct
/// and never occur in another row.
class RelationBasis {
public:
  const Multidegree& multidegree() const { return degree_; }
  std::size_t rank() const { return rows_.size(); }
  /// All words of the slice, deglex-descending.
  const std::vector<Word>& slice_words() const { return words_; }
  std::vector<FreePoly> rows() const;
  /// Leading word of each row -> row index.
  std::map<Word, std::size_t> leading() const;
  /// Non-leading words (coset representatives), deglex-descending.
  std::vector<Word> coset_labels() const;

  /// Canonical coset representative: no word of the result is a leading word.
  /// p must be homogeneous of this multidegree (or zero).
  FreePoly reduce(const FreePoly& p) const;
  /// Coefficients of reduce(p) aligned with coset_labels().
  std::vector<Rational> coset_coordinates(const FreePoly& p) const;

  bool has_provenance() const { return !consequences_.empty() || rows_.empty(); }
  const std::vector<FreePoly>& consequences() const { return consequences_; }
  /// reduce(p) together with the combination of generating consequences that
  /// was subtracted: p == remainder + sum(coeff * consequence).
  /// Requires a basis built with provenance.
  std::pair<FreePoly, Certificate> reduce_tracked(const FreePoly& p) const;

private:
  friend class EchelonBuilder;
  struct Row {
    std::vector<std::pair<std::int32_t, Rational>> entries;  // ascending column
    std::vector<std::pair<std::int32_t, Rational>> combo;    // over consequences_
  };

  std::vector<std::pair<std::int32_t, Rational>> reduce_sparse(
      std::vector<std::pair<std::int32_t, Rational>> v,
      std::vector<std::pair<std::int32_t, Rational>>* combo) const;
  std::vector<std::pair<std::int32_t, Rational>> to_sparse(const FreePoly& p) const;
  FreePoly to_poly(const std::vector<std::pair<std::int32_t, Rational>>& v) const;

  Multidegree degree_;
  std::vector<Word> words_;  // deglex-descending; column i = words_[i]
  std::unordered_map<Word, std::int32_t, WordHash> index_;
  std::vector<Row> rows_;                   // sorted by leading column
  std::vector<std::int32_t> pivot_of_col_;  // column -> row index or -1
  std::vector<std::int32_t> label_cols_;    // non-leading columns, ascending
  std::vector<FreePoly> consequences_;      // provenance mode only
};

/// Exact row-echelon reduction of homogeneous polynomials sharing one
/// multidegree. Throws MixedMultidegreeError otherwise.
RelationBasis echelonize(std::vector<FreePoly> rows);

/// Brute-force ground truth for the varieties: generates all consequences of
/// the defining identity at a multidegree, echelonizes them exactly, and
/// answers membership / dimension queries. Relation bases are cached per
/// (variety, multidegree); the cache is single-writer, multi-reader.
class Oracle {
public:
  /// All distinct u * f(m1,m2,m3) * v with the given total multidegree
  /// (u, v optional words; m_i words), deduplicated up to scalar multiples and
  /// normalized monic. Throws DegreeTooSmallError if total < 3.
  std::vector<FreePoly> generate_consequences(const VarietyId& v, const Multidegree& d) const;

  std::shared_ptr<const RelationBasis> basis(const VarietyId& v, const Multidegree& d,
                                             bool provenance = false);

  /// Dimension of the multidegree-d component of the relatively free algebra.
  std::size_t dim_quotient(const VarietyId& v, const Multidegree& d);
  /// Dimension of the multidegree-d component of the free algebra.
  static std::size_t free_dim(const Multidegree& d);

  /// Reduces each homogeneous component of p by its slice basis.
  FreePoly reduce(const FreePoly& p, const VarietyId& v);
  bool is_identity(const FreePoly& p, const VarietyId& v);
  /// Certificate for p being an identity of v, or nullopt if it is not.
  std::optional<Certificate> certify(const FreePoly& p, const VarietyId& v);

private:
  mutable std::shared_mutex mutex_;
  std::map<std::tuple<std::string, Multidegree, bool>, std::shared_ptr<const RelationBasis>>
      cache_;
};

}  // namespace malcev
