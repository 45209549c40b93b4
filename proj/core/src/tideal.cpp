#include "malcev/tideal.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace malcev {

namespace {

using Sparse = std::vector<std::pair<std::int32_t, Rational>>;

// r += c * s, both sorted by column; zero results pruned.
void axpy(Sparse& r, const Rational& c, const Sparse& s, Sparse& scratch) {
  scratch.clear();
  scratch.reserve(r.size() + s.size());
  auto it = r.begin();
  auto jt = s.begin();
  Rational tmp;
  while (it != r.end() && jt != s.end()) {
    if (it->first < jt->first) {
      scratch.push_back(std::move(*it++));
    } else if (jt->first < it->first) {
      scratch.emplace_back(jt->first, c * jt->second);
      ++jt;
    } else {
      tmp = it->second + c * jt->second;
      if (sgn(tmp) != 0) scratch.emplace_back(it->first, tmp);
      ++it;
      ++jt;
    }
  }
  while (it != r.end()) scratch.push_back(std::move(*it++));
  for (; jt != s.end(); ++jt) scratch.emplace_back(jt->first, c * jt->second);
  r.swap(scratch);
}

std::size_t sparse_hash(const Sparse& v) {
  std::size_t h = v.size();
  for (const auto& [col, coeff] : v) {
    h = h * 1099511628211ULL + static_cast<std::size_t>(col);
    h = h * 1099511628211ULL + hash_rational(coeff);
  }
  return h;
}

/// All words of one multidegree, deglex-descending.
std::vector<Word> slice_words(const Multidegree& d) {
  std::vector<GenIndex> letters;
  for (const auto& [g, m] : d.counts())
    for (std::uint32_t i = 0; i < m; ++i) letters.push_back(g);
  std::vector<Word> words;
  do {
    words.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  std::reverse(words.begin(), words.end());
  return words;
}

bool deglex_less(const std::vector<GenIndex>& a, const std::vector<GenIndex>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

// ---------------------------------------------------------------------------
// VarietyId

namespace {
FreePoly signed_sym3(const std::array<int, 6>& signs) {
  // Terms in the order abc, acb, bac, bca, cab, cba on x1,x2,x3.
  static const std::array<std::array<GenIndex, 3>, 6> kOrders = {{
      {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1},
  }};
  FreePoly f;
  for (std::size_t i = 0; i < 6; ++i) {
    if (signs[i] == 0) continue;
    f.add_term(Word({kOrders[i][0], kOrders[i][1], kOrders[i][2]}), rat(signs[i]));
  }
  return f;
}
}  // namespace

VarietyId VarietyId::as1() { return VarietyId(Tag::As1, signed_sym3({1, 1, 1, 1, 1, 1})); }
VarietyId VarietyId::as2() { return VarietyId(Tag::As2, signed_sym3({1, -1, -1, 1, 1, -1})); }
VarietyId VarietyId::as3() { return VarietyId(Tag::As3, signed_sym3({1, 0, 1, -1, 0, -1})); }

VarietyId VarietyId::custom(FreePoly defining) {
  auto d = defining.homogeneous_multidegree();
  if (!d || *d != Multidegree::multilinear(3))
    throw std::invalid_argument("custom variety needs a multilinear degree-3 identity in x1,x2,x3");
  return VarietyId(Tag::Custom, std::move(defining));
}

std::string VarietyId::name() const {
  switch (tag_) {
    case Tag::As1: return "as1";
    case Tag::As2: return "as2";
    case Tag::As3: return "as3";
    case Tag::Custom: return "custom";
  }
  return "?";
}

std::string VarietyId::key() const {
  FreePoly monic = defining_;
  monic *= Rational(1) / defining_.coeff(defining_.leading_word());
  return monic.str();
}

bool VarietyId::operator<(const VarietyId& other) const { return key() < other.key(); }

// ---------------------------------------------------------------------------
// EchelonBuilder

class EchelonBuilder {
public:
  EchelonBuilder(const Multidegree& d, bool provenance)
      : degree_(d), words_(slice_words(d)), track_(provenance) {
    index_.reserve(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i)
      index_.emplace(words_[i], static_cast<std::int32_t>(i));
    pivot_of_col_.assign(words_.size(), -1);
    touch_.resize(words_.size());
  }

  Sparse to_sparse(const FreePoly& p) const {
    Sparse v;
    v.reserve(p.term_count());
    for (const auto& [w, c] : p.terms()) {
      auto it = index_.find(w);
      if (it == index_.end())
        throw MixedMultidegreeError("polynomial has a word outside the multidegree slice");
      v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  /// Inserts one relation; returns true if the rank grew.
  bool insert(const FreePoly& p, std::int32_t consequence_index) {
    Sparse v = to_sparse(p);
    Sparse combo;
    if (track_ && consequence_index >= 0) combo.emplace_back(consequence_index, rat(1));

    eliminate(v, track_ ? &combo : nullptr);
    if (v.empty()) return false;

    // Monic in the leading (deglex-greatest = lowest-index) column.
    if (v.front().second != 1) {
      Rational inv = Rational(1) / v.front().second;
      for (auto& [col, c] : v) c *= inv;
      for (auto& [idx, c] : combo) c *= inv;
    }

    std::int32_t lead = v.front().first;
    // Back-substitute the new pivot into every row that mentions it.
    std::vector<std::int32_t> ids;
    ids.swap(touch_[lead]);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (std::int32_t rid : ids) {
      auto& row = rows_[rid];
      auto it = std::lower_bound(
          row.entries.begin(), row.entries.end(), lead,
          [](const auto& e, std::int32_t col) { return e.first < col; });
      if (it == row.entries.end() || it->first != lead) continue;  // stale index entry
      Rational c = -it->second;
      axpy(row.entries, c, v, scratch_);
      if (track_) axpy(row.combo, c, combo, scratch_);
      for (std::size_t k = 1; k < v.size(); ++k) touch_[v[k].first].push_back(rid);
    }

    std::int32_t id = static_cast<std::int32_t>(rows_.size());
    for (const auto& [col, c] : v) touch_[col].push_back(id);
    pivot_of_col_[lead] = id;
    rows_.push_back({std::move(v), std::move(combo)});
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return words_.size(); }

  RelationBasis finish(std::vector<FreePoly> consequences) {
    RelationBasis b;
    b.degree_ = degree_;
    b.words_ = std::move(words_);
    b.index_ = std::move(index_);
    // Rows sorted by leading column for a canonical presentation.
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b2) {
      return rows_[a].entries.front().first < rows_[b2].entries.front().first;
    });
    b.rows_.reserve(rows_.size());
    b.pivot_of_col_.assign(b.words_.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto& src = rows_[order[i]];
      b.pivot_of_col_[src.entries.front().first] = static_cast<std::int32_t>(i);
      b.rows_.push_back({std::move(src.entries), std::move(src.combo)});
    }
    for (std::int32_t col = 0; col < static_cast<std::int32_t>(b.words_.size()); ++col)
      if (b.pivot_of_col_[col] < 0) b.label_cols_.push_back(col);
    if (track_) b.consequences_ = std::move(consequences);
    return b;
  }

private:
  // Eliminates every pivot-column entry of v; single left-to-right pass is
  // enough because fully reduced pivot rows carry no pivot columns in their
  // tails.
  void eliminate(Sparse& v, Sparse* combo) {
    std::size_t i = 0;
    while (i < v.size()) {
      std::int32_t rid = pivot_of_col_[v[i].first];
      if (rid < 0) {
        ++i;
        continue;
      }
      Rational c = -v[i].second;
      axpy(v, c, rows_[rid].entries, scratch_);
      if (combo) axpy(*combo, c, rows_[rid].combo, scratch_);
    }
  }

  friend class RelationBasis;
  struct Row {
    Sparse entries;
    Sparse combo;
  };

  Multidegree degree_;
  std::vector<Word> words_;
  std::unordered_map<Word, std::int32_t, WordHash> index_;
  std::vector<Row> rows_;
  std::vector<std::int32_t> pivot_of_col_;
  std::vector<std::vector<std::int32_t>> touch_;
  Sparse scratch_;
  bool track_;
};

// ---------------------------------------------------------------------------
// RelationBasis

std::vector<FreePoly> RelationBasis::rows() const {
  std::vector<FreePoly> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(to_poly(row.entries));
  return out;
}

std::map<Word, std::size_t> RelationBasis::leading() const {
  std::map<Word, std::size_t> m;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    m.emplace(words_[rows_[i].entries.front().first], i);
  return m;
}

std::vector<Word> RelationBasis::coset_labels() const {
  std::vector<Word> out;
  out.reserve(label_cols_.size());
  for (std::int32_t col : label_cols_) out.push_back(words_[col]);
  return out;
}

Sparse RelationBasis::to_sparse(const FreePoly& p) const {
  Sparse v;
  v.reserve(p.term_count());
  for (const auto& [w, c] : p.terms()) {
    auto it = index_.find(w);
    if (it == index_.end())
      throw MixedMultidegreeError("polynomial has a word outside the multidegree slice");
    v.emplace_back(it->second, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

FreePoly RelationBasis::to_poly(const Sparse& v) const {
  FreePoly p;
  for (const auto& [col, c] : v) p.add_term(words_[col], c);
  return p;
}

Sparse RelationBasis::reduce_sparse(Sparse v, Sparse* combo) const {
  Sparse scratch;
  std::size_t i = 0;
  while (i < v.size()) {
    std::int32_t rid = pivot_of_col_.empty() ? -1 : pivot_of_col_[v[i].first];
    if (rid < 0) {
      ++i;
      continue;
    }
    Rational c = -v[i].second;
    axpy(v, c, rows_[rid].entries, scratch);
    if (combo) axpy(*combo, c, rows_[rid].combo, scratch);
  }
  return v;
}

FreePoly RelationBasis::reduce(const FreePoly& p) const {
  if (words_.empty()) return p;  // empty basis: nothing to reduce by
  if (p.is_zero()) return p;
  return to_poly(reduce_sparse(to_sparse(p), nullptr));
}

std::vector<Rational> RelationBasis::coset_coordinates(const FreePoly& p) const {
  Sparse r = p.is_zero() ? Sparse{} : reduce_sparse(to_sparse(p), nullptr);
  std::vector<Rational> coords(label_cols_.size(), Rational(0));
  std::size_t j = 0;
  for (const auto& [col, c] : r) {
    while (j < label_cols_.size() && label_cols_[j] < col) ++j;
    assert(j < label_cols_.size() && label_cols_[j] == col);
    coords[j] = c;
  }
  return coords;
}

std::pair<FreePoly, Certificate> RelationBasis::reduce_tracked(const FreePoly& p) const {
  if (consequences_.empty() && !rows_.empty())
    throw std::logic_error("relation basis was built without provenance");
  if (p.is_zero()) return {p, {}};
  if (words_.empty()) return {p, {}};
  Sparse combo;
  Sparse r = reduce_sparse(to_sparse(p), &combo);
  Certificate cert;
  cert.reserve(combo.size());
  // reduce subtracted sum(c * row); rows carry their consequence combination,
  // so p - remainder == sum(-combo * consequence) with combo as accumulated.
  for (const auto& [idx, c] : combo) cert.push_back({-c, consequences_[idx]});
  return {to_poly(r), std::move(cert)};
}

RelationBasis echelonize(std::vector<FreePoly> rows) {
  std::optional<Multidegree> degree;
  for (const auto& r : rows) {
    if (r.is_zero()) continue;
    auto d = r.homogeneous_multidegree();
    if (!d) throw MixedMultidegreeError("echelonize: row is not homogeneous");
    if (!degree) degree = d;
    if (*degree != *d) throw MixedMultidegreeError("echelonize: rows of mixed multidegree");
  }
  if (!degree) return RelationBasis{};  // empty basis, rank 0
  EchelonBuilder builder(*degree, false);
  for (const auto& r : rows)
    if (!r.is_zero()) builder.insert(r, -1);
  return builder.finish({});
}

// ---------------------------------------------------------------------------
// Oracle

namespace {

/// Defining identity as signed letter arrangements plus its argument symmetry.
struct DefiningShape {
  std::vector<std::pair<std::array<int, 3>, Rational>> terms;
  enum class Sym { None, Symmetric, Alternating } sym;
};

DefiningShape shape_of(const FreePoly& f) {
  DefiningShape s;
  for (const auto& [w, c] : f.terms()) {
    std::array<int, 3> arr{};
    for (int i = 0; i < 3; ++i) arr[i] = static_cast<int>(w[i]) - 1;
    s.terms.push_back({arr, c});
  }
  FreePoly swapped12 = act_permutation({2, 1, 3}, f);
  FreePoly swapped23 = act_permutation({1, 3, 2}, f);
  if (swapped12 == f && swapped23 == f)
    s.sym = DefiningShape::Sym::Symmetric;
  else if (swapped12 == -f && swapped23 == -f)
    s.sym = DefiningShape::Sym::Alternating;
  else
    s.sym = DefiningShape::Sym::None;
  return s;
}

/// Enumerates all arrangements of `len` letters drawn from the running
/// multiset and calls emit() for each with the block filled in.
struct BlockEnumerator {
  std::vector<GenIndex> gens;
  std::vector<int> avail;

  explicit BlockEnumerator(const Multidegree& d) {
    for (const auto& [g, m] : d.counts()) {
      gens.push_back(g);
      avail.push_back(static_cast<int>(m));
    }
  }

  template <typename F>
  void enumerate(std::vector<GenIndex>& block, std::size_t len, const F& emit) {
    if (block.size() == len) {
      emit();
      return;
    }
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (avail[k] == 0) continue;
      --avail[k];
      block.push_back(gens[k]);
      enumerate(block, len, emit);
      block.pop_back();
      ++avail[k];
    }
  }
};

}  // namespace

std::vector<FreePoly> Oracle::generate_consequences(const VarietyId& v,
                                                    const Multidegree& d) const {
  const std::uint32_t n = d.total();
  if (n < 3)
    throw DegreeTooSmallError("consequences need total degree >= 3, got " + std::to_string(n));

  DefiningShape shape = shape_of(v.defining());

  std::vector<FreePoly> result;
  std::unordered_map<std::size_t, std::vector<std::size_t>> seen;
  BlockEnumerator blocks(d);
  std::vector<GenIndex> u, m1, m2, m3, tail;
  std::vector<GenIndex> buffer;

  auto emit = [&]() {
    FreePoly p;
    for (const auto& [arr, c] : shape.terms) {
      buffer.clear();
      buffer.insert(buffer.end(), u.begin(), u.end());
      const std::vector<GenIndex>* ms[3] = {&m1, &m2, &m3};
      for (int i = 0; i < 3; ++i)
        buffer.insert(buffer.end(), ms[arr[i]]->begin(), ms[arr[i]]->end());
      buffer.insert(buffer.end(), tail.begin(), tail.end());
      p.add_term(Word(buffer), c);
    }
    if (p.is_zero()) return;
    Rational lead = p.coeff(p.leading_word());
    if (lead != 1) p *= Rational(1) / lead;
    std::size_t h = 0;
    for (const auto& [w, c] : p.terms()) {
      h = h * 1099511628211ULL + WordHash{}(w);
      h = h * 1099511628211ULL + hash_rational(c);
    }
    auto& bucket = seen[h];
    for (std::size_t idx : bucket)
      if (result[idx] == p) return;
    bucket.push_back(result.size());
    result.push_back(std::move(p));
  };

  for (std::uint32_t lu = 0; lu + 3 <= n; ++lu) {
    blocks.enumerate(u, lu, [&]() {
      for (std::uint32_t l1 = 1; lu + l1 + 2 <= n; ++l1) {
        blocks.enumerate(m1, l1, [&]() {
          for (std::uint32_t l2 = 1; lu + l1 + l2 + 1 <= n; ++l2) {
            blocks.enumerate(m2, l2, [&]() {
              // Argument symmetry of the identity: enumerate one orbit
              // representative (sorted arguments) only.
              if (shape.sym == DefiningShape::Sym::Alternating &&
                  !deglex_less(m1, m2))
                return;
              if (shape.sym == DefiningShape::Sym::Symmetric && deglex_less(m2, m1))
                return;
              for (std::uint32_t l3 = 1; lu + l1 + l2 + l3 <= n; ++l3) {
                blocks.enumerate(m3, l3, [&]() {
                  if (shape.sym == DefiningShape::Sym::Alternating &&
                      !deglex_less(m2, m3))
                    return;
                  if (shape.sym == DefiningShape::Sym::Symmetric &&
                      deglex_less(m3, m2))
                    return;
                  std::uint32_t lv = n - lu - l1 - l2 - l3;
                  blocks.enumerate(tail, lv, emit);
                });
              }
            });
          }
        });
      }
    });
  }
  return result;
}

std::shared_ptr<const RelationBasis> Oracle::basis(const VarietyId& v, const Multidegree& d,
                                                   bool provenance) {
  auto key = std::make_tuple(v.key(), d, provenance);
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    if (!provenance) {
      auto it2 = cache_.find(std::make_tuple(v.key(), d, true));
      if (it2 != cache_.end()) return it2->second;
    }
  }
  std::unique_lock lock(mutex_);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  std::vector<FreePoly> consequences =
      d.total() >= 3 ? generate_consequences(v, d) : std::vector<FreePoly>{};
  EchelonBuilder builder(d, provenance);
  for (std::size_t i = 0; i < consequences.size(); ++i)
    builder.insert(consequences[i], static_cast<std::int32_t>(i));
  auto basis = std::make_shared<const RelationBasis>(builder.finish(std::move(consequences)));
  cache_.emplace(std::move(key), basis);
  return basis;
}

std::size_t Oracle::free_dim(const Multidegree& d) {
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), d.total());
  for (const auto& [g, m] : d.counts()) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m);
    num /= f;
  }
  if (!num.fits_ulong_p()) throw std::overflow_error("free dimension too large");
  return static_cast<std::size_t>(num.get_ui());
}

std::size_t Oracle::dim_quotient(const VarietyId& v, const Multidegree& d) {
  if (d.total() < 3) return free_dim(d);
  return free_dim(d) - basis(v, d)->rank();
}

FreePoly Oracle::reduce(const FreePoly& p, const VarietyId& v) {
  FreePoly out;
  for (const auto& [d, comp] : p.homogeneous_components()) {
    if (d.total() < 3)
      out += comp;
    else
      out += basis(v, d)->reduce(comp);
  }
  return out;
}

bool Oracle::is_identity(const FreePoly& p, const VarietyId& v) {
  for (const auto& [d, comp] : p.homogeneous_components()) {
    if (d.total() < 3) return false;  // no relations below degree 3
    if (!basis(v, d)->reduce(comp).is_zero()) return false;
  }
  return true;
}

std::optional<Certificate> Oracle::certify(const FreePoly& p, const VarietyId& v) {
  Certificate cert;
  for (const auto& [d, comp] : p.homogeneous_components()) {
    if (d.total() < 3) return std::nullopt;
    auto [remainder, part] = basis(v, d, true)->reduce_tracked(comp);
    if (!remainder.is_zero()) return std::nullopt;
    cert.insert(cert.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  return cert;
}

}  // namespace malcev
