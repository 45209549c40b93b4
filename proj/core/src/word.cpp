#include "malcev/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace malcev {

Multidegree::Multidegree(std::map<GenIndex, std::uint32_t> counts) : counts_(std::move(counts)) {
  for (const auto& [g, m] : counts_) {
    if (g == 0) throw OutOfRangeError("generator index 0 in multidegree");
    if (m == 0) throw std::invalid_argument("zero multiplicity in multidegree");
  }
}

Multidegree Multidegree::multilinear(GenIndex n) {
  std::map<GenIndex, std::uint32_t> c;
  for (GenIndex g = 1; g <= n; ++g) c[g] = 1;
  return Multidegree(std::move(c));
}

std::uint32_t Multidegree::total() const {
  std::uint32_t t = 0;
  for (const auto& [g, m] : counts_) t += m;
  return t;
}

std::uint32_t Multidegree::multiplicity(GenIndex g) const {
  auto it = counts_.find(g);
  return it == counts_.end() ? 0 : it->second;
}

bool Multidegree::is_multilinear() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](const auto& e) { return e.second == 1; });
}

std::vector<GenIndex> Multidegree::support() const {
  std::vector<GenIndex> s;
  s.reserve(counts_.size());
  for (const auto& [g, m] : counts_) s.push_back(g);
  return s;
}

GenIndex Multidegree::max_generator() const {
  if (counts_.empty()) throw std::logic_error("empty multidegree");
  return counts_.rbegin()->first;
}

Multidegree Multidegree::operator+(const Multidegree& other) const {
  std::map<GenIndex, std::uint32_t> c = counts_;
  for (const auto& [g, m] : other.counts_) c[g] += m;
  return Multidegree(std::move(c));
}

Multidegree Multidegree::minus_one(GenIndex g) const {
  auto c = counts_;
  auto it = c.find(g);
  if (it == c.end()) throw OutOfRangeError("generator not in multidegree");
  if (--it->second == 0) c.erase(it);
  return Multidegree(std::move(c));
}

bool Multidegree::operator<(const Multidegree& other) const {
  auto ta = total(), tb = other.total();
  if (ta != tb) return ta < tb;
  return counts_ < other.counts_;
}

std::string Multidegree::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, m] : counts_) {
    if (!first) os << ',';
    os << g << ':' << m;
    first = false;
  }
  return os.str();
}

std::string Multidegree::monomial_str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, m] : counts_) {
    if (!first) os << ' ';
    os << 'x' << g;
    if (m > 1) os << '^' << m;
    first = false;
  }
  return os.str();
}

Multidegree Multidegree::from_string(std::string_view text) {
  std::map<GenIndex, std::uint32_t> c;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    std::size_t colon = item.find(':');
    unsigned long g = 0, m = 1;
    if (colon == std::string_view::npos) {
      auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), g);
      if (ec != std::errc() || p != item.data() + item.size())
        throw std::invalid_argument("malformed multidegree: " + std::string(text));
    } else {
      auto lhs = item.substr(0, colon);
      auto rhs = item.substr(colon + 1);
      auto [p1, e1] = std::from_chars(lhs.data(), lhs.data() + lhs.size(), g);
      auto [p2, e2] = std::from_chars(rhs.data(), rhs.data() + rhs.size(), m);
      if (e1 != std::errc() || e2 != std::errc() || p1 != lhs.data() + lhs.size() ||
          p2 != rhs.data() + rhs.size())
        throw std::invalid_argument("malformed multidegree: " + std::string(text));
    }
    if (g == 0 || m == 0) throw std::invalid_argument("malformed multidegree: " + std::string(text));
    c[static_cast<GenIndex>(g)] += static_cast<std::uint32_t>(m);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (c.empty()) throw std::invalid_argument("empty multidegree");
  return Multidegree(std::move(c));
}

Word::Word(std::vector<GenIndex> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("empty word");
  for (GenIndex g : letters_)
    if (g == 0) throw OutOfRangeError("generator index 0");
}

Word Word::single(GenIndex g) { return Word(std::vector<GenIndex>{g}); }

Word Word::concat(const Word& other) const {
  std::vector<GenIndex> l = letters_;
  l.insert(l.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(l));
}

Multidegree Word::multidegree() const {
  std::map<GenIndex, std::uint32_t> c;
  for (GenIndex g : letters_) ++c[g];
  return Multidegree(std::move(c));
}

bool Word::operator<(const Word& other) const {
  if (letters_.size() != other.letters_.size()) return letters_.size() < other.letters_.size();
  return letters_ < other.letters_;
}

std::string Word::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << '*';
    os << 'x' << letters_[i];
  }
  return os.str();
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = w.size();
  for (GenIndex g : w.letters()) h = h * 1099511628211ULL + g;
  return h;
}

}  // namespace malcev
