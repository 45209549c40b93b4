#include "malcev/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace malcev {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rat_from_string(std::string_view text) {
  // Shape check up front: mpq_set_str accepts bases and whitespace we do not want.
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
  if (digits == 0) throw std::invalid_argument("malformed rational: " + std::string(text));
  if (i < text.size()) {
    if (text[i] != '/') throw std::invalid_argument("malformed rational: " + std::string(text));
    ++i;
    std::size_t den_digits = 0;
    std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++den_digits;
    if (den_digits == 0 || i != text.size())
      throw std::invalid_argument("malformed rational: " + std::string(text));
    if (text.substr(den_start).find_first_not_of('0') == std::string_view::npos)
      throw std::invalid_argument("rational with zero denominator: " + std::string(text));
  }
  Rational q(std::string(text), 10);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::size_t hash_rational(const Rational& r) {
  // Cheap residue hash; collisions only cost an extra comparison in callers.
  constexpr unsigned long kMod = 0x1fffffffffffffffUL;
  unsigned long num = mpz_fdiv_ui(r.get_num_mpz_t(), kMod);
  unsigned long den = mpz_fdiv_ui(r.get_den_mpz_t(), kMod);
  std::size_t h = num * 1000003UL + den;
  if (sgn(r) < 0) h = ~h;
  return h;
}

}  // namespace malcev
