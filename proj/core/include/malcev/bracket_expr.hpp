#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "malcev/freepoly.hpp"

namespace malcev {

/// AST for expressions over generators with products, commutators [.,.],
/// anti-commutators {.,.} and rational scalars. Immutable; cheap to copy.
class BracketExpr {
public:
  enum class Kind { Var, Scalar, Sum, Prod, Comm, AComm, Scaled };

  static BracketExpr var(GenIndex g);
  static BracketExpr scalar(Rational c);
  static BracketExpr sum(std::vector<BracketExpr> terms);
  static BracketExpr prod(std::vector<BracketExpr> factors);  // length >= 2
  static BracketExpr comm(BracketExpr lhs, BracketExpr rhs);
  static BracketExpr acomm(BracketExpr lhs, BracketExpr rhs);
  static BracketExpr scaled(Rational c, BracketExpr e);

  Kind kind() const;
  GenIndex gen() const;                              // Var
  const Rational& coefficient() const;               // Scalar / Scaled
  const std::vector<BracketExpr>& operands() const;  // Sum / Prod
  const BracketExpr& left() const;                   // Comm / AComm
  const BracketExpr& right() const;
  const BracketExpr& child() const;                  // Scaled

  /// Expansion into the free algebra: [a,b] -> ab - ba, {a,b} -> ab + ba.
  /// A stray Scalar node (possible only by manual construction) throws
  /// std::logic_error: the algebra has no unit to absorb it.
  FreePoly expand() const;

  std::string str() const;
  bool operator==(const BracketExpr& other) const;

private:
  struct Node;
  explicit BracketExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses the bracket-expression grammar (explicit '*', letters a..h alias
/// x1..x8). Throws SyntaxError / OutOfRangeError; never crashes on bad input.
BracketExpr parse(std::string_view text);

/// Canonical rendering of a polynomial with explicit '*' products; satisfies
/// expand(parse(render(p))) == p.
std::string render(const FreePoly& p);

}  // namespace malcev
