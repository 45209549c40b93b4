#include "malcev/bracket_expr.hpp"

#include <sstream>
#include <stdexcept>

namespace malcev {

struct BracketExpr::Node {
  Kind kind;
  GenIndex gen = 0;
  Rational coeff;
  std::vector<BracketExpr> kids;
};

BracketExpr BracketExpr::var(GenIndex g) {
  if (g == 0) throw OutOfRangeError("generator index 0");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->gen = g;
  return BracketExpr(std::move(n));
}

BracketExpr BracketExpr::scalar(Rational c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Scalar;
  n->coeff = std::move(c);
  return BracketExpr(std::move(n));
}

BracketExpr BracketExpr::sum(std::vector<BracketExpr> terms) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->kids = std::move(terms);
  return BracketExpr(std::move(n));
}

BracketExpr BracketExpr::prod(std::vector<BracketExpr> factors) {
  if (factors.size() < 2) throw std::invalid_argument("product needs at least two factors");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prod;
  n->kids = std::move(factors);
  return BracketExpr(std::move(n));
}

BracketExpr BracketExpr::comm(BracketExpr lhs, BracketExpr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Comm;
  n->kids = {std::move(lhs), std::move(rhs)};
  return BracketExpr(std::move(n));
}

BracketExpr BracketExpr::acomm(BracketExpr lhs, BracketExpr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::AComm;
  n->kids = {std::move(lhs), std::move(rhs)};
  return BracketExpr(std::move(n));
}

BracketExpr BracketExpr::scaled(Rational c, BracketExpr e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Scaled;
  n->coeff = std::move(c);
  n->kids = {std::move(e)};
  return BracketExpr(std::move(n));
}

BracketExpr::Kind BracketExpr::kind() const { return node_->kind; }
GenIndex BracketExpr::gen() const { return node_->gen; }
const Rational& BracketExpr::coefficient() const { return node_->coeff; }
const std::vector<BracketExpr>& BracketExpr::operands() const { return node_->kids; }
const BracketExpr& BracketExpr::left() const { return node_->kids.at(0); }
const BracketExpr& BracketExpr::right() const { return node_->kids.at(1); }
const BracketExpr& BracketExpr::child() const { return node_->kids.at(0); }

FreePoly BracketExpr::expand() const {
  switch (node_->kind) {
    case Kind::Var:
      return FreePoly::generator(node_->gen);
    case Kind::Scalar:
      throw std::logic_error("standalone scalar has no expansion in a non-unital algebra");
    case Kind::Sum: {
      FreePoly p;
      for (const auto& t : node_->kids) p += t.expand();
      return p;
    }
    case Kind::Prod: {
      FreePoly p = node_->kids.front().expand();
      for (std::size_t i = 1; i < node_->kids.size(); ++i) p = p * node_->kids[i].expand();
      return p;
    }
    case Kind::Comm:
      return commutator(left().expand(), right().expand());
    case Kind::AComm:
      return anticommutator(left().expand(), right().expand());
    case Kind::Scaled:
      return node_->coeff * child().expand();
  }
  throw std::logic_error("unreachable");
}

std::string BracketExpr::str() const {
  std::ostringstream os;
  switch (node_->kind) {
    case Kind::Var:
      os << 'x' << node_->gen;
      break;
    case Kind::Scalar:
      os << to_string(node_->coeff);
      break;
    case Kind::Sum:
      for (std::size_t i = 0; i < node_->kids.size(); ++i) {
        if (i) os << " + ";
        os << node_->kids[i].str();
      }
      break;
    case Kind::Prod:
      for (std::size_t i = 0; i < node_->kids.size(); ++i) {
        if (i) os << '*';
        const auto& k = node_->kids[i];
        bool wrap = k.kind() == Kind::Sum || k.kind() == Kind::Scaled;
        os << (wrap ? "(" : "") << k.str() << (wrap ? ")" : "");
      }
      break;
    case Kind::Comm:
      os << '[' << left().str() << ',' << right().str() << ']';
      break;
    case Kind::AComm:
      os << '{' << left().str() << ',' << right().str() << '}';
      break;
    case Kind::Scaled: {
      bool wrap = child().kind() == Kind::Sum;
      os << to_string(node_->coeff) << '*' << (wrap ? "(" : "") << child().str()
         << (wrap ? ")" : "");
      break;
    }
  }
  return os.str();
}

bool BracketExpr::operator==(const BracketExpr& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  if (node_->gen != other.node_->gen) return false;
  if (node_->coeff != other.node_->coeff) return false;
  if (node_->kids.size() != other.node_->kids.size()) return false;
  for (std::size_t i = 0; i < node_->kids.size(); ++i)
    if (!(node_->kids[i] == other.node_->kids[i])) return false;
  return true;
}

std::string render(const FreePoly& p) { return p.str(); }

}  // namespace malcev
