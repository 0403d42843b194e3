// Formulas of partially commutative multiplicative linear logic.
//
// Five connectives over atoms: the non-commutative product (o), the
// commutative product (*), the two directed implications (\ and /) and the
// commutative implication (-o). Formulas are interned: structural equality
// is pointer equality, and every formula carries its canonical print form.

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>

namespace pcmll {

enum class Conn : uint8_t {
  Atom,
  NcProd,  // A o B
  CProd,   // A * B
  LDiv,    // A \ C   (argument on the left)
  RDiv,    // C / A   (argument on the right)
  LinImp,  // A -o C
};

class Formula {
 public:
  Conn conn() const { return conn_; }
  bool is_atom() const { return conn_ == Conn::Atom; }

  // Atom name (valid only for atoms).
  const std::string& name() const { return name_; }

  // Children (valid only for non-atoms). For LDiv and LinImp `left` is the
  // argument; for RDiv `left` is the result.
  const Formula* left() const { return left_; }
  const Formula* right() const { return right_; }

  // Argument and result of an implication connective.
  const Formula* arg() const { return conn_ == Conn::RDiv ? right_ : left_; }
  const Formula* result() const { return conn_ == Conn::RDiv ? left_ : right_; }

  bool is_implication() const {
    return conn_ == Conn::LDiv || conn_ == Conn::RDiv || conn_ == Conn::LinImp;
  }
  bool is_product() const {
    return conn_ == Conn::NcProd || conn_ == Conn::CProd;
  }

  // Canonical surface form, e.g. "wh * (k * d) / n".
  const std::string& print() const { return print_; }

  size_t node_count() const { return nodes_; }

 private:
  friend class FormulaArena;
  Conn conn_;
  std::string name_;
  const Formula* left_ = nullptr;
  const Formula* right_ = nullptr;
  std::string print_;
  size_t nodes_ = 1;
};

// Interning constructors. Atom names are case-insensitive and normalized to
// lower case; "o" is reserved for the non-commutative product operator.
const Formula* atom(std::string_view name);
const Formula* nc_prod(const Formula* a, const Formula* b);
const Formula* c_prod(const Formula* a, const Formula* b);
const Formula* ldiv(const Formula* arg, const Formula* result);
const Formula* rdiv(const Formula* result, const Formula* arg);
const Formula* lin_imp(const Formula* arg, const Formula* result);
const Formula* make(Conn c, const Formula* a, const Formula* b);

// Reflexive-transitive closure of the immediate-subformula relation.
std::set<const Formula*> subformulas(const Formula* f);

// Total order used wherever a deterministic formula order is needed:
// lexicographic on the canonical print form.
inline bool formula_less(const Formula* a, const Formula* b) {
  return a != b && a->print() < b->print();
}

}  // namespace pcmll
