#include "pcmll/formula.hpp"

#include <cassert>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace pcmll {

namespace {

struct Key {
  Conn conn;
  std::string name;
  const Formula* left;
  const Formula* right;
  bool operator==(const Key& o) const {
    return conn == o.conn && name == o.name && left == o.left && right == o.right;
  }
};

struct KeyHash {
  size_t operator()(const Key& k) const {
    size_t h = std::hash<int>()(static_cast<int>(k.conn));
    h = h * 31 + std::hash<std::string>()(k.name);
    h = h * 31 + std::hash<const void*>()(k.left);
    h = h * 31 + std::hash<const void*>()(k.right);
    return h;
  }
};

bool needs_parens_in_product(const Formula* f, bool right_operand) {
  if (f->is_implication()) return true;
  if (f->is_product()) return right_operand;  // products associate left
  return false;
}

// Operand of an implication connective: products bind tighter, so only
// implications need parentheses.
std::string print_prod_operand(const Formula* f) {
  if (f->is_implication()) return "(" + f->print() + ")";
  return f->print();
}

std::string print_of(Conn c, const std::string& name, const Formula* l, const Formula* r) {
  switch (c) {
    case Conn::Atom:
      return name;
    case Conn::NcProd:
    case Conn::CProd: {
      std::string ls = needs_parens_in_product(l, false) ? "(" + l->print() + ")" : l->print();
      std::string rs = needs_parens_in_product(r, true) ? "(" + r->print() + ")" : r->print();
      return ls + (c == Conn::NcProd ? " o " : " * ") + rs;
    }
    case Conn::LDiv: {
      // A \ C: C stays bare only if it is itself a backslash chain.
      std::string cs = (r->conn() == Conn::LDiv) ? r->print()
                       : r->is_implication()     ? "(" + r->print() + ")"
                                                 : r->print();
      return print_prod_operand(l) + " \\ " + cs;
    }
    case Conn::RDiv: {
      // C / A: a backslash chain or slash chain on the left reads back
      // unambiguously (all \ group before all /).
      std::string cs = (l->conn() == Conn::LDiv || l->conn() == Conn::RDiv)
                           ? l->print()
                       : l->is_implication() ? "(" + l->print() + ")"
                                             : l->print();
      return cs + " / " + print_prod_operand(r);
    }
    case Conn::LinImp: {
      std::string cs = (r->conn() == Conn::LinImp) ? r->print()
                       : r->is_implication()       ? "(" + r->print() + ")"
                                                   : r->print();
      return print_prod_operand(l) + " -o " + cs;
    }
  }
  return {};
}

class FormulaArenaImpl {
 public:
  const Formula* intern(Conn c, std::string name, const Formula* l, const Formula* r) {
    std::lock_guard<std::mutex> lock(mu_);
    Key k{c, name, l, r};
    auto it = table_.find(k);
    if (it != table_.end()) return it->second;
    store_.emplace_back();
    Formula& f = store_.back();
    f.conn_ = c;
    f.name_ = std::move(name);
    f.left_ = l;
    f.right_ = r;
    f.print_ = print_of(c, f.name_, l, r);
    f.nodes_ = 1 + (l ? l->node_count() : 0) + (r ? r->node_count() : 0);
    table_.emplace(std::move(k), &f);
    return &f;
  }

 private:
  std::mutex mu_;
  std::deque<Formula> store_;
  std::unordered_map<Key, const Formula*, KeyHash> table_;

  friend class ::pcmll::FormulaArena;
};

FormulaArenaImpl& arena() {
  static FormulaArenaImpl a;
  return a;
}

}  // namespace

class FormulaArena {};  // befriended by Formula; construction goes through intern()

const Formula* atom(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty atom name");
  std::string lowered;
  lowered.reserve(name.size());
  for (char ch : name) {
    bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
              (ch >= '0' && ch <= '9') || ch == '_';
    if (!ok) throw std::invalid_argument("bad atom name: " + std::string(name));
    lowered.push_back(ch >= 'A' && ch <= 'Z' ? char(ch - 'A' + 'a') : ch);
  }
  if (lowered[0] >= '0' && lowered[0] <= '9')
    throw std::invalid_argument("atom must start with a letter: " + std::string(name));
  if (lowered == "o")
    throw std::invalid_argument("'o' is reserved for the non-commutative product");
  return arena().intern(Conn::Atom, std::move(lowered), nullptr, nullptr);
}

const Formula* make(Conn c, const Formula* a, const Formula* b) {
  assert(c != Conn::Atom && a && b);
  return arena().intern(c, {}, a, b);
}

const Formula* nc_prod(const Formula* a, const Formula* b) { return make(Conn::NcProd, a, b); }
const Formula* c_prod(const Formula* a, const Formula* b) { return make(Conn::CProd, a, b); }
const Formula* ldiv(const Formula* arg, const Formula* result) { return make(Conn::LDiv, arg, result); }
const Formula* rdiv(const Formula* result, const Formula* arg) { return make(Conn::RDiv, result, arg); }
const Formula* lin_imp(const Formula* arg, const Formula* result) { return make(Conn::LinImp, arg, result); }

std::set<const Formula*> subformulas(const Formula* f) {
  std::set<const Formula*> out;
  std::deque<const Formula*> work{f};
  while (!work.empty()) {
    const Formula* cur = work.front();
    work.pop_front();
    if (!out.insert(cur).second) continue;
    if (!cur->is_atom()) {
      work.push_back(cur->left());
      work.push_back(cur->right());
    }
  }
  return out;
}

}  // namespace pcmll
