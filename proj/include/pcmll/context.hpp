// Series-parallel ordered multisets of formula occurrences.
//
// A context is the left-hand side of a sequent: a multiset of formula
// occurrences carrying a series-parallel partial order. Terms are kept in a
// canonical form (nested series/parallel nodes flattened, parallel children
// sorted) so that equality of posets is structural equality of terms. The
// empty context is represented by a null SpPtr and is only legal as a whole
// left-hand side.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pcmll/formula.hpp"

namespace pcmll {

using OccId = uint32_t;

// A formula occurrence. Two occurrences of the same formula are distinct;
// ids are unique across one proof. Id 0 is reserved for the substitution
// hole.
struct Occurrence {
  const Formula* formula = nullptr;
  OccId id = 0;
  bool operator==(const Occurrence& o) const { return formula == o.formula && id == o.id; }
};

constexpr OccId kHoleId = 0;

class SpTerm;
using SpPtr = std::shared_ptr<const SpTerm>;

class SpTerm {
 public:
  enum class Kind : uint8_t { Leaf, Seq, Par };

  Kind kind() const { return kind_; }
  const Occurrence& occ() const { return occ_; }
  const std::vector<SpPtr>& children() const { return children_; }
  bool is_hole() const { return kind_ == Kind::Leaf && occ_.id == kHoleId; }
  size_t leaf_count() const { return leaves_; }

  static SpPtr leaf(Occurrence o);
  static SpPtr hole();
  // Raw constructors; results are not canonical until canonicalize().
  static SpPtr seq(std::vector<SpPtr> children);
  static SpPtr par(std::vector<SpPtr> children);

 private:
  Kind kind_ = Kind::Leaf;
  Occurrence occ_;
  std::vector<SpPtr> children_;
  size_t leaves_ = 1;
};

// Total deterministic order on canonical terms: leaves before composites,
// leaves by (formula print, id), composites lexicographically by children.
int sp_compare(const SpPtr& a, const SpPtr& b);
bool sp_equal(const SpPtr& a, const SpPtr& b);

// Flatten associativity, collapse singletons, sort parallel children.
// Idempotent. A null term stays null.
SpPtr canonicalize(const SpPtr& t);

// Series / parallel composition of possibly empty canonical contexts.
SpPtr seq_compose(const SpPtr& a, const SpPtr& b);
SpPtr par_compose(const SpPtr& a, const SpPtr& b);

// All occurrences, left to right.
std::vector<Occurrence> occurrences(const SpPtr& t);
// The occurrence with the given id, if present.
std::optional<Occurrence> find_occurrence(const SpPtr& t, OccId id);
bool contains_id(const SpPtr& t, OccId id);

// The induced strict partial order as explicit id pairs (a before b).
std::set<std::pair<OccId, OccId>> order_pairs(const SpPtr& t);

// Entropy test: same occurrences (matched by id, with equal formulas) and
// order_pairs(weaker) included in order_pairs(stronger).
bool entropy_leq(const SpPtr& weaker, const SpPtr& stronger);

// A context with exactly one hole leaf.
struct HoleContext {
  SpPtr term;  // contains exactly one hole leaf; may be the hole itself
};

// Plug a context into the hole; the result is canonical. delta may be null
// (the hole vanishes). Throws if delta shares ids with the surrounding term.
SpPtr substitute(const HoleContext& holectx, const SpPtr& delta);

// Remove one leaf occurrence, canonicalizing the remainder (possibly null).
SpPtr remove_occurrence(const SpPtr& t, OccId id);

enum class PairMode : uint8_t { SeqPair, ParPair };

// If occurrences a, b are equivalent (every other element compares to both
// alike) and a<b in seq mode / incomparable in par mode, return the context
// obtained by carving exactly {a, b} out as one hole. Otherwise nullopt.
std::optional<HoleContext> find_equiv_pair(const SpPtr& ctx, OccId a, OccId b, PairMode mode);

// Replace one occurrence with an arbitrary (possibly null) canonical context.
SpPtr substitute_occurrence(const SpPtr& t, OccId id, const SpPtr& replacement);

// Surface syntax used in proof files, e.g. "<x:a; (y:b, z:c)>".
std::string print_context(const SpPtr& t, const class NameTable& names);

// True iff the order is total (no parallel node).
bool is_totally_ordered(const SpPtr& t);

}  // namespace pcmll
