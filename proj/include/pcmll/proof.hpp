// Natural-deduction proof trees and the rule-by-rule checker.
//
// A proof node stores its rule, its conclusion sequent and its premises,
// plus the little extra data some rules need: the discharged occurrence for
// implication introductions, the designated hypothesis pair for product
// eliminations, the word for lexical leaves. Everything is immutable;
// rewrites build new trees.
//
// Leaves come in three kinds: `Axiom` (A |- A), `ProperAxiom` (a lexical
// entry |- w:T, only meaningful against a lexicon) and `Assume`, an opaque
// assumed sequent. Assume leaves stand in for schematic sub-derivations;
// hypotheses living inside them cannot be grafted into, which makes a redex
// discharging such a hypothesis uncontractible.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcmll/context.hpp"

namespace pcmll {

enum class RuleKind : uint8_t {
  Axiom,
  Assume,
  ProperAxiom,
  LtoE,     // \ elimination
  LtoI,     // \ introduction
  LfromE,   // / elimination
  LfromI,   // / introduction
  LltoE,    // -o elimination
  LltoI,    // -o introduction
  OdotI,    // o introduction
  OdotE,    // o elimination
  OtimesI,  // * introduction
  OtimesE,  // * elimination
  Entropy,
};

const char* rule_name(RuleKind k);
std::optional<RuleKind> rule_from_name(const std::string& name);

struct Sequent {
  SpPtr lhs;  // canonical; null = empty context
  const Formula* rhs = nullptr;
};

bool sequent_equal(const Sequent& a, const Sequent& b);

class Proof;
using ProofPtr = std::shared_ptr<const Proof>;
using Path = std::vector<int>;

class Proof {
 public:
  RuleKind rule() const { return rule_; }
  const Sequent& conclusion() const { return conclusion_; }
  const std::vector<ProofPtr>& premises() const { return premises_; }
  OccId discharged() const { return discharged_; }
  OccId pair_a() const { return pair_a_; }
  OccId pair_b() const { return pair_b_; }
  const std::string& word() const { return word_; }
  size_t node_count() const { return nodes_; }

  bool is_leaf() const {
    return rule_ == RuleKind::Axiom || rule_ == RuleKind::Assume ||
           rule_ == RuleKind::ProperAxiom;
  }

 private:
  friend struct ProofBuilder;
  RuleKind rule_;
  Sequent conclusion_;
  std::vector<ProofPtr> premises_;
  OccId discharged_ = kHoleId;
  OccId pair_a_ = kHoleId, pair_b_ = kHoleId;
  std::string word_;
  size_t nodes_ = 1;
};

// Thrown by the mk_* constructors when a rule schema does not apply.
struct RuleError : std::runtime_error {
  explicit RuleError(const std::string& m) : std::runtime_error(m) {}
};

// Rule constructors. Each computes the conclusion the rule schema dictates
// and throws RuleError if the premises do not fit. Premise order follows
// the rule figures: arguments of \ and -o on the left, of / on the right;
// product eliminations take the product premise first, then the premise the
// designated pair is carved from.
ProofPtr mk_axiom(Occurrence o);
ProofPtr mk_assume(Sequent s);
ProofPtr mk_proper_axiom(std::string word, const Formula* type);
ProofPtr mk_lto_e(ProofPtr arg, ProofPtr fun);
ProofPtr mk_lfrom_e(ProofPtr fun, ProofPtr arg);
ProofPtr mk_llto_e(ProofPtr arg, ProofPtr fun);
ProofPtr mk_lto_i(ProofPtr premise, OccId discharged);
ProofPtr mk_lfrom_i(ProofPtr premise, OccId discharged);
ProofPtr mk_llto_i(ProofPtr premise, OccId discharged);
ProofPtr mk_odot_i(ProofPtr left, ProofPtr right);
ProofPtr mk_otimes_i(ProofPtr left, ProofPtr right);
ProofPtr mk_odot_e(ProofPtr product, ProofPtr host, OccId a, OccId b);
ProofPtr mk_otimes_e(ProofPtr product, ProofPtr host, OccId a, OccId b);
ProofPtr mk_entropy(ProofPtr premise, SpPtr weaker_lhs);

// Rebuild a node of the given kind from altered premises, reusing extras.
ProofPtr rebuild(const Proof& like, std::vector<ProofPtr> premises);

// Unvalidated node constructor for the file parser; check() validates the
// stated conclusions afterwards.
ProofPtr make_raw_node(RuleKind rule, Sequent conclusion, std::vector<ProofPtr> premises,
                       OccId discharged = kHoleId, OccId pair_a = kHoleId,
                       OccId pair_b = kHoleId, std::string word = {});

bool is_elimination(RuleKind k);
bool is_introduction(RuleKind k);
bool is_implicative_elim(RuleKind k);
bool is_product_elim(RuleKind k);
bool is_implication_intro(RuleKind k);
size_t rule_arity(RuleKind k);

// Which premise carries the formula the elimination removes.
int eliminated_premise_index(RuleKind k);
// Which premise the principal branch crosses into (marker premise of
// product eliminations, function premise of implicative ones, the sole
// premise of unary rules); -1 when the branch stops.
int branch_premise_index(RuleKind k);

const Proof* node_at(const ProofPtr& p, const Path& path);
ProofPtr subtree_at(const ProofPtr& p, const Path& path);
// Rebuild the proof with the subtree at `path` replaced.
ProofPtr replace_at(const ProofPtr& p, const Path& path, ProofPtr sub);

struct RuleViolation {
  Path where;
  RuleKind rule;
  std::string message;
};

struct CheckOptions {
  // Validates a proper axiom |- word : type. Unset means proper axioms are
  // rejected (pure kernel mode).
  std::function<bool(const std::string&, const Formula*)> lexical;
};

struct CheckResult {
  bool ok = true;
  std::optional<RuleViolation> violation;
};

// Validate every node against its rule schema, plus proof-global occurrence
// id uniqueness.
CheckResult check(const ProofPtr& p, const CheckOptions& opts = {});

// The principal branch upward from `from`: the node itself, then the chain
// of premises selected by branch_premise_index, starting with the premise
// carrying the eliminated formula when `from` is an elimination.
std::vector<Path> principal_branch(const ProofPtr& p, const Path& from);

// The nearest introduction of the formula eliminated at `elim` along its
// principal branch; nullopt when there is none.
std::optional<Path> conjoined(const ProofPtr& p, const Path& elim);

// Where the hypothesis occurrence `id` enters the proof: the Axiom leaf that
// introduces it, or the Assume leaf whose left-hand side lists it.
std::optional<Path> introducing_leaf(const ProofPtr& p, OccId id);

bool proof_equal(const ProofPtr& a, const ProofPtr& b);
size_t proof_hash(const ProofPtr& p);

// All occurrence ids introduced by leaves of p.
std::vector<OccId> leaf_ids(const ProofPtr& p);
// Largest occurrence id anywhere in p (0 if none).
OccId max_id(const ProofPtr& p);

// Lambek-with-product fragment: rules restricted to axioms, assumptions,
// proper axioms, \ / o, totally ordered contexts, product-free of * and -o.
bool in_lambek_fragment(const ProofPtr& p);

}  // namespace pcmll
