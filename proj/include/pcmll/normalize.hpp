// Redex detection, the rewrite steps, the two lexicographic measures, the
// normalization loops, and the sub-formula verifier.
//
// A plain redex is one of the seven introduction/elimination adjacencies.
// An extended redex connects an elimination to the nearest introduction of
// the eliminated formula along its principal branch, k rules apart. The
// pcmll measure is <r, e, g>: rule count, least nonzero k over implicative
// eliminations, least nonzero k over product eliminations. The lambek
// measure is <n, h, g> with h = 2*e + sum of d_conj over non-commutative
// product eliminations, where d_conj counts the non-product-elimination
// rules separating the elimination from the rule that links its designated
// pair (the e term keeps every strategy step strictly decreasing).
//
// A redex whose contraction would have to graft into an opaque assumption
// leaf is not contractible and is not reported; normal forms are always
// relative to such schematic leaves.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcmll/proof.hpp"

namespace pcmll {

enum class Mode : uint8_t { Lambek, Pcmll };

struct Measure {
  uint64_t a = 0, b = 0, c = 0;
  friend bool operator<(const Measure& x, const Measure& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.c < y.c;
  }
  friend bool operator==(const Measure& x, const Measure& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
  std::string str() const {
    return "<" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ">";
  }
};

// Distance to the nearest conjoined introduction (0 = plain adjacency),
// nullopt when the principal branch carries none.
std::optional<size_t> redex_distance(const ProofPtr& p, const Path& elim);

// Least nonzero distance over implicative (resp. product) eliminations;
// 0 when there is none.
uint64_t implicative_extension(const ProofPtr& p);
uint64_t product_extension(const ProofPtr& p);

// d_conj of a non-commutative product elimination (lambek measure).
uint64_t d_conj(const ProofPtr& p, const Path& at);

Measure measure_l(const ProofPtr& p);       // requires the Lambek fragment
Measure measure_pcmll(const ProofPtr& p);
Measure measure(const ProofPtr& p, Mode mode);

enum class RedexKind : uint8_t {
  LtoRedex, LfromRedex, LltoRedex, OdotLeft, OdotRight, OtimesLeft, OtimesRight,
};

const char* redex_kind_name(RedexKind k);

struct RedexSite {
  RedexKind kind;
  Path location;
};

// All contractible plain redexes, leftmost-innermost first.
std::vector<RedexSite> find_redexes(const ProofPtr& p);

// Apply the contraction scheme of the redex at `site`.
ProofPtr contract(const ProofPtr& p, const RedexSite& site);

// Commute a product elimination with the last rule of the premise its pair
// is carved from (the elimination moves up). Throws RuleError when the rule
// above does not admit it.
ProofPtr raise_product_elim(const ProofPtr& p, const Path& at);

// Commute a product elimination with the last rule of its product premise
// (a product elimination or entropy), moving it toward the conjoined
// introduction.
ProofPtr raise_product_elim_left(const ProofPtr& p, const Path& at);

// Commute an implicative elimination with the product elimination or
// entropy producing its function premise (the product step drops below).
ProofPtr raise_implicative_elim(const ProofPtr& p, const Path& at);

struct Step {
  ProofPtr result;
  std::string kind;
  Path at;
};

// The deterministic strategy's next step: contract the leftmost-innermost
// redex; else lower the least-extended implicative elimination; else (lambek)
// raise the lowest product elimination with nonzero d_conj; else raise the
// least-extended product elimination toward its introduction. Only steps
// that strictly decrease the mode's measure are taken.
std::optional<Step> next_step(const ProofPtr& p, Mode mode);

// Every measure-decreasing rewrite available at p (for the confluence
// oracles); deduplicated by resulting proof.
std::vector<Step> all_steps(const ProofPtr& p, Mode mode);

struct TraceEntry {
  std::string kind;
  Path at;
  Measure after;
};

struct NormalizeResult {
  ProofPtr proof;
  bool normal = true;  // false iff fuel ran out
  std::vector<TraceEntry> trace;
  uint64_t steps = 0;
};

// Iterate next_step to the fixpoint. Default fuel is 10 * node_count^2
// rewrite steps; exceeding it flags the result instead of looping.
NormalizeResult normalize(const ProofPtr& p, Mode mode,
                          std::optional<uint64_t> fuel = std::nullopt,
                          bool want_trace = false);

bool is_normal(const ProofPtr& p, Mode mode);

struct SubformulaViolation {
  Path where;
  const Formula* formula;
};

// Every formula in every sequent must be a sub-formula of an undischarged
// hypothesis, of the conclusion, or of a leaf-given sequent (lexical types
// and assumption leaves are given).
std::vector<SubformulaViolation> check_subformula_property(const ProofPtr& p);

// Canonical representative modulo permutations of adjacent independent
// commutative-product eliminations: chains are bubble-sorted by the
// canonical print of the product premise's conclusion.
ProofPtr canonical_otimes_chains(const ProofPtr& p);

}  // namespace pcmll
