#include "pcmll/proof.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace pcmll {

const char* rule_name(RuleKind k) {
  switch (k) {
    case RuleKind::Axiom: return "axiom";
    case RuleKind::Assume: return "assume";
    case RuleKind::ProperAxiom: return "lex";
    case RuleKind::LtoE: return "lto_e";
    case RuleKind::LtoI: return "lto_i";
    case RuleKind::LfromE: return "lfrom_e";
    case RuleKind::LfromI: return "lfrom_i";
    case RuleKind::LltoE: return "llto_e";
    case RuleKind::LltoI: return "llto_i";
    case RuleKind::OdotI: return "odot_i";
    case RuleKind::OdotE: return "odot_e";
    case RuleKind::OtimesI: return "otimes_i";
    case RuleKind::OtimesE: return "otimes_e";
    case RuleKind::Entropy: return "entropy";
  }
  return "?";
}

std::optional<RuleKind> rule_from_name(const std::string& name) {
  static const std::map<std::string, RuleKind> table = {
      {"axiom", RuleKind::Axiom},     {"assume", RuleKind::Assume},
      {"lex", RuleKind::ProperAxiom}, {"lto_e", RuleKind::LtoE},
      {"lto_i", RuleKind::LtoI},      {"lfrom_e", RuleKind::LfromE},
      {"lfrom_i", RuleKind::LfromI},  {"llto_e", RuleKind::LltoE},
      {"llto_i", RuleKind::LltoI},    {"odot_i", RuleKind::OdotI},
      {"odot_e", RuleKind::OdotE},    {"otimes_i", RuleKind::OtimesI},
      {"otimes_e", RuleKind::OtimesE},{"entropy", RuleKind::Entropy},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

bool sequent_equal(const Sequent& a, const Sequent& b) {
  return a.rhs == b.rhs && sp_equal(a.lhs, b.lhs);
}

namespace {

struct Builder;

ProofPtr make_node(RuleKind rule, Sequent concl, std::vector<ProofPtr> prems,
                   OccId discharged = kHoleId, OccId pa = kHoleId, OccId pb = kHoleId,
                   std::string word = {});

}  // namespace

struct ProofBuilder {
  static ProofPtr node(RuleKind rule, Sequent concl, std::vector<ProofPtr> prems,
                       OccId discharged, OccId pa, OccId pb, std::string word) {
    auto p = std::make_shared<Proof>();
    p->rule_ = rule;
    p->conclusion_ = std::move(concl);
    p->premises_ = std::move(prems);
    p->discharged_ = discharged;
    p->pair_a_ = pa;
    p->pair_b_ = pb;
    p->word_ = std::move(word);
    p->nodes_ = 1;
    for (const auto& q : p->premises_) p->nodes_ += q->node_count();
    return p;
  }
};

namespace {

ProofPtr make_node(RuleKind rule, Sequent concl, std::vector<ProofPtr> prems,
                   OccId discharged, OccId pa, OccId pb, std::string word) {
  return ProofBuilder::node(rule, std::move(concl), std::move(prems), discharged, pa, pb,
                            std::move(word));
}

[[noreturn]] void fail(const std::string& m) { throw RuleError(m); }

}  // namespace

ProofPtr mk_axiom(Occurrence o) {
  if (!o.formula || o.id == kHoleId) fail("axiom: needs a formula occurrence with nonzero id");
  return make_node(RuleKind::Axiom, Sequent{SpTerm::leaf(o), o.formula}, {});
}

ProofPtr mk_assume(Sequent s) {
  if (!s.rhs) fail("assume: missing conclusion formula");
  SpPtr canon = canonicalize(s.lhs);
  if (!sp_equal(canon, s.lhs)) s.lhs = canon;
  for (const auto& o : occurrences(s.lhs))
    if (o.id == kHoleId || !o.formula) fail("assume: bad occurrence");
  return make_node(RuleKind::Assume, std::move(s), {});
}

ProofPtr mk_proper_axiom(std::string word, const Formula* type) {
  if (!type) fail("lex: missing type");
  return make_node(RuleKind::ProperAxiom, Sequent{nullptr, type}, {}, kHoleId, kHoleId,
                   kHoleId, std::move(word));
}

ProofPtr mk_lto_e(ProofPtr arg, ProofPtr fun) {
  const Formula* f = fun->conclusion().rhs;
  if (f->conn() != Conn::LDiv) fail("lto_e: function premise is not A \\ C");
  if (f->arg() != arg->conclusion().rhs) fail("lto_e: argument type mismatch");
  Sequent concl{seq_compose(arg->conclusion().lhs, fun->conclusion().lhs), f->result()};
  return make_node(RuleKind::LtoE, std::move(concl), {std::move(arg), std::move(fun)});
}

ProofPtr mk_lfrom_e(ProofPtr fun, ProofPtr arg) {
  const Formula* f = fun->conclusion().rhs;
  if (f->conn() != Conn::RDiv) fail("lfrom_e: function premise is not C / A");
  if (f->arg() != arg->conclusion().rhs) fail("lfrom_e: argument type mismatch");
  Sequent concl{seq_compose(fun->conclusion().lhs, arg->conclusion().lhs), f->result()};
  return make_node(RuleKind::LfromE, std::move(concl), {std::move(fun), std::move(arg)});
}

ProofPtr mk_llto_e(ProofPtr arg, ProofPtr fun) {
  const Formula* f = fun->conclusion().rhs;
  if (f->conn() != Conn::LinImp) fail("llto_e: function premise is not A -o C");
  if (f->arg() != arg->conclusion().rhs) fail("llto_e: argument type mismatch");
  Sequent concl{par_compose(arg->conclusion().lhs, fun->conclusion().lhs), f->result()};
  return make_node(RuleKind::LltoE, std::move(concl), {std::move(arg), std::move(fun)});
}

namespace {

// The discharged occurrence must sit at the required position of the
// premise context: first in the top series for \, last for /, a direct
// parallel component for -o (a sole leaf qualifies everywhere).
enum class DischargePos { First, Last, Parallel };

Occurrence check_discharge(const SpPtr& lhs, OccId id, DischargePos pos, const char* rule) {
  if (!lhs) fail(std::string(rule) + ": empty premise context");
  if (lhs->kind() == SpTerm::Kind::Leaf) {
    if (lhs->occ().id != id) fail(std::string(rule) + ": discharged occurrence not found");
    return lhs->occ();
  }
  if (pos == DischargePos::Parallel) {
    if (lhs->kind() != SpTerm::Kind::Par)
      fail(std::string(rule) + ": discharged occurrence must be a parallel component");
    for (const auto& c : lhs->children())
      if (c->kind() == SpTerm::Kind::Leaf && c->occ().id == id) return c->occ();
    fail(std::string(rule) + ": discharged occurrence must be a parallel component");
  }
  if (lhs->kind() != SpTerm::Kind::Seq)
    fail(std::string(rule) + ": discharged occurrence must be series-extremal");
  const SpPtr& end = pos == DischargePos::First ? lhs->children().front() : lhs->children().back();
  if (end->kind() != SpTerm::Kind::Leaf || end->occ().id != id)
    fail(std::string(rule) + ": discharged occurrence must be series-extremal");
  return end->occ();
}

}  // namespace

ProofPtr mk_lto_i(ProofPtr premise, OccId discharged) {
  Occurrence o =
      check_discharge(premise->conclusion().lhs, discharged, DischargePos::First, "lto_i");
  Sequent concl{remove_occurrence(premise->conclusion().lhs, discharged),
                ldiv(o.formula, premise->conclusion().rhs)};
  return make_node(RuleKind::LtoI, std::move(concl), {std::move(premise)}, discharged);
}

ProofPtr mk_lfrom_i(ProofPtr premise, OccId discharged) {
  Occurrence o =
      check_discharge(premise->conclusion().lhs, discharged, DischargePos::Last, "lfrom_i");
  Sequent concl{remove_occurrence(premise->conclusion().lhs, discharged),
                rdiv(premise->conclusion().rhs, o.formula)};
  return make_node(RuleKind::LfromI, std::move(concl), {std::move(premise)}, discharged);
}

ProofPtr mk_llto_i(ProofPtr premise, OccId discharged) {
  Occurrence o =
      check_discharge(premise->conclusion().lhs, discharged, DischargePos::Parallel, "llto_i");
  Sequent concl{remove_occurrence(premise->conclusion().lhs, discharged),
                lin_imp(o.formula, premise->conclusion().rhs)};
  return make_node(RuleKind::LltoI, std::move(concl), {std::move(premise)}, discharged);
}

ProofPtr mk_odot_i(ProofPtr left, ProofPtr right) {
  Sequent concl{seq_compose(left->conclusion().lhs, right->conclusion().lhs),
                nc_prod(left->conclusion().rhs, right->conclusion().rhs)};
  return make_node(RuleKind::OdotI, std::move(concl), {std::move(left), std::move(right)});
}

ProofPtr mk_otimes_i(ProofPtr left, ProofPtr right) {
  Sequent concl{par_compose(left->conclusion().lhs, right->conclusion().lhs),
                c_prod(left->conclusion().rhs, right->conclusion().rhs)};
  return make_node(RuleKind::OtimesI, std::move(concl), {std::move(left), std::move(right)});
}

namespace {

ProofPtr mk_product_elim(RuleKind kind, ProofPtr product, ProofPtr host, OccId a, OccId b) {
  const char* rn = rule_name(kind);
  const Formula* pf = product->conclusion().rhs;
  Conn want = kind == RuleKind::OdotE ? Conn::NcProd : Conn::CProd;
  if (pf->conn() != want) fail(std::string(rn) + ": product premise has wrong connective");
  auto oa = find_occurrence(host->conclusion().lhs, a);
  auto ob = find_occurrence(host->conclusion().lhs, b);
  if (!oa || !ob) fail(std::string(rn) + ": designated occurrences not in context");
  if (oa->formula != pf->left() || ob->formula != pf->right())
    fail(std::string(rn) + ": designated occurrences do not match the product components");
  PairMode mode = kind == RuleKind::OdotE ? PairMode::SeqPair : PairMode::ParPair;
  auto hole = find_equiv_pair(host->conclusion().lhs, a, b, mode);
  if (!hole) fail(std::string(rn) + ": occurrences are not an equivalent adjacent pair");
  SpPtr lhs;
  try {
    lhs = substitute(*hole, product->conclusion().lhs);
  } catch (const std::invalid_argument& e) {
    fail(std::string(rn) + ": " + e.what());
  }
  Sequent concl{std::move(lhs), host->conclusion().rhs};
  return make_node(kind, std::move(concl), {std::move(product), std::move(host)}, kHoleId, a, b);
}

}  // namespace

ProofPtr mk_odot_e(ProofPtr product, ProofPtr host, OccId a, OccId b) {
  return mk_product_elim(RuleKind::OdotE, std::move(product), std::move(host), a, b);
}

ProofPtr mk_otimes_e(ProofPtr product, ProofPtr host, OccId a, OccId b) {
  return mk_product_elim(RuleKind::OtimesE, std::move(product), std::move(host), a, b);
}

ProofPtr mk_entropy(ProofPtr premise, SpPtr weaker_lhs) {
  weaker_lhs = canonicalize(weaker_lhs);
  if (!entropy_leq(weaker_lhs, premise->conclusion().lhs))
    fail("entropy: target is not a suborder of the premise context");
  Sequent concl{std::move(weaker_lhs), premise->conclusion().rhs};
  return make_node(RuleKind::Entropy, std::move(concl), {std::move(premise)});
}

ProofPtr make_raw_node(RuleKind rule, Sequent conclusion, std::vector<ProofPtr> premises,
                       OccId discharged, OccId pair_a, OccId pair_b, std::string word) {
  return make_node(rule, std::move(conclusion), std::move(premises), discharged, pair_a,
                   pair_b, std::move(word));
}

ProofPtr rebuild(const Proof& like, std::vector<ProofPtr> ps) {
  switch (like.rule()) {
    case RuleKind::Axiom:
    case RuleKind::Assume:
    case RuleKind::ProperAxiom:
      fail("rebuild: leaves have no premises");
    case RuleKind::LtoE: return mk_lto_e(ps.at(0), ps.at(1));
    case RuleKind::LfromE: return mk_lfrom_e(ps.at(0), ps.at(1));
    case RuleKind::LltoE: return mk_llto_e(ps.at(0), ps.at(1));
    case RuleKind::LtoI: return mk_lto_i(ps.at(0), like.discharged());
    case RuleKind::LfromI: return mk_lfrom_i(ps.at(0), like.discharged());
    case RuleKind::LltoI: return mk_llto_i(ps.at(0), like.discharged());
    case RuleKind::OdotI: return mk_odot_i(ps.at(0), ps.at(1));
    case RuleKind::OtimesI: return mk_otimes_i(ps.at(0), ps.at(1));
    case RuleKind::OdotE: return mk_odot_e(ps.at(0), ps.at(1), like.pair_a(), like.pair_b());
    case RuleKind::OtimesE: return mk_otimes_e(ps.at(0), ps.at(1), like.pair_a(), like.pair_b());
    case RuleKind::Entropy: return mk_entropy(ps.at(0), like.conclusion().lhs);
  }
  fail("rebuild: unknown rule");
}

bool is_elimination(RuleKind k) {
  switch (k) {
    case RuleKind::LtoE:
    case RuleKind::LfromE:
    case RuleKind::LltoE:
    case RuleKind::OdotE:
    case RuleKind::OtimesE:
      return true;
    default:
      return false;
  }
}

bool is_introduction(RuleKind k) {
  switch (k) {
    case RuleKind::LtoI:
    case RuleKind::LfromI:
    case RuleKind::LltoI:
    case RuleKind::OdotI:
    case RuleKind::OtimesI:
      return true;
    default:
      return false;
  }
}

bool is_implicative_elim(RuleKind k) {
  return k == RuleKind::LtoE || k == RuleKind::LfromE || k == RuleKind::LltoE;
}

bool is_product_elim(RuleKind k) { return k == RuleKind::OdotE || k == RuleKind::OtimesE; }

bool is_implication_intro(RuleKind k) {
  return k == RuleKind::LtoI || k == RuleKind::LfromI || k == RuleKind::LltoI;
}

size_t rule_arity(RuleKind k) {
  switch (k) {
    case RuleKind::Axiom:
    case RuleKind::Assume:
    case RuleKind::ProperAxiom:
      return 0;
    case RuleKind::LtoI:
    case RuleKind::LfromI:
    case RuleKind::LltoI:
    case RuleKind::Entropy:
      return 1;
    default:
      return 2;
  }
}

int eliminated_premise_index(RuleKind k) {
  switch (k) {
    case RuleKind::LtoE: return 1;
    case RuleKind::LfromE: return 0;
    case RuleKind::LltoE: return 1;
    case RuleKind::OdotE: return 0;
    case RuleKind::OtimesE: return 0;
    default: return -1;
  }
}

int branch_premise_index(RuleKind k) {
  switch (k) {
    case RuleKind::LtoE: return 1;   // function premise
    case RuleKind::LfromE: return 0;
    case RuleKind::LltoE: return 1;
    case RuleKind::OdotE: return 1;  // premise the pair is carved from
    case RuleKind::OtimesE: return 1;
    case RuleKind::LtoI:
    case RuleKind::LfromI:
    case RuleKind::LltoI:
    case RuleKind::Entropy:
      return 0;
    default:
      return -1;
  }
}

const Proof* node_at(const ProofPtr& p, const Path& path) {
  const Proof* cur = p.get();
  for (int i : path) cur = cur->premises().at(i).get();
  return cur;
}

ProofPtr subtree_at(const ProofPtr& p, const Path& path) {
  ProofPtr cur = p;
  for (int i : path) cur = cur->premises().at(i);
  return cur;
}

ProofPtr replace_at(const ProofPtr& p, const Path& path, ProofPtr sub) {
  if (path.empty()) return sub;
  std::vector<ProofPtr> prems = p->premises();
  Path rest(path.begin() + 1, path.end());
  prems.at(path[0]) = replace_at(prems.at(path[0]), rest, std::move(sub));
  return rebuild(*p, std::move(prems));
}

namespace {

bool gather_leaf_ids(const ProofPtr& p, std::set<OccId>& seen) {
  if (p->rule() == RuleKind::Axiom) {
    return seen.insert(p->conclusion().lhs->occ().id).second;
  }
  if (p->rule() == RuleKind::Assume) {
    for (const auto& o : occurrences(p->conclusion().lhs))
      if (!seen.insert(o.id).second) return false;
    return true;
  }
  for (const auto& q : p->premises())
    if (!gather_leaf_ids(q, seen)) return false;
  return true;
}

bool check_node(const ProofPtr& p, const CheckOptions& opts, Path& where,
                std::optional<RuleViolation>& out) {
  for (size_t i = 0; i < p->premises().size(); i++) {
    where.push_back(int(i));
    if (!check_node(p->premises()[i], opts, where, out)) return false;
    where.pop_back();
  }
  auto report = [&](const std::string& msg) {
    out = RuleViolation{where, p->rule(), msg};
    return false;
  };
  if (p->premises().size() != rule_arity(p->rule())) return report("wrong premise count");
  try {
    switch (p->rule()) {
      case RuleKind::Axiom: {
        const SpPtr& lhs = p->conclusion().lhs;
        if (!lhs || lhs->kind() != SpTerm::Kind::Leaf || lhs->is_hole())
          return report("axiom context must be a single occurrence");
        if (lhs->occ().formula != p->conclusion().rhs)
          return report("axiom formula mismatch");
        return true;
      }
      case RuleKind::Assume: {
        if (!sp_equal(canonicalize(p->conclusion().lhs), p->conclusion().lhs))
          return report("assume context not canonical");
        return true;
      }
      case RuleKind::ProperAxiom: {
        if (p->conclusion().lhs) return report("proper axiom must have empty context");
        if (!opts.lexical) return report("proper axiom outside grammar mode");
        if (!opts.lexical(p->word(), p->conclusion().rhs))
          return report("word/type pair not in lexicon: " + p->word());
        return true;
      }
      default: {
        ProofPtr expect;
        switch (p->rule()) {
          case RuleKind::LtoE: expect = mk_lto_e(p->premises()[0], p->premises()[1]); break;
          case RuleKind::LfromE: expect = mk_lfrom_e(p->premises()[0], p->premises()[1]); break;
          case RuleKind::LltoE: expect = mk_llto_e(p->premises()[0], p->premises()[1]); break;
          case RuleKind::LtoI: expect = mk_lto_i(p->premises()[0], p->discharged()); break;
          case RuleKind::LfromI: expect = mk_lfrom_i(p->premises()[0], p->discharged()); break;
          case RuleKind::LltoI: expect = mk_llto_i(p->premises()[0], p->discharged()); break;
          case RuleKind::OdotI: expect = mk_odot_i(p->premises()[0], p->premises()[1]); break;
          case RuleKind::OtimesI: expect = mk_otimes_i(p->premises()[0], p->premises()[1]); break;
          case RuleKind::OdotE:
            expect = mk_odot_e(p->premises()[0], p->premises()[1], p->pair_a(), p->pair_b());
            break;
          case RuleKind::OtimesE:
            expect = mk_otimes_e(p->premises()[0], p->premises()[1], p->pair_a(), p->pair_b());
            break;
          case RuleKind::Entropy:
            expect = mk_entropy(p->premises()[0], p->conclusion().lhs);
            break;
          default:
            return report("unknown rule");
        }
        if (!sequent_equal(expect->conclusion(), p->conclusion()))
          return report("stated conclusion does not match the rule schema");
        return true;
      }
    }
  } catch (const RuleError& e) {
    return report(e.what());
  }
}

}  // namespace

CheckResult check(const ProofPtr& p, const CheckOptions& opts) {
  CheckResult r;
  std::set<OccId> seen;
  if (!gather_leaf_ids(p, seen)) {
    r.ok = false;
    r.violation = RuleViolation{{}, p->rule(), "occurrence id introduced twice"};
    return r;
  }
  Path where;
  std::optional<RuleViolation> v;
  if (!check_node(p, opts, where, v)) {
    r.ok = false;
    r.violation = std::move(v);
  }
  return r;
}

std::vector<Path> principal_branch(const ProofPtr& p, const Path& from) {
  std::vector<Path> out;
  Path cur = from;
  out.push_back(cur);
  const Proof* node = node_at(p, cur);
  // First step out of an elimination targets the eliminated formula.
  int next = is_elimination(node->rule()) ? eliminated_premise_index(node->rule())
                                          : branch_premise_index(node->rule());
  while (next >= 0) {
    cur.push_back(next);
    out.push_back(cur);
    node = node_at(p, cur);
    next = branch_premise_index(node->rule());
  }
  return out;
}

namespace {

bool intro_matches(const Proof& node, const Formula* eliminated) {
  if (node.conclusion().rhs != eliminated) return false;
  switch (eliminated->conn()) {
    case Conn::LDiv: return node.rule() == RuleKind::LtoI;
    case Conn::RDiv: return node.rule() == RuleKind::LfromI;
    case Conn::LinImp: return node.rule() == RuleKind::LltoI;
    case Conn::NcProd: return node.rule() == RuleKind::OdotI;
    case Conn::CProd: return node.rule() == RuleKind::OtimesI;
    default: return false;
  }
}

}  // namespace

std::optional<Path> conjoined(const ProofPtr& p, const Path& elim) {
  const Proof* e = node_at(p, elim);
  if (!is_elimination(e->rule())) return std::nullopt;
  const Formula* eliminated =
      e->premises()[eliminated_premise_index(e->rule())]->conclusion().rhs;
  auto branch = principal_branch(p, elim);
  for (size_t i = 1; i < branch.size(); i++) {
    if (intro_matches(*node_at(p, branch[i]), eliminated)) return branch[i];
  }
  return std::nullopt;
}

namespace {

bool find_leaf(const ProofPtr& p, OccId id, Path& path) {
  if (p->rule() == RuleKind::Axiom) {
    return p->conclusion().lhs->occ().id == id;
  }
  if (p->rule() == RuleKind::Assume) return contains_id(p->conclusion().lhs, id);
  for (size_t i = 0; i < p->premises().size(); i++) {
    path.push_back(int(i));
    if (find_leaf(p->premises()[i], id, path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Path> introducing_leaf(const ProofPtr& p, OccId id) {
  Path path;
  if (find_leaf(p, id, path)) return path;
  return std::nullopt;
}

bool proof_equal(const ProofPtr& a, const ProofPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->rule() != b->rule()) return false;
  if (!sequent_equal(a->conclusion(), b->conclusion())) return false;
  if (a->discharged() != b->discharged() || a->pair_a() != b->pair_a() ||
      a->pair_b() != b->pair_b() || a->word() != b->word())
    return false;
  if (a->premises().size() != b->premises().size()) return false;
  for (size_t i = 0; i < a->premises().size(); i++)
    if (!proof_equal(a->premises()[i], b->premises()[i])) return false;
  return true;
}

namespace {

size_t sp_hash(const SpPtr& t) {
  if (!t) return 0x9e3779b9;
  if (t->kind() == SpTerm::Kind::Leaf)
    return std::hash<const void*>()(t->occ().formula) * 31 + t->occ().id;
  size_t h = t->kind() == SpTerm::Kind::Seq ? 0x5151 : 0x7a7a;
  for (const auto& c : t->children()) h = h * 1000003 + sp_hash(c);
  return h;
}

}  // namespace

size_t proof_hash(const ProofPtr& p) {
  size_t h = static_cast<size_t>(p->rule()) + 17;
  h = h * 1000003 + sp_hash(p->conclusion().lhs);
  h = h * 1000003 + std::hash<const void*>()(p->conclusion().rhs);
  h = h * 1000003 + p->discharged();
  h = h * 1000003 + p->pair_a();
  h = h * 1000003 + p->pair_b();
  h = h * 1000003 + std::hash<std::string>()(p->word());
  for (const auto& q : p->premises()) h = h * 1000003 + proof_hash(q);
  return h;
}

std::vector<OccId> leaf_ids(const ProofPtr& p) {
  std::vector<OccId> out;
  std::function<void(const ProofPtr&)> rec = [&](const ProofPtr& q) {
    if (q->rule() == RuleKind::Axiom) {
      out.push_back(q->conclusion().lhs->occ().id);
    } else if (q->rule() == RuleKind::Assume) {
      for (const auto& o : occurrences(q->conclusion().lhs)) out.push_back(o.id);
    }
    for (const auto& r : q->premises()) rec(r);
  };
  rec(p);
  return out;
}

OccId max_id(const ProofPtr& p) {
  OccId m = 0;
  for (OccId id : leaf_ids(p)) m = std::max(m, id);
  return m;
}

namespace {

bool lambek_formula(const Formula* f) {
  if (f->is_atom()) return true;
  if (f->conn() == Conn::CProd || f->conn() == Conn::LinImp) return false;
  return lambek_formula(f->left()) && lambek_formula(f->right());
}

}  // namespace

bool in_lambek_fragment(const ProofPtr& p) {
  switch (p->rule()) {
    case RuleKind::LltoE:
    case RuleKind::LltoI:
    case RuleKind::OtimesE:
    case RuleKind::OtimesI:
    case RuleKind::Entropy:
      return false;
    default:
      break;
  }
  if (!is_totally_ordered(p->conclusion().lhs)) return false;
  if (!lambek_formula(p->conclusion().rhs)) return false;
  for (const auto& o : occurrences(p->conclusion().lhs))
    if (!lambek_formula(o.formula)) return false;
  for (const auto& q : p->premises())
    if (!in_lambek_fragment(q)) return false;
  return true;
}

}  // namespace pcmll
