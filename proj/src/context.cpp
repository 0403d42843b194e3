#include "pcmll/context.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>

#include "pcmll/names.hpp"

namespace pcmll {

SpPtr SpTerm::leaf(Occurrence o) {
  auto t = std::make_shared<SpTerm>();
  t->kind_ = Kind::Leaf;
  t->occ_ = o;
  t->leaves_ = 1;
  return t;
}

SpPtr SpTerm::hole() { return leaf(Occurrence{nullptr, kHoleId}); }

SpPtr SpTerm::seq(std::vector<SpPtr> children) {
  auto t = std::make_shared<SpTerm>();
  t->kind_ = Kind::Seq;
  t->children_ = std::move(children);
  t->leaves_ = 0;
  for (const auto& c : t->children_) t->leaves_ += c->leaf_count();
  return t;
}

SpPtr SpTerm::par(std::vector<SpPtr> children) {
  auto t = std::make_shared<SpTerm>();
  t->kind_ = Kind::Par;
  t->children_ = std::move(children);
  t->leaves_ = 0;
  for (const auto& c : t->children_) t->leaves_ += c->leaf_count();
  return t;
}

int sp_compare(const SpPtr& a, const SpPtr& b) {
  if (a.get() == b.get()) return 0;
  auto rank = [](const SpPtr& t) {
    switch (t->kind()) {
      case SpTerm::Kind::Leaf: return 0;
      case SpTerm::Kind::Seq: return 1;
      case SpTerm::Kind::Par: return 2;
    }
    return 0;
  };
  if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
  if (a->kind() == SpTerm::Kind::Leaf) {
    const std::string& pa = a->occ().formula ? a->occ().formula->print() : std::string();
    const std::string& pb = b->occ().formula ? b->occ().formula->print() : std::string();
    if (pa != pb) return pa < pb ? -1 : 1;
    if (a->occ().id != b->occ().id) return a->occ().id < b->occ().id ? -1 : 1;
    return 0;
  }
  size_t n = std::min(a->children().size(), b->children().size());
  for (size_t i = 0; i < n; i++) {
    int c = sp_compare(a->children()[i], b->children()[i]);
    if (c != 0) return c;
  }
  if (a->children().size() != b->children().size())
    return a->children().size() < b->children().size() ? -1 : 1;
  return 0;
}

bool sp_equal(const SpPtr& a, const SpPtr& b) {
  if (!a || !b) return !a && !b;
  return sp_compare(a, b) == 0;
}

SpPtr canonicalize(const SpPtr& t) {
  if (!t) return nullptr;
  if (t->kind() == SpTerm::Kind::Leaf) return t;
  std::vector<SpPtr> flat;
  for (const auto& c : t->children()) {
    SpPtr cc = canonicalize(c);
    if (!cc) continue;
    if (cc->kind() == t->kind()) {
      for (const auto& g : cc->children()) flat.push_back(g);
    } else {
      flat.push_back(cc);
    }
  }
  if (flat.empty()) return nullptr;
  if (flat.size() == 1) return flat[0];
  if (t->kind() == SpTerm::Kind::Par) {
    std::stable_sort(flat.begin(), flat.end(),
                     [](const SpPtr& x, const SpPtr& y) { return sp_compare(x, y) < 0; });
    return SpTerm::par(std::move(flat));
  }
  return SpTerm::seq(std::move(flat));
}

SpPtr seq_compose(const SpPtr& a, const SpPtr& b) {
  if (!a) return b;
  if (!b) return a;
  return canonicalize(SpTerm::seq({a, b}));
}

SpPtr par_compose(const SpPtr& a, const SpPtr& b) {
  if (!a) return b;
  if (!b) return a;
  return canonicalize(SpTerm::par({a, b}));
}

static void collect(const SpPtr& t, std::vector<Occurrence>& out) {
  if (!t) return;
  if (t->kind() == SpTerm::Kind::Leaf) {
    out.push_back(t->occ());
    return;
  }
  for (const auto& c : t->children()) collect(c, out);
}

std::vector<Occurrence> occurrences(const SpPtr& t) {
  std::vector<Occurrence> out;
  collect(t, out);
  return out;
}

std::optional<Occurrence> find_occurrence(const SpPtr& t, OccId id) {
  for (const auto& o : occurrences(t))
    if (o.id == id) return o;
  return std::nullopt;
}

bool contains_id(const SpPtr& t, OccId id) { return find_occurrence(t, id).has_value(); }

static void pairs_rec(const SpPtr& t, std::set<std::pair<OccId, OccId>>& out) {
  if (!t || t->kind() == SpTerm::Kind::Leaf) return;
  for (const auto& c : t->children()) pairs_rec(c, out);
  if (t->kind() == SpTerm::Kind::Seq) {
    std::vector<std::vector<Occurrence>> per_child;
    for (const auto& c : t->children()) per_child.push_back(occurrences(c));
    for (size_t i = 0; i < per_child.size(); i++)
      for (size_t j = i + 1; j < per_child.size(); j++)
        for (const auto& x : per_child[i])
          for (const auto& y : per_child[j]) out.emplace(x.id, y.id);
  }
}

std::set<std::pair<OccId, OccId>> order_pairs(const SpPtr& t) {
  std::set<std::pair<OccId, OccId>> out;
  pairs_rec(t, out);
  return out;
}

bool entropy_leq(const SpPtr& weaker, const SpPtr& stronger) {
  std::map<OccId, const Formula*> dw, ds;
  for (const auto& o : occurrences(weaker)) {
    if (!dw.emplace(o.id, o.formula).second) return false;  // duplicate id
  }
  for (const auto& o : occurrences(stronger)) {
    if (!ds.emplace(o.id, o.formula).second) return false;
  }
  if (dw != ds) return false;
  auto pw = order_pairs(weaker);
  auto ps = order_pairs(stronger);
  return std::includes(ps.begin(), ps.end(), pw.begin(), pw.end());
}

static size_t count_id(const SpPtr& t, OccId id) {
  size_t n = 0;
  for (const auto& o : occurrences(t))
    if (o.id == id) n++;
  return n;
}

SpPtr substitute_occurrence(const SpPtr& t, OccId id, const SpPtr& replacement) {
  if (!t) return nullptr;
  std::function<SpPtr(const SpPtr&)> rec = [&](const SpPtr& node) -> SpPtr {
    if (node->kind() == SpTerm::Kind::Leaf)
      return node->occ().id == id ? replacement : node;
    std::vector<SpPtr> kids;
    for (const auto& c : node->children()) {
      SpPtr r = rec(c);
      if (r) kids.push_back(r);
    }
    if (kids.empty()) return nullptr;
    return node->kind() == SpTerm::Kind::Seq ? SpTerm::seq(std::move(kids))
                                             : SpTerm::par(std::move(kids));
  };
  return canonicalize(rec(t));
}

SpPtr remove_occurrence(const SpPtr& t, OccId id) {
  return substitute_occurrence(t, id, nullptr);
}

SpPtr substitute(const HoleContext& holectx, const SpPtr& delta) {
  assert(holectx.term);
  assert(count_id(holectx.term, kHoleId) == 1);
  if (delta) {
    for (const auto& o : occurrences(delta))
      if (contains_id(holectx.term, o.id))
        throw std::invalid_argument("substitute: occurrence id collision");
  }
  return substitute_occurrence(holectx.term, kHoleId, delta);
}

// Equivalence of {a, b}: every other element is ordered against a and b in
// exactly the same way.
static bool equivalent_pair(const std::set<std::pair<OccId, OccId>>& pairs,
                            const std::vector<Occurrence>& occs, OccId a, OccId b) {
  auto before = [&](OccId x, OccId y) { return pairs.count({x, y}) > 0; };
  for (const auto& o : occs) {
    if (o.id == a || o.id == b) continue;
    if (before(o.id, a) != before(o.id, b)) return false;
    if (before(a, o.id) != before(b, o.id)) return false;
  }
  return true;
}

std::optional<HoleContext> find_equiv_pair(const SpPtr& ctx, OccId a, OccId b, PairMode mode) {
  if (!ctx || a == b) return std::nullopt;
  if (!contains_id(ctx, a) || !contains_id(ctx, b)) return std::nullopt;
  auto pairs = order_pairs(ctx);
  auto occs = occurrences(ctx);
  if (mode == PairMode::SeqPair) {
    if (!pairs.count({a, b})) return std::nullopt;
  } else {
    if (pairs.count({a, b}) || pairs.count({b, a})) return std::nullopt;
  }
  if (!equivalent_pair(pairs, occs, a, b)) return std::nullopt;

  // Under the conditions above the two occurrences sit side by side in the
  // canonical term: adjacent leaf children of one Seq node, or leaf children
  // of one Par node. Carve them out as a single hole.
  bool carved = false;
  std::function<SpPtr(const SpPtr&)> rec = [&](const SpPtr& node) -> SpPtr {
    if (node->kind() == SpTerm::Kind::Leaf) return node;
    const auto& kids = node->children();
    auto is_leaf_id = [](const SpPtr& k, OccId id) {
      return k->kind() == SpTerm::Kind::Leaf && k->occ().id == id;
    };
    if (!carved && node->kind() == SpTerm::Kind::Seq && mode == PairMode::SeqPair) {
      for (size_t i = 0; i + 1 < kids.size(); i++) {
        if (is_leaf_id(kids[i], a) && is_leaf_id(kids[i + 1], b)) {
          carved = true;
          std::vector<SpPtr> out(kids.begin(), kids.begin() + i);
          out.push_back(SpTerm::hole());
          out.insert(out.end(), kids.begin() + i + 2, kids.end());
          return out.size() == 1 ? out[0] : SpTerm::seq(std::move(out));
        }
      }
    }
    if (!carved && node->kind() == SpTerm::Kind::Par && mode == PairMode::ParPair) {
      size_t ia = kids.size(), ib = kids.size();
      for (size_t i = 0; i < kids.size(); i++) {
        if (is_leaf_id(kids[i], a)) ia = i;
        if (is_leaf_id(kids[i], b)) ib = i;
      }
      if (ia < kids.size() && ib < kids.size()) {
        carved = true;
        std::vector<SpPtr> out;
        for (size_t i = 0; i < kids.size(); i++)
          if (i != ia && i != ib) out.push_back(kids[i]);
        out.push_back(SpTerm::hole());
        return out.size() == 1 ? out[0] : SpTerm::par(std::move(out));
      }
    }
    std::vector<SpPtr> out;
    for (const auto& c : kids) out.push_back(rec(c));
    return node->kind() == SpTerm::Kind::Seq ? SpTerm::seq(std::move(out))
                                             : SpTerm::par(std::move(out));
  };

  SpPtr carved_term;
  if (ctx->kind() == SpTerm::Kind::Seq || ctx->kind() == SpTerm::Kind::Par) {
    carved_term = rec(ctx);
  }
  if (!carved)
    throw std::logic_error("find_equiv_pair: ordered pair without adjacent carving");
  return HoleContext{canonicalize(carved_term)};
}

std::string print_context(const SpPtr& t, const NameTable& names) {
  if (!t) return "";
  switch (t->kind()) {
    case SpTerm::Kind::Leaf:
      if (t->is_hole()) return "[]";
      return names.name(t->occ().id) + ":" + t->occ().formula->print();
    case SpTerm::Kind::Seq: {
      std::string s = "<";
      for (size_t i = 0; i < t->children().size(); i++) {
        if (i) s += "; ";
        s += print_context(t->children()[i], names);
      }
      return s + ">";
    }
    case SpTerm::Kind::Par: {
      std::string s = "(";
      for (size_t i = 0; i < t->children().size(); i++) {
        if (i) s += ", ";
        s += print_context(t->children()[i], names);
      }
      return s + ")";
    }
  }
  return {};
}

bool is_totally_ordered(const SpPtr& t) {
  if (!t) return true;
  if (t->kind() == SpTerm::Kind::Par) return false;
  for (const auto& c : t->children())
    if (!is_totally_ordered(c)) return false;
  return true;
}

}  // namespace pcmll
