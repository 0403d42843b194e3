#include "pcmll/text.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <vector>

namespace pcmll {

namespace {

enum class Tok : uint8_t {
  Ident, LParen, RParen, LAngle, RAngle, LBracket, RBracket,
  Semi, Comma, Colon, Turnstile, Backslash, Slash, LinArrow, Star, End,
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void error(const std::string& msg) const {
    throw ParseError(msg, tok_.line, tok_.col);
  }

 private:
  void advance() {
    skip_ws();
    tok_ = {Tok::End, "", line_, col_};
    if (pos_ >= src_.size()) return;
    char c = src_[pos_];
    auto single = [&](Tok k) {
      tok_.kind = k;
      tok_.text = std::string(1, c);
      bump();
    };
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        bump();
      tok_.kind = Tok::Ident;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      return;
    }
    switch (c) {
      case '(': single(Tok::LParen); return;
      case ')': single(Tok::RParen); return;
      case '<': single(Tok::LAngle); return;
      case '>': single(Tok::RAngle); return;
      case '[': single(Tok::LBracket); return;
      case ']': single(Tok::RBracket); return;
      case ';': single(Tok::Semi); return;
      case ',': single(Tok::Comma); return;
      case ':': single(Tok::Colon); return;
      case '\\': single(Tok::Backslash); return;
      case '/': single(Tok::Slash); return;
      case '*': single(Tok::Star); return;
      case '|':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
          tok_.kind = Tok::Turnstile;
          tok_.text = "|-";
          bump();
          bump();
          return;
        }
        throw ParseError("stray '|'", line_, col_);
      case '-':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == 'o') {
          tok_.kind = Tok::LinArrow;
          tok_.text = "-o";
          bump();
          bump();
          return;
        }
        throw ParseError("stray '-'", line_, col_);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }
  }

  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      line_++;
      col_ = 1;
    } else {
      col_++;
    }
    pos_++;
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_{Tok::End, "", 1, 1};
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  const Formula* formula() {
    const Formula* f = imp_layer();
    return f;
  }

  const Formula* whole_formula() {
    const Formula* f = imp_layer();
    expect(Tok::End, "end of input");
    return f;
  }

  SpPtr context(NameTable& names, OccId& next_id) {
    return ctx_item(names, next_id);
  }

  Sequent sequent(NameTable& names, OccId& next_id) {
    SpPtr lhs;
    if (lex_.peek().kind != Tok::Turnstile) lhs = ctx_item(names, next_id);
    expect(Tok::Turnstile, "'|-'");
    const Formula* rhs = imp_layer();
    return Sequent{canonicalize(lhs), rhs};
  }

  ProofPtr proof(NameTable& names, OccId& next_id) {
    expect(Tok::LParen, "'('");
    Token rt = lex_.take();
    if (rt.kind != Tok::Ident) throw ParseError("expected rule name", rt.line, rt.col);
    auto rk = rule_from_name(rt.text);
    if (!rk) throw ParseError("unknown rule: " + rt.text, rt.line, rt.col);

    OccId discharged = kHoleId, pa = kHoleId, pb = kHoleId;
    std::string word;
    if (is_implication_intro(*rk)) {
      expect(Tok::LBracket, "'[' before discharged occurrence");
      discharged = occ_name(names, next_id);
      expect(Tok::RBracket, "']'");
    } else if (is_product_elim(*rk)) {
      expect(Tok::LBracket, "'[' before designated pair");
      pa = occ_name(names, next_id);
      pb = occ_name(names, next_id);
      expect(Tok::RBracket, "']'");
    } else if (*rk == RuleKind::ProperAxiom) {
      Token w = lex_.take();
      if (w.kind != Tok::Ident) throw ParseError("expected word", w.line, w.col);
      word = w.text;
    }

    Sequent concl = sequent(names, next_id);
    std::vector<ProofPtr> prems;
    while (lex_.peek().kind == Tok::LParen) prems.push_back(proof(names, next_id));
    Token close = lex_.take();
    if (close.kind != Tok::RParen)
      throw ParseError("expected ')' or premise", close.line, close.col);
    if (prems.size() != rule_arity(*rk))
      throw ParseError(std::string(rule_name(*rk)) + ": expected " +
                           std::to_string(rule_arity(*rk)) + " premise(s), got " +
                           std::to_string(prems.size()),
                       close.line, close.col);
    return make_raw_node(*rk, std::move(concl), std::move(prems), discharged, pa, pb,
                         std::move(word));
  }

  void expect_end() { expect(Tok::End, "end of input"); }

 private:
  void expect(Tok k, const std::string& what) {
    Token t = lex_.take();
    if (t.kind != k) throw ParseError("expected " + what, t.line, t.col);
  }

  OccId occ_name(NameTable& names, OccId& next_id) {
    Token t = lex_.take();
    if (t.kind != Tok::Ident) throw ParseError("expected occurrence name", t.line, t.col);
    if (auto id = names.id_of(t.text)) return *id;
    OccId id = next_id++;
    names.set(id, t.text);
    return id;
  }

  const Formula* unit() {
    Token t = lex_.take();
    if (t.kind == Tok::Ident) {
      try {
        return atom(t.text);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), t.line, t.col);
      }
    }
    if (t.kind == Tok::LParen) {
      const Formula* f = imp_layer();
      expect(Tok::RParen, "')'");
      return f;
    }
    throw ParseError("expected atom or '('", t.line, t.col);
  }

  const Formula* prod_layer() {
    const Formula* f = unit();
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::Star) {
        lex_.take();
        f = c_prod(f, unit());
      } else if (t.kind == Tok::Ident && t.text == "o") {
        lex_.take();
        f = nc_prod(f, unit());
      } else {
        return f;
      }
    }
  }

  const Formula* imp_layer() {
    std::vector<const Formula*> parts{prod_layer()};
    std::vector<Tok> ops;
    int opline = 0, opcol = 0;
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind != Tok::Backslash && t.kind != Tok::Slash && t.kind != Tok::LinArrow) break;
      opline = t.line;
      opcol = t.col;
      ops.push_back(lex_.take().kind);
      parts.push_back(prod_layer());
    }
    if (ops.empty()) return parts[0];
    bool all_bs = std::all_of(ops.begin(), ops.end(), [](Tok o) { return o == Tok::Backslash; });
    bool all_sl = std::all_of(ops.begin(), ops.end(), [](Tok o) { return o == Tok::Slash; });
    bool all_lin = std::all_of(ops.begin(), ops.end(), [](Tok o) { return o == Tok::LinArrow; });
    if (all_lin) {
      const Formula* f = parts.back();
      for (size_t i = parts.size() - 1; i-- > 0;) f = lin_imp(parts[i], f);
      return f;
    }
    if (all_sl) {
      const Formula* f = parts[0];
      for (size_t i = 0; i < ops.size(); i++) f = rdiv(f, parts[i + 1]);
      return f;
    }
    if (all_bs) {
      const Formula* f = parts.back();
      for (size_t i = parts.size() - 1; i-- > 0;) f = ldiv(parts[i], f);
      return f;
    }
    // Mixed chain: all backslashes must precede all slashes.
    size_t k = 0;
    while (k < ops.size() && ops[k] == Tok::Backslash) k++;
    for (size_t i = k; i < ops.size(); i++) {
      if (ops[i] != Tok::Slash)
        throw ParseError("ambiguous implication chain; add parentheses", opline, opcol);
    }
    const Formula* f = parts[k];
    for (size_t i = k; i-- > 0;) f = ldiv(parts[i], f);
    for (size_t i = k; i < ops.size(); i++) f = rdiv(f, parts[i + 1]);
    return f;
  }

  SpPtr ctx_item(NameTable& names, OccId& next_id) {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Ident) {
      OccId id = occ_name(names, next_id);
      expect(Tok::Colon, "':' after occurrence name");
      const Formula* f = imp_layer();
      return SpTerm::leaf(Occurrence{f, id});
    }
    if (t.kind == Tok::LAngle) {
      lex_.take();
      std::vector<SpPtr> kids{ctx_item(names, next_id)};
      while (lex_.peek().kind == Tok::Semi) {
        lex_.take();
        kids.push_back(ctx_item(names, next_id));
      }
      expect(Tok::RAngle, "'>'");
      return SpTerm::seq(std::move(kids));
    }
    if (t.kind == Tok::LParen) {
      lex_.take();
      std::vector<SpPtr> kids{ctx_item(names, next_id)};
      while (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        kids.push_back(ctx_item(names, next_id));
      }
      expect(Tok::RParen, "')'");
      return SpTerm::par(std::move(kids));
    }
    throw ParseError("expected context item", t.line, t.col);
  }

  Lexer lex_;
};

}  // namespace

const Formula* parse_formula(std::string_view text) {
  Parser p(text);
  return p.whole_formula();
}

SpPtr parse_context(std::string_view text, NameTable& names, OccId& next_id) {
  Parser p(text);
  SpPtr t = canonicalize(p.context(names, next_id));
  p.expect_end();
  return t;
}

ParsedProof parse_proof(std::string_view text) {
  Parser p(text);
  ParsedProof out;
  OccId next_id = 1;
  out.proof = p.proof(out.names, next_id);
  p.expect_end();
  return out;
}

std::string print_sequent(const Sequent& s, const NameTable& names) {
  std::string out;
  if (s.lhs) {
    out += print_context(s.lhs, names);
    out += " ";
  }
  out += "|- ";
  out += s.rhs->print();
  return out;
}

namespace {

void print_proof_rec(const ProofPtr& p, const NameTable& names, int indent, std::string& out) {
  out.append(indent * 2, ' ');
  out += "(";
  out += rule_name(p->rule());
  if (is_implication_intro(p->rule())) {
    out += " [" + names.name(p->discharged()) + "]";
  } else if (is_product_elim(p->rule())) {
    out += " [" + names.name(p->pair_a()) + " " + names.name(p->pair_b()) + "]";
  } else if (p->rule() == RuleKind::ProperAxiom) {
    out += " " + p->word();
  }
  out += " " + print_sequent(p->conclusion(), names);
  for (const auto& q : p->premises()) {
    out += "\n";
    print_proof_rec(q, names, indent + 1, out);
  }
  out += ")";
}

}  // namespace

std::string print_proof(const ProofPtr& p, const NameTable& names) {
  std::string out;
  print_proof_rec(p, names, 0, out);
  out += "\n";
  return out;
}

namespace {

void render_text_rec(const ProofPtr& p, const NameTable& names, int indent, std::string& out) {
  out.append(indent * 2, ' ');
  out += print_sequent(p->conclusion(), names);
  out += "   [";
  out += rule_name(p->rule());
  if (is_implication_intro(p->rule()))
    out += " " + names.name(p->discharged());
  else if (is_product_elim(p->rule()))
    out += " " + names.name(p->pair_a()) + "," + names.name(p->pair_b());
  else if (p->rule() == RuleKind::ProperAxiom)
    out += " " + p->word();
  out += "]\n";
  for (const auto& q : p->premises()) render_text_rec(q, names, indent + 1, out);
}

std::string latex_formula(const Formula* f, bool parens_needed);

std::string latex_child(const Formula* f, bool parens) {
  return latex_formula(f, parens);
}

std::string latex_formula(const Formula* f, bool parens_needed) {
  if (f->is_atom()) {
    std::string n = f->name();
    std::string out = "\\mathit{" + n + "}";
    return out;
  }
  std::string op, l, r;
  switch (f->conn()) {
    case Conn::NcProd: op = " \\odot "; break;
    case Conn::CProd: op = " \\otimes "; break;
    case Conn::LDiv: op = " \\backslash "; break;
    case Conn::RDiv: op = " / "; break;
    case Conn::LinImp: op = " \\multimap "; break;
    default: break;
  }
  std::string body = latex_child(f->left(), !f->left()->is_atom()) + op +
                     latex_child(f->right(), !f->right()->is_atom());
  return parens_needed ? "(" + body + ")" : body;
}

std::string latex_context(const SpPtr& t, const NameTable& names) {
  if (!t) return "";
  switch (t->kind()) {
    case SpTerm::Kind::Leaf:
      return latex_formula(t->occ().formula, false);
    case SpTerm::Kind::Seq: {
      std::string s = "\\langle ";
      for (size_t i = 0; i < t->children().size(); i++) {
        if (i) s += "; ";
        s += latex_context(t->children()[i], names);
      }
      return s + "\\rangle ";
    }
    case SpTerm::Kind::Par: {
      std::string s = "(";
      for (size_t i = 0; i < t->children().size(); i++) {
        if (i) s += ", ";
        s += latex_context(t->children()[i], names);
      }
      return s + ")";
    }
  }
  return {};
}

std::string latex_rule_label(const ProofPtr& p) {
  switch (p->rule()) {
    case RuleKind::LtoE: return "\\backslash_e";
    case RuleKind::LtoI: return "\\backslash_i";
    case RuleKind::LfromE: return "/_e";
    case RuleKind::LfromI: return "/_i";
    case RuleKind::LltoE: return "\\multimap_e";
    case RuleKind::LltoI: return "\\multimap_i";
    case RuleKind::OdotE: return "\\odot_e";
    case RuleKind::OdotI: return "\\odot_i";
    case RuleKind::OtimesE: return "\\otimes_e";
    case RuleKind::OtimesI: return "\\otimes_i";
    case RuleKind::Entropy: return "\\sqsubset";
    case RuleKind::ProperAxiom: return "\\mathit{lex}";
    default: return "";
  }
}

void render_latex_rec(const ProofPtr& p, const NameTable& names, std::string& out) {
  for (const auto& q : p->premises()) render_latex_rec(q, names, out);
  std::string seq = "$";
  if (p->conclusion().lhs) seq += latex_context(p->conclusion().lhs, names) + " ";
  seq += "\\vdash " + latex_formula(p->conclusion().rhs, false) + "$";
  if (p->is_leaf()) {
    if (p->rule() == RuleKind::ProperAxiom)
      seq = "$\\mathit{" + p->word() + "}$ " + seq;
    out += "\\AxiomC{" + seq + "}\n";
    return;
  }
  std::string label = latex_rule_label(p);
  if (!label.empty()) out += "\\RightLabel{$[" + label + "]$}\n";
  out += p->premises().size() == 1 ? "\\UnaryInfC{" + seq + "}\n"
                                   : "\\BinaryInfC{" + seq + "}\n";
}

}  // namespace

std::string render_text(const ProofPtr& p, const NameTable& names) {
  std::string out;
  render_text_rec(p, names, 0, out);
  return out;
}

std::string render_latex(const ProofPtr& p, const NameTable& names) {
  std::string out = "\\begin{prooftree}\n";
  render_latex_rec(p, names, out);
  out += "\\end{prooftree}\n";
  return out;
}

Lexicon parse_lexicon(std::string_view text) {
  Lexicon lex;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t tab = line.find_first_of(" \t", b);
    if (tab == std::string::npos)
      throw ParseError("lexicon line needs 'word<TAB>formula'", lineno, 1);
    std::string word = line.substr(b, tab - b);
    std::string rest = line.substr(tab);
    if (word == "EPS") word.clear();
    try {
      lex.emplace(word, parse_formula(rest));
    } catch (const ParseError& e) {
      throw ParseError(std::string("in lexicon entry for '") + (word.empty() ? "EPS" : word) +
                           "': " + e.what(),
                       lineno, 1);
    }
  }
  return lex;
}

}  // namespace pcmll
