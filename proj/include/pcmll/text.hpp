// Surface syntax: formulas, contexts, sequents, proof files, lexicons.
//
// Formula grammar (products bind tighter than implications):
//   formula := imp
//   imp     := prod (("\\" | "/" | "-o") prod)*
//   prod    := unit (("o" | "*") unit)*        left-associative
//   unit    := IDENT | "(" formula ")"
// Implication chains associate as in categorial practice: "\" chains to the
// right, "/" to the left, "-o" to the right, and a mixed chain is accepted
// only in the pattern  x1 \ ... \ xk / y1 / ... / ym  which reads
// ((x1 \ (x2 \ ... \ xk)) / y1) / ... / ym. Other mixes need parentheses.
//
// Proof files are nested rule applications with explicit conclusions:
//   proof   := "(" RULE extras sequent premise* ")"
//   extras  := "[" NAME "]"          for implication introductions
//            | "[" NAME NAME "]"     for product eliminations
//            | WORD                  for lexical leaves
//   sequent := [context] "|-" formula
//   context := item | "<" item (";" item)+ ">" | "(" item ("," item)+ ")"
//   item    := NAME ":" formula | context
// "#" starts a comment. Occurrence names are file-wide: the same name always
// denotes the same occurrence.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pcmll/names.hpp"
#include "pcmll/proof.hpp"

namespace pcmll {

struct ParseError : std::runtime_error {
  int line = 0, col = 0;
  ParseError(const std::string& m, int line, int col)
      : std::runtime_error(m + " (line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ")"),
        line(line),
        col(col) {}
};

const Formula* parse_formula(std::string_view text);
inline std::string format_formula(const Formula* f) { return f->print(); }

struct ParsedProof {
  ProofPtr proof;
  NameTable names;
};

ParsedProof parse_proof(std::string_view text);

// Parses "NAME:formula" items into a canonical term, extending the name
// table with fresh ids for unseen names.
SpPtr parse_context(std::string_view text, NameTable& names, OccId& next_id);

std::string print_sequent(const Sequent& s, const NameTable& names);
// Canonical nested-rule form; parses back to an equal proof.
std::string print_proof(const ProofPtr& p, const NameTable& names);
// Indentation-based tree, one sequent per line.
std::string render_text(const ProofPtr& p, const NameTable& names);
// bussproofs-style LaTeX.
std::string render_latex(const ProofPtr& p, const NameTable& names);

// One entry per line: word TAB formula; the empty word is spelled EPS.
using Lexicon = std::multimap<std::string, const Formula*>;
Lexicon parse_lexicon(std::string_view text);

}  // namespace pcmll
