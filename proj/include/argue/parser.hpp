#pragma once

#include <string>

#include "argue/database.hpp"
#include "argue/formula.hpp"

namespace argue {

// Parses one formula.  Grammar, loosest first:
//
//   implication  ->  right-associative
//   disjunction  |
//   conjunction  &
//   negation     ~
//   primary      atom | # | ( formula )
//
// Atoms are `ident` or `ident(term, ...)`; identifiers start with a
// lower-case letter, schema variables with an upper-case letter.
// Throws ParseError with a 1-based position on malformed input.
Formula parse_formula(const std::string& text);

// Parses a kb file:
//
//   dict <generic|bounded|delta|bounded-delta|numeric>
//   <label> : <formula> [<sign>]
//   ...
//
// `%` starts a comment; blank lines are ignored; the dict line must come
// first.  Signs are validated against the declared dictionary.
Database parse_database(const std::string& text);

// Reads path into memory and parses it; file errors become ParseError.
Database load_database(const std::string& path);

// Parses a rendered ground label: `t1` or `t1(someX,c2)`.  The axiom
// lookup supplies variable names; constants pair up positionally with the
// axiom's variables.  Throws ParseError on shape errors and Error when
// the label is unknown or the arity does not match.
GroundLabel parse_ground_label(const std::string& text, const Database& db);

}  // namespace argue
