#include "argue/parser.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "argue/errors.hpp"

namespace argue {

namespace {

enum class TokKind {
  ident,    // lower-case first
  variable, // upper-case first
  number,   // decimal
  sign,     // + ++ - --
  lparen,
  rparen,
  comma,
  colon,
  lbracket,
  rbracket,
  tilde,
  amp,
  pipe,
  arrow,
  hash,
  end,
};

struct Token {
  TokKind kind;
  std::string text;
  std::size_t column;  // 1-based
};

// Tokenizes one logical line (or a whole formula string).  `line` is only
// used for error positions.
std::vector<Token> tokenize(const std::string& text, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    const std::size_t col = i + 1;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '%') break;  // comment to end of line
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      TokKind kind = std::isupper(static_cast<unsigned char>(c)) ? TokKind::variable
                                                                 : TokKind::ident;
      out.push_back({kind, text.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < n && text[j] == '.') {
        ++j;
        while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      out.push_back({TokKind::number, text.substr(i, j - i), col});
      i = j;
      continue;
    }
    switch (c) {
      case '(': out.push_back({TokKind::lparen, "(", col}); ++i; continue;
      case ')': out.push_back({TokKind::rparen, ")", col}); ++i; continue;
      case ',': out.push_back({TokKind::comma, ",", col}); ++i; continue;
      case ':': out.push_back({TokKind::colon, ":", col}); ++i; continue;
      case '[': out.push_back({TokKind::lbracket, "[", col}); ++i; continue;
      case ']': out.push_back({TokKind::rbracket, "]", col}); ++i; continue;
      case '~': out.push_back({TokKind::tilde, "~", col}); ++i; continue;
      case '&': out.push_back({TokKind::amp, "&", col}); ++i; continue;
      case '|': out.push_back({TokKind::pipe, "|", col}); ++i; continue;
      case '#': out.push_back({TokKind::hash, "#", col}); ++i; continue;
      case '+':
        if (i + 1 < n && text[i + 1] == '+') {
          out.push_back({TokKind::sign, "++", col});
          i += 2;
        } else {
          out.push_back({TokKind::sign, "+", col});
          ++i;
        }
        continue;
      case '-':
        if (i + 1 < n && text[i + 1] == '>') {
          out.push_back({TokKind::arrow, "->", col});
          i += 2;
        } else if (i + 1 < n && text[i + 1] == '-') {
          out.push_back({TokKind::sign, "--", col});
          i += 2;
        } else {
          out.push_back({TokKind::sign, "-", col});
          ++i;
        }
        continue;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({TokKind::end, "", n + 1});
  return out;
}

class FormulaParser {
 public:
  FormulaParser(const std::vector<Token>& toks, std::size_t line)
      : toks_(toks), line_(line) {}

  // Parses tokens [pos, ...) as a formula, leaving pos_ on the first
  // unconsumed token.
  Formula parse(std::size_t pos) {
    pos_ = pos;
    return implication();
  }

  std::size_t position() const { return pos_; }

  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, peek().column);
  }

 private:
  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == TokKind::arrow) {
      ++pos_;
      return Formula::implication(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == TokKind::pipe) {
      ++pos_;
      f = Formula::disjunction(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().kind == TokKind::amp) {
      ++pos_;
      f = Formula::conjunction(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    if (peek().kind == TokKind::tilde) {
      ++pos_;
      return Formula::negation(unary());
    }
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::hash:
        ++pos_;
        return Formula::falsum();
      case TokKind::lparen: {
        ++pos_;
        Formula f = implication();
        if (peek().kind != TokKind::rparen) fail("expected ')'");
        ++pos_;
        return f;
      }
      case TokKind::ident: {
        std::string predicate = t.text;
        ++pos_;
        if (peek().kind != TokKind::lparen) return Formula::atom(std::move(predicate));
        ++pos_;
        std::vector<Term> terms;
        while (true) {
          const Token& a = peek();
          if (a.kind == TokKind::ident) {
            terms.push_back(Term::constant(a.text));
          } else if (a.kind == TokKind::variable) {
            terms.push_back(Term::variable(a.text));
          } else {
            fail("expected a term");
          }
          ++pos_;
          if (peek().kind == TokKind::comma) {
            ++pos_;
            continue;
          }
          break;
        }
        if (peek().kind != TokKind::rparen) fail("expected ')' after term list");
        ++pos_;
        return Formula::atom(std::move(predicate), std::move(terms));
      }
      case TokKind::variable:
        fail("predicate names start with a lower-case letter");
      default:
        fail("expected a formula");
    }
  }

  const std::vector<Token>& toks_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(const std::string& text) {
  std::vector<Token> toks = tokenize(text, 1);
  FormulaParser p(toks, 1);
  Formula f = p.parse(0);
  if (p.peek().kind != TokKind::end) p.fail("trailing input after formula");
  return f;
}

namespace {

// Splits `text` into lines, unifying \n and \r\n endings.
std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

bool blank(const std::vector<Token>& toks) { return toks.size() == 1; }

}  // namespace

Database parse_database(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);

  std::optional<DictId> dict;
  std::vector<AxiomEntry> axioms;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t lineno = li + 1;
    std::vector<Token> toks = tokenize(lines[li], lineno);
    if (blank(toks)) continue;

    if (!dict) {
      // First effective line: `dict <name>`.
      if (toks[0].kind != TokKind::ident || toks[0].text != "dict") {
        throw ParseError("expected `dict <name>` on the first line", lineno,
                         toks[0].column);
      }
      if (toks.size() < 3 || toks[1].kind != TokKind::ident) {
        throw ParseError("expected a dictionary name after `dict`", lineno,
                         toks.size() > 1 ? toks[1].column : toks[0].column);
      }
      // Dictionary names may contain '-': the lexer splits bounded-delta
      // into ident/sign/ident, so stitch the raw text back together.
      std::string name;
      for (std::size_t i = 1; i + 1 < toks.size(); ++i) name += toks[i].text;
      try {
        dict = dict_by_name(name);
      } catch (const DictionaryError& e) {
        throw ParseError(e.what(), lineno, toks[1].column);
      }
      continue;
    }

    // Axiom line: `<label> : <formula> [<sign>]`.
    if (toks[0].kind != TokKind::ident) {
      throw ParseError("expected an axiom label", lineno, toks[0].column);
    }
    const std::string& label = toks[0].text;
    if (toks.size() < 2 || toks[1].kind != TokKind::colon) {
      throw ParseError("expected ':' after axiom label", lineno,
                       toks.size() > 1 ? toks[1].column : toks[0].column);
    }

    FormulaParser p(toks, lineno);
    Formula formula = p.parse(2);

    if (p.peek().kind != TokKind::lbracket) p.fail("expected '[' and a sign");
    std::size_t pos = p.position() + 1;
    std::string sign_text;
    while (pos < toks.size() && toks[pos].kind != TokKind::rbracket &&
           toks[pos].kind != TokKind::end) {
      sign_text += toks[pos].text;
      ++pos;
    }
    if (pos >= toks.size() || toks[pos].kind != TokKind::rbracket) {
      throw ParseError("expected ']' after sign", lineno,
                       pos < toks.size() ? toks[pos].column : 0);
    }
    if (sign_text.empty()) {
      throw ParseError("empty sign", lineno, toks[pos].column);
    }
    ++pos;
    if (toks[pos].kind != TokKind::end) {
      throw ParseError("trailing input after sign", lineno, toks[pos].column);
    }

    Sign sign;
    try {
      sign = dictionary(*dict).parse_sign(sign_text);
    } catch (const DictionaryError& e) {
      throw ParseError(e.what(), lineno, 0);
    }

    axioms.emplace_back(label, std::move(formula), sign);
  }

  if (!dict) throw ParseError("missing `dict` declaration", 1, 0);

  try {
    return Database(*dict, std::move(axioms));
  } catch (const Error& e) {
    throw ParseError(e.what(), 1, 0);
  }
}

Database load_database(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open kb file: " + path, 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_database(buf.str());
}

GroundLabel parse_ground_label(const std::string& text, const Database& db) {
  std::vector<Token> toks = tokenize(text, 1);
  if (toks[0].kind != TokKind::ident) {
    throw ParseError("expected an axiom label", 1, toks[0].column);
  }
  const std::string& label = toks[0].text;
  std::vector<std::string> constants;
  std::size_t pos = 1;
  if (toks[pos].kind == TokKind::lparen) {
    ++pos;
    while (true) {
      if (toks[pos].kind != TokKind::ident) {
        throw ParseError("expected a constant", 1, toks[pos].column);
      }
      constants.push_back(toks[pos].text);
      ++pos;
      if (toks[pos].kind == TokKind::comma) {
        ++pos;
        continue;
      }
      break;
    }
    if (toks[pos].kind != TokKind::rparen) {
      throw ParseError("expected ')'", 1, toks[pos].column);
    }
    ++pos;
  }
  if (toks[pos].kind != TokKind::end) {
    throw ParseError("trailing input after label", 1, toks[pos].column);
  }

  const AxiomEntry* ax = db.find(label);
  if (ax == nullptr) throw Error("unknown axiom label: " + label);
  if (ax->variables.size() != constants.size()) {
    throw Error("label " + label + " takes " + std::to_string(ax->variables.size()) +
                " constants, got " + std::to_string(constants.size()));
  }
  Binding binding;
  for (std::size_t i = 0; i < constants.size(); ++i) {
    binding.emplace_back(ax->variables[i], constants[i]);
  }
  return GroundLabel{label, std::move(binding)};
}

}  // namespace argue
