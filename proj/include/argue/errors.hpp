#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace argue {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised while reading formula or knowledge-base text.  Positions are
// 1-based; column 0 means "whole line".
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}

  std::size_t line;
  std::size_t column;
};

// Sign or operator applied outside the dictionary it belongs to.
struct DictionaryError : Error {
  using Error::Error;
};

// Goal or limits rejected before search starts (non-ground goal, goal
// outside the supported fragment, nonsensical limits).
struct SearchError : Error {
  using Error::Error;
};

// Proof tree failed validation.  `path` locates the offending node as a
// dotted child-index path from the root ("" for the root itself).
struct ProofError : Error {
  ProofError(const std::string& what, std::string path)
      : Error(path.empty() ? what + " (at root)" : what + " (at node " + path + ")"),
        path(std::move(path)) {}

  std::string path;
};

}  // namespace argue
