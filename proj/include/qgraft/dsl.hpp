// Parser for small relation files:
//
//   gens e1 e2 e3;
//   order e1 < e2 < e3;       # optional, defaults to declaration order
//   rel e2*e1 - q^(1/2)*e1*e2;
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qgraft/ncpoly.hpp"

namespace qgraft {

struct DslError : std::invalid_argument {
  DslError(const std::string& kind, const std::string& msg, std::size_t line, std::size_t column)
      : std::invalid_argument(kind + " at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  std::size_t line, column;
};

struct SyntaxError : DslError {
  SyntaxError(const std::string& msg, std::size_t line, std::size_t column)
      : DslError("syntax error", msg, line, column) {}
};

struct UnknownGenerator : DslError {
  UnknownGenerator(const std::string& name, std::size_t line, std::size_t column)
      : DslError("unknown generator", name, line, column) {}
};

// Scalar errors are reported as MalformedScalar (see scalar.hpp) with the
// absolute offset and a line:column prefix in the message.

struct RelationFile {
  std::vector<std::string> generators;
  MonomialOrder order;
  std::vector<NCPolynomial> relations;

  int generator_index(const std::string& name) const;  // -1 if absent
};

RelationFile parse_dsl(const std::string& text);

// "e2*e1" -> word over the file's generators.
Word parse_word(const std::string& text, const std::vector<std::string>& generators);

}  // namespace qgraft
