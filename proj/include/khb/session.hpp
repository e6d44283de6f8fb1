#pragma once

#include "khb/groebner.hpp"
#include "khb/valuation.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace khb {

struct SourceLocation {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct ParseError : std::runtime_error {
  ParseError(SourceLocation at, const std::string& message)
      : std::runtime_error(std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + message), where(at) {}
  SourceLocation where;
};

struct RingStmt {
  std::string name;
  std::vector<std::string> vars;
};

struct UseStmt {
  std::string ring;
};

struct OrderStmt {
  enum class Kind { lex, grlex, grevlex, weight, valuation };
  std::string name;
  Kind kind = Kind::lex;
  RatMatrix weights;        // weight
  std::string valuation;    // valuation
  std::string tiebreak;     // weight, valuation
};

struct PolyStmt {
  std::string name;
};

struct IdealStmt {
  std::string name;
  std::vector<std::string> generators;
};

struct GradingStmt {
  std::string name;
  IntVector degrees;
};

struct ValuationStmt {
  std::string name;
  RatMatrix matrix;
  RatMatrix value_order;
  std::optional<std::string> grading;  // degrees given by name
  std::optional<IntVector> degrees;    // degrees given inline
};

/// A command argument: `keyword value`.
struct Arg {
  enum class Kind { name, names, matrix, vector, number };
  Kind kind = Kind::name;
  std::string name;
  std::vector<std::string> names;
  RatMatrix matrix;
  IntVector vector;
  long number = 0;
};

struct CommandStmt {
  std::string verb;
  std::map<std::string, Arg> args;
  SourceLocation where;

  bool has(const std::string& k) const { return args.count(k) != 0; }
  const Arg& at(const std::string& k) const { return args.at(k); }
};

using Statement = std::variant<RingStmt, UseStmt, OrderStmt, PolyStmt, IdealStmt, GradingStmt, ValuationStmt, CommandStmt>;

struct RingInfo {
  std::vector<std::string> vars;
};

struct OrderBinding {
  std::string ring;
  MonomialOrder order;
};

struct PolyBinding {
  std::string ring;
  Polynomial value;
};

/// Generators are known for declared ideals; kernel results are bound at run time.
struct IdealBinding {
  std::string ring;
  std::optional<Ideal> value;
};

struct ValuationBinding {
  std::string ring;
  ValuationTable table;
};

struct Session {
  std::vector<Statement> statements;
  std::map<std::string, RingInfo> rings;
  std::map<std::string, OrderBinding> orders;
  std::map<std::string, PolyBinding> polys;
  std::map<std::string, IdealBinding> ideals;
  std::map<std::string, ValuationBinding> valuations;
  std::map<std::string, IntVector> gradings;

  std::vector<const CommandStmt*> commands() const;
};

/// Parses the session language. Every name must be declared before use;
/// polynomials, orders, ideals and valuations belong to the current ring
/// (the latest `ring` or `use`). Errors carry line and column.
Session parse_session(std::string_view text);

/// Polynomial in the given variables; `*` is required between factors and
/// exponents are nonnegative integers.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

/// Canonical text: one statement per line, polynomials expanded.
/// print_session(parse_session(print_session(s))) == print_session(s).
std::string print_session(const Session& s);
std::string print_statement(const Session& s, const Statement& st);

}  // namespace khb
