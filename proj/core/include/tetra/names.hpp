#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tetra/families.hpp"

namespace tetra {

// Text names for constructions, e.g. "W(6,2)", "PS(3,7;2)", "C_10(1,3)", "{4,4}_{3,2}",
// "AMC(4,12,[[1,-4],[4,1]])", "SDD(K5)", "DCyc_3#DCyc_3".
//
//   name  := term ('#' term)?
//   term  := torus | head ('_' int)? ('(' arg ((','|';') arg)* ')')?
//   torus := '{4,4}_' ('{' int ',' int '}' | '<' int ',' int '>' | '[' int ',' int ']')
//   arg   := int | '[[' int ',' int '],[' int ',' int ']]' | name
//
// Torus names parse to head "{4,4}", "{4,4}<>" or "{4,4}[]" with two integer arguments;
// a product parses to head "#" with the two factors as arguments.
struct FamilyName;
using NameArg = std::variant<long long, IntMatrix, FamilyName>;

struct FamilyName {
  std::string head;
  std::optional<long long> sub;
  std::vector<NameArg> args;
  std::string seps;  // separator before each argument after the first
  bool has_parens = false;

  bool operator==(const FamilyName& o) const;
  long long integer(std::size_t i) const;  // throws ParameterError unless args[i] is an integer
  const FamilyName& inner(std::size_t i) const;
};

FamilyName parse_family_name(std::string_view text);  // throws ParseError with byte offset
std::string to_string(const FamilyName& name);

// Builders for the common shapes.
FamilyName name_of(std::string head, std::vector<long long> args, std::string seps = {});
FamilyName name_sub(std::string head, long long sub, std::vector<long long> args);
FamilyName name_torus(TorusKind kind, long long b, long long c);
FamilyName name_apply(std::string head, FamilyName inner);

}  // namespace tetra
