#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfol/deriv.hpp"

namespace pfol {

struct NamedDerivation {
  std::string name;
  Derivation d;
};

// Line-oriented problem description, '#' starts a comment:
//   field p=<int> ext=<int> [modulus=<c0,...,1>]
//   ring <v1>,<v2>,... [weights=<w1,...>]
//   deriv <Name> = <poly> ; <poly> ; ...
//   subalgebra = <poly>, <poly>, ...
//   ideal = <poly>, ...
//   option max_deg=<int> | budget=<int> | max_rounds=<int>
struct Problem {
  FieldPtr field;
  RingPtr ring;
  std::vector<NamedDerivation> derivs;
  std::optional<std::vector<Poly>> subalgebra;
  std::optional<std::vector<Poly>> ideal;
  int max_deg = 3;
  std::uint64_t budget = std::uint64_t{1} << 22;
  int max_rounds = 64;

  std::vector<Derivation> derivations() const;
};

// Throws ParseError or SemanticError with "line L, column C" locations.
Problem parse_problem(std::string_view text);

}  // namespace pfol
