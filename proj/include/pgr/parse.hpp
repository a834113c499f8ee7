#pragma once

#include <string_view>

#include "pgr/lambda.hpp"
#include "pgr/logic.hpp"

namespace pgr {

// Formulas: atoms, `A & B` (left-assoc), `A -> B` (right-assoc, looser).
FormulaPtr parse_formula(std::string_view text);

// Proofs: ax(F), ex(i, p), w(F, p), c(i, p), andI(p, q), andE1(p), andE2(p),
// impI(p), impE(p, q). Positions are 0-based. `#` starts a comment.
ProofPtr parse_proof(std::string_view text);

// Terms: `\x y. t`, application by juxtaposition, parentheses. Unless
// `check` is false the term must also be linear (LinearityError otherwise).
TermPtr parse_term(std::string_view text, bool check = true);

}  // namespace pgr
