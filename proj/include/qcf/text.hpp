#pragma once

#include <string>
#include <string_view>

#include "qcf/cf.hpp"
#include "qcf/field.hpp"
#include "qcf/surd.hpp"

namespace qcf {

// Text syntax (whitespace-insensitive):
//   rational   p | p/q
//   K-element  sum of terms `r`, `r*w`, `w` joined by + or -   e.g. 4-2*w
//   surd       (x) + (y)*sqrt(d) with x, y, d K-elements
//   expansion  [a0, ..., aN; p1, ..., pk]   (no `;` means finite)

Rational parse_rational(std::string_view text);

/// Throws ParseError (with position) on bad syntax; with `require_integral`,
/// also rejects elements outside O_K.
KElement parse_element(std::string_view text, const FieldSpec& spec, bool require_integral = false);

SurdElement parse_surd(std::string_view text, const FieldSpec& spec);

/// Entries must be integral in O_K.
CFExpansion parse_expansion(std::string_view text, const FieldSpec& spec);

std::string format_expansion(const CFExpansion& cf);

}  // namespace qcf
