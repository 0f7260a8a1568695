#pragma once

#include <iosfwd>

#include "szegoq/laurent.hpp"
#include "szegoq/measures.hpp"
#include "szegoq/opmatrix.hpp"
#include "szegoq/quadrature.hpp"

namespace szegoq {

/// Emitters are hand-rolled for byte-stable output: fixed field order,
/// 15 significant digits in JSON, 9 in CSV, no locale dependence.

void write_json(std::ostream& out, const QuadratureRule& rule);
void write_csv(std::ostream& out, const QuadratureRule& rule);

void write_json(std::ostream& out, const OperatorMatrix& m);
void write_csv(std::ostream& out, const OperatorMatrix& m);

void write_json(std::ostream& out, const MomentTable& m);

void write_json(std::ostream& out, const LaurentPoly& f);

} // namespace szegoq
