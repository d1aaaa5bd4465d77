#pragma once

#include <string>

#include "affchar/bgg.hpp"

namespace affchar {

// Deterministic JSON encodings: object keys sorted, exponents ascending,
// coefficients as canonical fraction strings.
std::string json_of_qseries(const QSeries& s);
std::string json_of_charelem(const CharElem& f);
std::string json_of_multtable(const MultTable& t, const AffineType& T);

}  // namespace affchar
