#pragma once

#include <json.hpp>

#include "affchar/bgg.hpp"

namespace affchar::detail {

using Json = nlohmann::ordered_json;

Json js_weight(const FiniteWeight& w);
Json js_qseries(const QSeries& s);
Json js_charelem(const CharElem& f);
Json js_multtable(const MultTable& t, const AffineType& T);
Json js_reciprocity(const ReciprocityReport& rep, const AffineType& T);

// delta-shift x/a0 as a canonical fraction string
std::string shift_str(Int shift_num, Int a0);

}  // namespace affchar::detail
