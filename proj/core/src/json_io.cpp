#include "affchar/json_io.hpp"

#include <algorithm>

#include "json_detail.hpp"

namespace affchar {
namespace detail {

Json js_weight(const FiniteWeight& w) {
  Json a = Json::array();
  for (int i = 0; i < w.rank(); ++i) a.push_back(w.c[i]);
  return a;
}

Json js_qseries(const QSeries& s) {
  Json o = Json::object();
  for (const auto& [e, c] : s.terms()) o[std::to_string(e)] = rat_to_string(c);
  o["trunc"] = s.trunc();
  return o;
}

Json js_charelem(const CharElem& f) {
  Json a = Json::array();
  for (const auto& w : f.sorted_support()) {
    Json item = Json::object();
    item["weight"] = js_weight(w);
    item["series"] = js_qseries(f.coeff(w));
    a.push_back(std::move(item));
  }
  return a;
}

std::string shift_str(Int shift_num, Int a0) { return rat_to_string(frac(shift_num, a0)); }

Json js_multtable(const MultTable& t, const AffineType& T) {
  Json a = Json::array();
  for (const auto& [key, m] : t.entries) {
    Json item = Json::object();
    item["weight"] = js_weight(key.first);
    item["shift"] = shift_str(key.second, T.a0);
    item["multiplicity"] = m;
    item["source"] = t.source == MultTable::Source::weyl_filtration ? "weyl_filtration"
                                                                    : "jordan_holder";
    a.push_back(std::move(item));
  }
  return a;
}

Json js_reciprocity(const ReciprocityReport& rep, const AffineType& T) {
  Json o = Json::object();
  o["type"] = T.label;
  o["lambda"] = js_weight(rep.lambda);
  o["shift"] = shift_str(rep.shift_num, T.a0);
  o["trunc"] = rep.trunc;
  o["range_bound"] = rat_to_string(rep.range_bound);
  o["compared"] = rep.compared;
  o["all_equal"] = rep.all_equal;
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json item = Json::object();
    item["mu"] = js_weight(e.mu);
    item["shift"] = shift_str(e.shift_num, T.a0);
    item["filtration"] = e.filtration;
    item["jordan_holder"] = e.jordan_holder;
    item["equal"] = (e.filtration == e.jordan_holder);
    entries.push_back(std::move(item));
  }
  o["entries"] = std::move(entries);
  return o;
}

}  // namespace detail

std::string json_of_qseries(const QSeries& s) { return detail::js_qseries(s).dump(2); }
std::string json_of_charelem(const CharElem& f) { return detail::js_charelem(f).dump(2); }
std::string json_of_multtable(const MultTable& t, const AffineType& T) {
  return detail::js_multtable(t, T).dump(2);
}

}  // namespace affchar
