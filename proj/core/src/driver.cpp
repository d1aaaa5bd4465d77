#include "affchar/driver.hpp"

#include <sstream>

#include "affchar/demazure.hpp"
#include "affchar/json_io.hpp"
#include "json_detail.hpp"

namespace affchar {

using detail::Json;

std::vector<Int> parse_weight_list(const std::string& csv) {
  std::vector<Int> out;
  if (csv.empty()) return out;
  std::stringstream ss{csv};
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    Int v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument{"bad weight coordinate: '" + item + "'"};
    }
    if (pos != item.size()) throw std::invalid_argument{"bad weight coordinate: '" + item + "'"};
    out.push_back(v);
  }
  return out;
}

namespace {

FiniteWeight weight_of(const AffineType& T, const std::vector<Int>& coords) {
  AFF_REQUIRE(static_cast<int>(coords.size()) == T.n,
              "weight must have " + std::to_string(T.n) + " coordinates for " + T.label);
  return FiniteWeight::from(coords);
}

Json run_root_data(const AffineType& T, const RunConfig& cfg) {
  Json o = Json::object();
  o["type"] = T.label;
  o["rank"] = T.n;
  o["twist"] = T.r;
  o["a0"] = T.a0;
  o["type_class"] = T.type_one ? "I" : "II";
  Json cart = Json::array();
  for (const auto& row : T.cartan) cart.push_back(row);
  o["cartan"] = std::move(cart);
  o["marks"] = T.marks;
  o["comarks"] = T.comarks;
  Json d = Json::array();
  for (const auto& v : T.d) d.push_back(rat_to_string(v));
  o["d"] = std::move(d);
  o["weyl_order"] = T.weyl_order;
  o["positive_roots_level0"] = T.rt_pos.size();

  Json roots = Json::array();
  for (const auto& root : positive_real_roots(T, cfg.level_bound)) {
    Json item = Json::object();
    Json fin = Json::array();
    for (const auto& c : root.finite_rt) fin.push_back(rat_to_string(c));
    item["finite"] = std::move(fin);
    item["level"] = rat_to_string(root.delta);
    item["r_alpha"] = r_alpha(T, root);
    roots.push_back(std::move(item));
  }
  o["positive_real_roots"] = std::move(roots);
  return o;
}

// re-truncates the series encodings of a document to a smaller order
void retruncate(Json& j, int trunc) {
  if (j.is_object()) {
    if (j.contains("trunc") && j["trunc"].is_number_integer()) {
      Json out = Json::object();
      for (auto& [k, v] : j.items()) {
        if (k == "trunc") continue;
        if (std::stoi(k) <= trunc) out[k] = v;
      }
      out["trunc"] = trunc;
      j = std::move(out);
      return;
    }
    for (auto& [k, v] : j.items()) retruncate(v, trunc);
  } else if (j.is_array()) {
    for (auto& v : j) retruncate(v, trunc);
  }
}

Json macdonald_doc(const AffineType& T, const FiniteWeight& target, int trunc) {
  KernelSet K = build_kernels(T, trunc);
  MacdonaldBasis B = macdonald_basis(target, K);
  Json o = Json::object();
  o["type"] = T.label;
  o["weight"] = detail::js_weight(target);
  o["trunc"] = trunc;
  Json basis = Json::array();
  for (size_t i = 0; i < B.order.size(); ++i) {
    Json item = Json::object();
    item["weight"] = detail::js_weight(B.order[i]);
    item["poly"] = detail::js_charelem(B.poly_by_index(static_cast<int>(i)));
    item["norm_gram_schmidt"] = detail::js_qseries(B.norms_gs[i]);
    item["norm_closed_form"] = detail::js_qseries(B.norms_cf[i]);
    basis.push_back(std::move(item));
  }
  o["basis"] = std::move(basis);
  return o;
}

RunResult finish(const Json& doc, int code) { return {code, doc.dump(2) + "\n"}; }

std::string csv_of_tables(const AffineType& T, const MultTable& filt,
                          const std::vector<std::pair<FiniteWeight, const MultTable*>>& jhs) {
  std::ostringstream os;
  os << "weight,shift,multiplicity,source\n";
  for (const auto& [key, m] : filt.entries)
    os << '"' << key.first.str() << "\"," << detail::shift_str(key.second, T.a0) << ',' << m
       << ",weyl_filtration\n";
  for (const auto& [mu, table] : jhs)
    for (const auto& [key, m] : table->entries)
      os << '"' << key.first.str() << "\"," << detail::shift_str(key.second, T.a0) << ',' << m
         << ",jordan_holder:" << mu.str() << "\n";
  return os.str();
}

RunResult run_checked(const RunConfig& cfg) {
  AFF_REQUIRE(cfg.trunc >= 1, "trunc must be at least 1");
  const AffineType& T = load_type(cfg.type_label);

  if (cfg.command == "root-data") return finish(run_root_data(T, cfg), 0);

  Rat shift_scaled = cfg.shift * T.a0;
  AFF_REQUIRE(is_integer(shift_scaled), "shift must lie in (1/a0)Z");
  Int shift_num = to_int(shift_scaled);

  if (cfg.command == "norm") {
    FiniteWeight w = weight_of(T, cfg.weight);
    AFF_REQUIRE(is_dominant(w), "norm needs a dominant weight");
    Json o = Json::object();
    o["type"] = T.label;
    o["weight"] = detail::js_weight(w);
    o["trunc"] = cfg.trunc;
    o["norm_closed_form"] = detail::js_qseries(norm_closed_form(T, w, cfg.trunc));
    return finish(o, 0);
  }

  if (cfg.command == "macdonald") {
    FiniteWeight w = weight_of(T, cfg.weight);
    AFF_REQUIRE(is_dominant(w), "macdonald needs a dominant weight");
    Json doc = macdonald_doc(T, w, cfg.trunc);
    if (cfg.verify_truncation) {
      Json wider = macdonald_doc(T, w, cfg.trunc + 4);
      retruncate(wider, cfg.trunc);
      bool stable = (wider == doc);
      doc["truncation_stable"] = stable;
      return finish(doc, stable ? 0 : 1);
    }
    return finish(doc, 0);
  }

  if (cfg.command == "demazure") {
    FiniteWeight w = weight_of(T, cfg.weight);
    Json o = Json::object();
    o["type"] = T.label;
    o["weight"] = detail::js_weight(w);
    o["trunc"] = cfg.trunc;
    o["character"] = detail::js_charelem(demazure_character(T, w, cfg.trunc));
    return finish(o, 0);
  }

  if (cfg.command == "bgg-table" || cfg.command == "verify") {
    FiniteWeight w = weight_of(T, cfg.weight);
    AFF_REQUIRE(is_dominant(w), cfg.command + " needs a dominant weight");
    Rat bound = cfg.range_bound ? *cfg.range_bound : default_range_bound(T, cfg.trunc);
    KernelSet K = build_kernels(T, cfg.trunc);
    BggEngine E(K, dominants_above(T, w, bound));
    ReciprocityReport rep = verify_reciprocity(E, w, shift_num, bound);

    if (cfg.command == "verify")
      return finish(detail::js_reciprocity(rep, T), rep.all_equal ? 0 : 1);

    MultTable filt = weyl_filtration_multiplicities(E, w, shift_num, bound);
    std::vector<std::pair<FiniteWeight, const MultTable*>> jhs;
    for (const auto& mu : dominants_above(T, w, bound))
      jhs.emplace_back(mu, &E.jordan_holder(mu, shift_num));

    if (cfg.format == "csv")
      return {rep.all_equal ? 0 : 1, csv_of_tables(T, filt, jhs)};

    Json o = Json::object();
    o["type"] = T.label;
    o["lambda"] = detail::js_weight(w);
    o["shift"] = detail::shift_str(shift_num, T.a0);
    o["trunc"] = cfg.trunc;
    o["filtration"] = detail::js_multtable(filt, T);
    Json jh = Json::array();
    for (const auto& [mu, table] : jhs) {
      Json item = Json::object();
      item["mu"] = detail::js_weight(mu);
      item["table"] = detail::js_multtable(*table, T);
      jh.push_back(std::move(item));
    }
    o["jordan_holder"] = std::move(jh);
    o["reciprocity"] = detail::js_reciprocity(rep, T);
    return finish(o, rep.all_equal ? 0 : 1);
  }

  throw std::invalid_argument{"unknown command: " + cfg.command};
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  try {
    return run_checked(cfg);
  } catch (const std::invalid_argument& e) {
    Json o = Json::object();
    o["error"] = e.what();
    return {2, o.dump(2) + "\n"};
  }
}

}  // namespace affchar
