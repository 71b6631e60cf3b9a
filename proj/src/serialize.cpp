#include "f2hopf/serialize.hpp"

#include "f2hopf/errors.hpp"

namespace f2hopf {

Json to_json(const AmbientMonomial& m) {
  Json q = Json::object();
  for (const auto& [index, e] : m.q_exps()) q[std::to_string(index)] = e;
  return Json{{"g", m.g_exp()}, {"q", q}};
}

Json to_json(const AmbientElement& e) {
  Json out = Json::array();
  for (const auto& m : e.terms()) out.push_back(to_json(m));
  return out;
}

Json to_json(const TensorElement& t) {
  Json out = Json::array();
  for (const auto& [l, r] : t.terms()) out.push_back(Json::array({to_json(l), to_json(r)}));
  return out;
}

Json to_json(const FamilyMonomial& m) {
  Json exps = Json::object();
  for (const auto& [label, e] : m.exps()) exps[generator_name(m.family(), label)] = e;
  return Json{{"family", std::string(family_name(m.family()))}, {"exps", exps}};
}

Json to_json(const GradedCoalgebra& c) {
  Json degrees = Json::array();
  for (const auto& labels : c.labels()) degrees.push_back(labels);
  Json delta = Json::array();
  for (std::size_t d = 0; d < c.degree_count(); ++d) {
    for (std::size_t x = 0; x < c.dim(d); ++x) {
      for (std::size_t s = 0; s <= d; ++s) {
        const auto cols = c.split(d, s).row(x).set_bits();
        if (cols.empty()) continue;
        Json pairs = Json::array();
        const std::size_t nr = c.dim(d - s);
        for (auto col : cols) {
          pairs.push_back(Json::array({c.labels()[s][col / nr], c.labels()[d - s][col % nr]}));
        }
        delta.push_back(Json{{"from", c.labels()[d][x]}, {"split", Json::array({s, d - s})}, {"pairs", pairs}});
      }
    }
  }
  return Json{{"name", c.name()}, {"degrees", degrees}, {"delta", delta}};
}

Json to_json(const SSet& s) { return Json(s.elements); }

Json to_json(const BitMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::string row;
    for (std::size_t c = 0; c < m.cols(); ++c) row += m.get(r, c) ? '1' : '0';
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const IsoVerdict& v) {
  Json out{{"outcome", std::string(iso_outcome_name(v.outcome))},
           {"detail", v.detail},
           {"search_space", v.search_space},
           {"examined", v.examined}};
  if (v.outcome == IsoOutcome::No) out["invariant"] = v.invariant;
  if (v.outcome == IsoOutcome::Yes) {
    Json w = Json::array();
    for (const auto& m : v.witness) w.push_back(to_json(m));
    out["witness"] = w;
  }
  return out;
}

AmbientMonomial ambient_monomial_from_json(const Json& j) {
  try {
    std::vector<AmbientMonomial::Factor> q;
    if (j.contains("q")) {
      for (const auto& [key, e] : j.at("q").items()) {
        std::size_t used = 0;
        const int index = std::stoi(key, &used);
        if (used != key.size()) throw AlgebraError("bad generator index '" + key + "'");
        q.emplace_back(index, e.get<std::int64_t>());
      }
    }
    return AmbientMonomial(j.at("g").get<std::int64_t>(), std::move(q));
  } catch (const Json::exception& e) {
    throw AlgebraError(std::string("malformed ambient monomial: ") + e.what());
  } catch (const std::logic_error& e) {
    throw AlgebraError(std::string("malformed ambient monomial: ") + e.what());
  }
}

AmbientElement ambient_element_from_json(const Json& j) {
  if (!j.is_array()) throw AlgebraError("ambient element must be a JSON array");
  std::vector<AmbientMonomial> terms;
  for (const auto& m : j) terms.push_back(ambient_monomial_from_json(m));
  return AmbientElement(std::move(terms));
}

FamilyMonomial family_monomial_from_json(const Json& j) {
  try {
    const auto family = parse_family(j.at("family").get<std::string>());
    if (!family) throw AlgebraError("unknown family");
    std::vector<FamilyMonomial::Factor> exps;
    for (const auto& [name, e] : j.at("exps").items()) {
      const auto label = parse_generator_name(*family, name);
      if (!label) throw AlgebraError("unknown generator '" + name + "'");
      exps.emplace_back(*label, e.get<std::int64_t>());
    }
    return FamilyMonomial(*family, std::move(exps));
  } catch (const Json::exception& e) {
    throw AlgebraError(std::string("malformed family monomial: ") + e.what());
  }
}

}  // namespace f2hopf
