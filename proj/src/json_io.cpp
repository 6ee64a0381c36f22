#include "nca/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "nca/error.hpp"

namespace nca {

namespace {

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw error("bad-json", std::string(what) + ": expected a list");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw error("bad-json", std::string(what) + ": expected integers");
    out.push_back(v.get<int>());
  }
  return out;
}

Partition shape_of_lengths(std::vector<int> lengths) {
  std::sort(lengths.rbegin(), lengths.rend());
  return conjugate(lengths);
}

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw error("bad-json", "coefficient must be a string");
  return rational_from_string(j.get<std::string>());
}

Json tableau_to_json(const Tableau& t) {
  std::vector<int> lengths;
  for (const auto& c : t.cols) lengths.push_back(static_cast<int>(c.size()));
  Json j;
  j["shape"] = shape_of_lengths(lengths);
  j["columns"] = t.cols;
  return j;
}

Tableau tableau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("columns"))
    throw error("bad-json", "tableau: expected {\"columns\": [[..],..]}");
  Tableau t;
  for (const auto& c : j.at("columns")) t.cols.push_back(int_list(c, "column"));
  if (t.cols.empty()) throw error("bad-json", "tableau: no columns");
  for (const auto& c : t.cols) {
    if (c.empty()) throw error("bad-json", "tableau: empty column");
    for (size_t i = 0; i + 1 < c.size(); ++i)
      if (c[i] >= c[i + 1])
        throw error("bad-json", "tableau: columns must strictly increase");
  }
  if (j.contains("shape")) {
    std::vector<int> lengths;
    for (const auto& c : t.cols) lengths.push_back(static_cast<int>(c.size()));
    if (int_list(j.at("shape"), "shape") != shape_of_lengths(lengths))
      throw error("bad-json", "tableau: shape does not match the columns");
  }
  return t;
}

Json reading_to_json(const Reading& r) { return Json{{"labels", r}}; }

Reading reading_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("labels"))
    throw error("bad-json", "reading: expected {\"labels\": [..]}");
  return int_list(j.at("labels"), "labels");
}

Json poly_to_json(const ExactPoly& p) {
  Json terms = Json::array();
  for (const auto& [mon, c] : p.terms()) {
    Json exps = Json::object();
    for (auto [var, e] : mon) exps[std::to_string(var)] = e;
    terms.push_back(Json{{"coeff", rational_to_json(c)}, {"exps", exps}});
  }
  return Json{{"terms", terms}};
}

ExactPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw error("bad-json", "polynomial: expected {\"terms\": [..]}");
  ExactPoly p;
  for (const auto& t : j.at("terms")) {
    if (!t.contains("coeff") || !t.contains("exps"))
      throw error("bad-json", "polynomial term needs coeff and exps");
    Monomial m;
    for (const auto& [k, v] : t.at("exps").items()) {
      int var;
      try {
        var = std::stoi(k);
      } catch (const std::exception&) {
        throw error("bad-json", "polynomial: variable keys must be integers");
      }
      if (!v.is_number_integer() || v.get<int>() <= 0)
        throw error("bad-json", "polynomial: exponents must be positive");
      m.emplace_back(var, v.get<int>());
    }
    std::sort(m.begin(), m.end());
    p.add_term(rational_from_json(t.at("coeff")), m);
  }
  return p;
}

Json matching_to_json(const Matching& m) {
  Json arcs = Json::array();
  for (auto [a, b] : m) arcs.push_back(Json::array({a, b}));
  return Json{{"arcs", arcs}};
}

Matching matching_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("arcs"))
    throw error("bad-json", "matching: expected {\"arcs\": [[i,j],..]}");
  Matching m;
  for (const auto& a : j.at("arcs")) {
    auto pr = int_list(a, "arc");
    if (pr.size() != 2) throw error("bad-json", "matching: arcs are pairs");
    m.emplace_back(pr[0], pr[1]);
  }
  return m;
}

Json bitableau_to_json(const Bitableau& b) {
  Json j;
  j["shape"] = bitableau_shape(b);
  j["T"] = b.T.cols;
  j["Tprime"] = b.Tprime.cols;
  return j;
}

Bitableau bitableau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("T") || !j.contains("Tprime"))
    throw error("bad-json", "bitableau: expected {\"T\", \"Tprime\"}");
  Bitableau b;
  for (const auto& c : j.at("T")) b.T.cols.push_back(int_list(c, "T column"));
  for (const auto& c : j.at("Tprime"))
    b.Tprime.cols.push_back(int_list(c, "Tprime column"));
  try {
    check_bitableau(b);
  } catch (const error& e) {
    throw error("bad-json", e.what());
  }
  if (j.contains("shape") &&
      int_list(j.at("shape"), "shape") != bitableau_shape(b))
    throw error("bad-json", "bitableau: shape does not match the columns");
  return b;
}

Json grass_monomial_to_json(const GrassMonomial& m) {
  Json factors = Json::array();
  size_t width = 0;
  for (const auto& f : m) {
    factors.push_back(f);
    width = std::max(width, f.size());
  }
  return Json{{"m", width}, {"factors", factors}};
}

GrassMonomial grass_monomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("factors"))
    throw error("bad-json", "monomial: expected {\"factors\": [[..],..]}");
  GrassMonomial m;
  for (const auto& f : j.at("factors")) m.push_back(int_list(f, "factor"));
  if (j.contains("m")) {
    if (!j.at("m").is_number_integer())
      throw error("bad-json", "monomial: m must be an integer");
    size_t width = j.at("m").get<size_t>();
    for (const auto& f : m)
      if (f.size() != width)
        throw error("bad-json", "monomial: factor width differs from m");
  }
  return m;
}

namespace {

template <typename ElementMap, typename ToJson>
Json element_terms(const ElementMap& e, const char* key, ToJson&& to_json) {
  Json terms = Json::array();
  for (const auto& [obj, c] : e)
    terms.push_back(Json{{"coeff", rational_to_json(c)}, {key, to_json(obj)}});
  return Json{{"terms", terms}};
}

}  // namespace

Json specht_element_to_json(const SpechtElement& e) {
  return element_terms(e, "tableau", tableau_to_json);
}

Json tl_element_to_json(const TLElement& e) {
  return element_terms(e, "matching", matching_to_json);
}

Json bidet_element_to_json(const BidetElement& e) {
  return element_terms(e, "bitableau", bitableau_to_json);
}

Json grass_element_to_json(const GrassElement& e) {
  return element_terms(e, "monomial", grass_monomial_to_json);
}

std::string diagram_art(const Tableau& t) {
  size_t rows = 0;
  int widest = 1;
  for (const auto& c : t.cols) {
    rows = std::max(rows, c.size());
    for (int v : c) widest = std::max(widest, static_cast<int>(std::to_string(v).size()));
  }
  std::ostringstream os;
  for (size_t r = 0; r < rows; ++r) {
    for (size_t j = 0; j < t.cols.size(); ++j) {
      if (r < t.cols[j].size()) {
        std::string s = std::to_string(t.cols[j][r]);
        os << std::string(widest + 1 - s.size(), ' ') << s;
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace nca
