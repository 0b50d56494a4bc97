#pragma once

// Datum file format: JSON with fields ambient_dim, gram (optional,
// row-major), pos_roots_g, pos_roots_k, lattice {basis, congruences},
// name. Rationals appear as integers or as "p/q" strings. Syntax and
// shape problems throw std::invalid_argument or nlohmann::json
// exceptions; mathematical invalidity is a matter for validate().

#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "linalg.hpp"
#include "pairdatum.hpp"
#include "rational.hpp"

namespace spinlambda {

namespace detail {

inline Rat rat_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    try {
      return rat_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline Weight weight_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected a coordinate array, got " + j.dump());
  Weight w;
  w.c.reserve(j.size());
  for (const auto& x : j) w.c.push_back(rat_from_json(x));
  return w;
}

inline nlohmann::ordered_json rat_to_datum_json(const Rat& q) {
  if (is_integer(q) && q.get_num().fits_slong_p())
    return nlohmann::ordered_json(q.get_num().get_si());
  return nlohmann::ordered_json(to_string(q));
}

inline nlohmann::ordered_json weight_to_json(const Weight& w) {
  auto arr = nlohmann::ordered_json::array();
  for (const Rat& x : w.c) arr.push_back(rat_to_datum_json(x));
  return arr;
}

}  // namespace detail

inline PairDatum datum_from_json(const nlohmann::json& j) {
  PairDatum d;
  d.ambient_dim = j.at("ambient_dim").get<std::size_t>();
  if (j.contains("name")) d.name = j.at("name").get<std::string>();
  if (j.contains("gram")) {
    const auto& g = j.at("gram");
    if (!g.is_array()) throw ParseError("gram must be an array");
    d.gram = Mat(d.ambient_dim, d.ambient_dim);
    if (!g.empty() && g.front().is_array()) {
      if (g.size() != d.ambient_dim) throw ParseError("gram row count mismatch");
      for (std::size_t i = 0; i < d.ambient_dim; ++i) {
        if (g[i].size() != d.ambient_dim)
          throw ParseError("gram column count mismatch");
        for (std::size_t k = 0; k < d.ambient_dim; ++k)
          d.gram.at(i, k) = detail::rat_from_json(g[i][k]);
      }
    } else {
      if (g.size() != d.ambient_dim * d.ambient_dim)
        throw ParseError("row-major gram must hold ambient_dim^2 entries");
      for (std::size_t i = 0; i < g.size(); ++i) d.gram.a[i] = detail::rat_from_json(g[i]);
    }
  }
  for (const auto& r : j.at("pos_roots_g")) d.pos_roots_g.push_back(detail::weight_from_json(r));
  if (j.contains("pos_roots_k"))
    for (const auto& r : j.at("pos_roots_k")) d.pos_roots_k.push_back(detail::weight_from_json(r));
  const auto& lat = j.at("lattice");
  for (const auto& b : lat.at("basis")) d.lattice.basis.push_back(detail::weight_from_json(b));
  if (lat.contains("congruences")) {
    for (const auto& cg : lat.at("congruences")) {
      LatticeSpec::Congruence c;
      c.coeffs = cg.at("coeffs").get<std::vector<long>>();
      c.modulus = cg.at("modulus").get<long>();
      d.lattice.congruences.push_back(std::move(c));
    }
  }
  return d;
}

inline nlohmann::ordered_json datum_to_json(const PairDatum& d) {
  nlohmann::ordered_json j;
  if (!d.name.empty()) j["name"] = d.name;
  j["ambient_dim"] = d.ambient_dim;
  if (d.gram.rows != 0) {
    auto g = nlohmann::ordered_json::array();
    for (const Rat& x : d.gram.a) g.push_back(detail::rat_to_datum_json(x));
    j["gram"] = std::move(g);
  }
  auto roots_g = nlohmann::ordered_json::array();
  for (const Weight& r : d.pos_roots_g) roots_g.push_back(detail::weight_to_json(r));
  j["pos_roots_g"] = std::move(roots_g);
  auto roots_k = nlohmann::ordered_json::array();
  for (const Weight& r : d.pos_roots_k) roots_k.push_back(detail::weight_to_json(r));
  j["pos_roots_k"] = std::move(roots_k);
  auto basis = nlohmann::ordered_json::array();
  for (const Weight& b : d.lattice.basis) basis.push_back(detail::weight_to_json(b));
  j["lattice"]["basis"] = std::move(basis);
  auto congruences = nlohmann::ordered_json::array();
  for (const auto& c : d.lattice.congruences) {
    nlohmann::ordered_json jc;
    jc["coeffs"] = c.coeffs;
    jc["modulus"] = c.modulus;
    congruences.push_back(std::move(jc));
  }
  j["lattice"]["congruences"] = std::move(congruences);
  return j;
}

inline PairDatum load_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open datum file: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  return datum_from_json(j);
}

inline void save_datum_file(const PairDatum& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write datum file: " + path);
  out << datum_to_json(d).dump(2) << "\n";
}

}  // namespace spinlambda
