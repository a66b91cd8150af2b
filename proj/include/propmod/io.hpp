#pragma once

#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "propmod/affine.hpp"
#include "propmod/checker.hpp"
#include "propmod/enumerate.hpp"
#include "propmod/error.hpp"
#include "propmod/rational.hpp"

namespace propmod::io {

using json = nlohmann::json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Integers that fit in 64 bits are plain JSON numbers, larger ones strings.
inline json integer_to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return z.convert_to<std::int64_t>();
  return z.str();
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    Rational r = parse_rational(j.get<std::string>());
    if (!is_integer(r)) throw InputError("expected an integer, got " + j.get<std::string>());
    return num(r);
  }
  throw InputError("expected an integer, got " + j.dump());
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational \"num/den\", got " + j.dump());
}

inline LatticePoint point_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected a point array, got " + j.dump());
  LatticePoint x;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw InputError("point coordinates must be integers: " + j.dump());
    x.push_back(c.get<std::int64_t>());
  }
  return x;
}

inline AffineSemigroup semigroup_from_json(const json& j) {
  try {
    std::size_t n = j.at("dimension").get<std::size_t>();
    std::vector<LatticePoint> gaps;
    for (const auto& g : j.at("gaps")) gaps.push_back(point_from_json(g));
    std::optional<std::vector<LatticePoint>> gens;
    if (j.contains("generators")) {
      gens.emplace();
      for (const auto& g : j.at("generators")) gens->push_back(point_from_json(g));
    }
    return AffineSemigroup(n, std::move(gaps), std::move(gens));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed semigroup document: ") + e.what());
  }
}

inline json semigroup_to_json(const AffineSemigroup& s) {
  json j;
  j["dimension"] = s.dimension();
  j["gaps"] = s.gaps();
  if (s.generators()) j["generators"] = *s.generators();
  return j;
}

inline ModularInequality inequality_from_json(const json& j) {
  try {
    std::vector<Integer> f, g;
    for (const auto& c : j.at("f")) f.push_back(integer_from_json(c));
    for (const auto& c : j.at("g")) g.push_back(integer_from_json(c));
    return ModularInequality::make(std::move(f), integer_from_json(j.at("b")), std::move(g), false);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed inequality document: ") + e.what());
  }
}

inline json inequality_to_json(const ModularInequality& m) {
  json j;
  j["f"] = json::array();
  j["g"] = json::array();
  for (const auto& c : m.f) j["f"].push_back(integer_to_json(c));
  j["b"] = integer_to_json(m.b);
  for (const auto& c : m.g) j["g"].push_back(integer_to_json(c));
  return j;
}

inline Witness witness_from_json(const json& j) {
  try {
    Witness w;
    w.case_id = j.at("case").get<int>();
    w.t = j.at("t").get<std::size_t>();
    for (const auto& c : j.at("p")) w.p.push_back(rational_from_json(c));
    for (const auto& c : j.at("q")) w.q.push_back(rational_from_json(c));
    auto pairs = [&](const char* key, std::vector<std::pair<Rational, Rational>>& out) {
      if (!j.contains(key)) return;
      for (const auto& pr : j.at(key)) {
        if (!pr.is_array() || pr.size() != 2) throw InputError(std::string(key) + " entries must be pairs");
        out.emplace_back(rational_from_json(pr[0]), rational_from_json(pr[1]));
      }
    };
    pairs("mu", w.mu);
    pairs("nu", w.nu);
    if (j.contains("permutation")) {
      w.permutation = j.at("permutation").get<std::vector<std::size_t>>();
    } else {
      w.permutation.resize(w.dimension());
      std::iota(w.permutation.begin(), w.permutation.end(), std::size_t{0});
    }
    validate_witness(w);
    return w;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed witness document: ") + e.what());
  }
}

inline json witness_to_json(const Witness& w) {
  json j;
  j["case"] = w.case_id;
  j["t"] = w.t;
  j["p"] = json::array();
  j["q"] = json::array();
  for (const auto& r : w.p) j["p"].push_back(to_string(r));
  for (const auto& r : w.q) j["q"].push_back(to_string(r));
  j["mu"] = json::array();
  j["nu"] = json::array();
  for (const auto& [a, b] : w.mu) j["mu"].push_back({to_string(a), to_string(b)});
  for (const auto& [a, b] : w.nu) j["nu"].push_back({to_string(a), to_string(b)});
  j["permutation"] = w.permutation;
  return j;
}

inline bool is_witness_document(const json& j) { return j.is_object() && j.contains("case"); }

inline std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "genus,total,propmod\n";
  for (const auto& r : rows) out << r.genus << ',' << r.total << ',' << r.propmod << '\n';
  return out.str();
}

inline json census_json(const std::vector<CensusRow>& rows) {
  json j = json::array();
  for (const auto& r : rows) j.push_back({{"genus", r.genus}, {"total", r.total}, {"propmod", r.propmod}});
  return j;
}

}  // namespace propmod::io
