#include "heightzeta/geometry.hpp"

#include "heightzeta/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <set>

namespace heightzeta::geometry {

const BoundaryComponent* GeometryDescriptor::find(const std::string& name) const {
  const auto it = std::find_if(components.begin(), components.end(),
                               [&](const BoundaryComponent& c) { return c.name == name; });
  return it == components.end() ? nullptr : &*it;
}

namespace {

std::vector<std::int64_t> trimmed(std::vector<std::int64_t> poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  return poly;
}

void check_bundle_keys(const GeometryDescriptor& geom, const LineBundleClass& bundle) {
  for (const auto& [name, value] : bundle.coeffs) {
    if (geom.find(name) == nullptr) fail(ErrorKind::UnknownComponent, "line bundle names unknown component '" + name + "'");
  }
  for (const auto& c : geom.components) {
    if (!bundle.coeffs.contains(c.name)) fail(ErrorKind::UnknownComponent, "line bundle is missing component '" + c.name + "'");
  }
}

void require_interior(const GeometryDescriptor& geom, const LineBundleClass& bundle) {
  if (!effective_interior(geom, bundle)) {
    fail(ErrorKind::NotInInterior, "line bundle class is not in the interior of the effective cone");
  }
}

}  // namespace

std::int64_t evaluate_poly(const std::vector<std::int64_t>& poly, std::int64_t p) {
  std::int64_t value = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    if (__builtin_mul_overflow(value, p, &value) || __builtin_add_overflow(value, *it, &value)) {
      fail(ErrorKind::Overflow, "point-count polynomial overflows 64 bits at p=" + std::to_string(p));
    }
  }
  return value;
}

void validate(const GeometryDescriptor& geom) {
  if (geom.dim < 1) fail(ErrorKind::InvalidDescriptor, "dim must be positive");

  std::set<std::string> names;
  for (const auto& c : geom.components) {
    if (c.name.empty()) fail(ErrorKind::InvalidDescriptor, "component with empty name");
    if (!names.insert(c.name).second) fail(ErrorKind::InvalidDescriptor, "duplicate component '" + c.name + "'");
    if (c.kappa < 2) {
      fail(ErrorKind::KappaTooSmall, "component '" + c.name + "' has kappa " + std::to_string(c.kappa) + " < 2");
    }
  }

  std::set<std::set<std::string>> seen;
  const StratumCount* open = nullptr;
  for (const auto& stratum : geom.strata) {
    std::set<std::string> subset;
    for (const auto& member : stratum.subset) {
      if (!names.contains(member)) fail(ErrorKind::UnknownComponent, "stratum names unknown component '" + member + "'");
      if (!subset.insert(member).second) fail(ErrorKind::InvalidDescriptor, "stratum repeats component '" + member + "'");
    }
    if (!seen.insert(subset).second) fail(ErrorKind::InvalidDescriptor, "stratum subset listed twice");
    if (std::any_of(stratum.count_poly.begin(), stratum.count_poly.end(), [](auto v) { return v < 0; })) {
      fail(ErrorKind::InvalidDescriptor, "stratum count polynomial has a negative coefficient");
    }
    if (trimmed(stratum.count_poly).empty()) {
      fail(ErrorKind::InvalidDescriptor, "stratum count polynomial is zero; omit the stratum instead");
    }
    if (subset.empty()) open = &stratum;
  }

  if (open == nullptr) fail(ErrorKind::MissingOpenStratum, "no stratum with empty subset (the open orbit)");
  std::vector<std::int64_t> expected(static_cast<std::size_t>(geom.dim) + 1, 0);
  expected.back() = 1;
  if (trimmed(open->count_poly) != expected) {
    fail(ErrorKind::MissingOpenStratum, "open stratum must count p^" + std::to_string(geom.dim) + " points");
  }

  if (geom.total_poly) {
    std::vector<std::int64_t> sum;
    for (const auto& stratum : geom.strata) {
      if (sum.size() < stratum.count_poly.size()) sum.resize(stratum.count_poly.size(), 0);
      for (std::size_t i = 0; i < stratum.count_poly.size(); ++i) sum[i] += stratum.count_poly[i];
    }
    if (trimmed(sum) != trimmed(*geom.total_poly)) {
      fail(ErrorKind::TotalMismatch, "strata counts do not sum to total_poly");
    }
  }
}

bool effective_interior(const GeometryDescriptor& geom, const LineBundleClass& bundle) {
  check_bundle_keys(geom, bundle);
  return std::all_of(bundle.coeffs.begin(), bundle.coeffs.end(), [](const auto& kv) { return kv.second > 0; });
}

Invariants invariants(const GeometryDescriptor& geom, const LineBundleClass& bundle) {
  require_interior(geom, bundle);
  Invariants out;
  bool first = true;
  for (const auto& comp : geom.components) {
    const Rational& l = bundle.coeffs.at(comp.name);
    const Rational ratio = Rational(comp.kappa) / l;
    if (first || ratio > out.a) {
      out.a = ratio;
      out.b = 1;
      out.c = Rational(1) / l;
      first = false;
    } else if (ratio == out.a) {
      ++out.b;
      out.c /= l;
    }
  }
  return out;
}

Rational a_invariant(const GeometryDescriptor& geom, const LineBundleClass& bundle) {
  return invariants(geom, bundle).a;
}

int b_invariant(const GeometryDescriptor& geom, const LineBundleClass& bundle) {
  return invariants(geom, bundle).b;
}

Rational c_invariant(const GeometryDescriptor& geom, const LineBundleClass& bundle) {
  return invariants(geom, bundle).c;
}

LineBundleClass anticanonical(const GeometryDescriptor& geom) {
  LineBundleClass out;
  for (const auto& c : geom.components) out.coeffs[c.name] = Rational(c.kappa);
  return out;
}

LineBundleClass bundle_from_list(const GeometryDescriptor& geom, const std::vector<Rational>& coeffs) {
  if (coeffs.size() != geom.components.size()) {
    fail(ErrorKind::UnknownComponent, "expected " + std::to_string(geom.components.size()) +
                                          " bundle coefficients, got " + std::to_string(coeffs.size()));
  }
  LineBundleClass out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[geom.components[i].name] = coeffs[i];
  return out;
}

GeometryDescriptor p3_descriptor() {
  GeometryDescriptor g;
  g.dim = 3;
  g.components = {{"D", 4}};
  g.strata = {{{}, {0, 0, 0, 1}}, {{"D"}, {1, 1, 1}}};
  g.total_poly = std::vector<std::int64_t>{1, 1, 1, 1};
  return g;
}

GeometryDescriptor from_json(const nlohmann::json& doc) {
  GeometryDescriptor g;
  try {
    g.dim = doc.at("dim").get<int>();
    for (const auto& c : doc.at("components")) {
      g.components.push_back({c.at("name").get<std::string>(), c.at("kappa").get<std::int64_t>()});
    }
    for (const auto& s : doc.at("strata")) {
      g.strata.push_back({s.at("subset").get<std::vector<std::string>>(),
                          s.at("count_poly").get<std::vector<std::int64_t>>()});
    }
    if (doc.contains("total_poly") && !doc.at("total_poly").is_null()) {
      g.total_poly = doc.at("total_poly").get<std::vector<std::int64_t>>();
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidDescriptor, std::string("malformed geometry document: ") + e.what());
  }
  validate(g);
  return g;
}

nlohmann::json to_json(const GeometryDescriptor& geom) {
  nlohmann::json doc;
  doc["dim"] = geom.dim;
  doc["components"] = nlohmann::json::array();
  for (const auto& c : geom.components) doc["components"].push_back({{"name", c.name}, {"kappa", c.kappa}});
  doc["strata"] = nlohmann::json::array();
  for (const auto& s : geom.strata) doc["strata"].push_back({{"subset", s.subset}, {"count_poly", s.count_poly}});
  if (geom.total_poly) doc["total_poly"] = *geom.total_poly;
  return doc;
}

GeometryDescriptor load_descriptor(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open geometry file '" + path.string() + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidDescriptor, "'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return from_json(doc);
}

}  // namespace heightzeta::geometry
