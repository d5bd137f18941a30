#pragma once

// Boundary-stratification descriptors of an equivariant compactification and
// the position invariants a(L), b(L), c(L) of a line bundle class.
//
// The effective cone is modelled as simplicial on the boundary components
// D_alpha, so b(L) is a maximizer count. Descriptors are data: strata point
// counts are supplied, never derived.

#include "heightzeta/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace heightzeta::geometry {

struct BoundaryComponent {
  std::string name;
  std::int64_t kappa = 0;  // coefficient of D_alpha in -K_X
};

/// #D^0_A(F_p) as a polynomial in p; count_poly[i] multiplies p^i.
struct StratumCount {
  std::vector<std::string> subset;
  std::vector<std::int64_t> count_poly;
};

struct GeometryDescriptor {
  int dim = 0;
  std::vector<BoundaryComponent> components;
  std::vector<StratumCount> strata;
  std::optional<std::vector<std::int64_t>> total_poly;

  const BoundaryComponent* find(const std::string& name) const;
};

struct LineBundleClass {
  std::map<std::string, Rational> coeffs;
};

struct Invariants {
  Rational a;
  int b = 0;
  Rational c;
};

/// Throws Error with MissingOpenStratum, KappaTooSmall, UnknownComponent,
/// TotalMismatch or InvalidDescriptor.
void validate(const GeometryDescriptor& geom);

bool effective_interior(const GeometryDescriptor& geom, const LineBundleClass& bundle);

Rational a_invariant(const GeometryDescriptor& geom, const LineBundleClass& bundle);
int b_invariant(const GeometryDescriptor& geom, const LineBundleClass& bundle);
Rational c_invariant(const GeometryDescriptor& geom, const LineBundleClass& bundle);
Invariants invariants(const GeometryDescriptor& geom, const LineBundleClass& bundle);

/// The class of -K_X, i.e. l_alpha = kappa_alpha.
LineBundleClass anticanonical(const GeometryDescriptor& geom);

/// Bundle from coefficients listed in component order.
LineBundleClass bundle_from_list(const GeometryDescriptor& geom, const std::vector<Rational>& coeffs);

std::int64_t evaluate_poly(const std::vector<std::int64_t>& poly, std::int64_t p);

/// Built-in descriptor for P^3 with its single hyperplane boundary divisor.
GeometryDescriptor p3_descriptor();

GeometryDescriptor from_json(const nlohmann::json& doc);
nlohmann::json to_json(const GeometryDescriptor& geom);
GeometryDescriptor load_descriptor(const std::filesystem::path& path);

}  // namespace heightzeta::geometry
