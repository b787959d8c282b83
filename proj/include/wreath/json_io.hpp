#pragma once

#include <string>

#include <json.hpp>

#include "wreath/elliptic.hpp"
#include "wreath/group.hpp"
#include "wreath/hilbert.hpp"
#include "wreath/orbifold.hpp"
#include "wreath/series.hpp"

namespace wreath {

// Parse failures and schema violations throw InputError with the offending
// file or field named.

nlohmann::json read_json_file(const std::string& path);

// {"name": str, "order": k, "mul": [[int;k];k]}, identity at index 0
FiniteGroup group_from_json(const nlohmann::json& j);
FiniteGroup load_group_file(const std::string& path);

// {"name": str, "dim": d, "sectors": [{"class": str, "identity": bool,
//   "components": [{"label": str, "shift": int, "hodge": [[s,t,h],...]}]}]}
OrbifoldData orbifold_from_json(const nlohmann::json& j);
OrbifoldData load_orbifold_file(const std::string& path);
nlohmann::json orbifold_to_json(const OrbifoldData& o);

// {"name": str, "compact": bool, "hodge": [[s,t,h],...]}
SurfaceHodge surface_from_json(const nlohmann::json& j);
SurfaceHodge load_surface_file(const std::string& path);
nlohmann::json surface_to_json(const SurfaceHodge& X);

// {"name": str, "d": int, "qmax_in": int (optional), "coeffs": [[m,l2,c],...]}
GenusTable genus_from_json(const nlohmann::json& j);
GenusTable load_genus_file(const std::string& path);
nlohmann::json genus_to_json(const GenusTable& T);

// [{"q": int, "p": int (when bivariate), "terms": [[s2,t2,coeff],...]}, ...]
// Coefficients outside the int64 range are carried as decimal strings.
nlohmann::json series_to_json(const SeriesQ& s);
SeriesQ series_from_json(const nlohmann::json& j, int qmax, int pmax = 0);

nlohmann::json poly_to_json_terms(const BigradedPoly& p);

}  // namespace wreath
