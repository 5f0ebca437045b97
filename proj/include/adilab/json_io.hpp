#pragma once

#include <string>

#include <json.hpp>

#include "adilab/indexcalc.hpp"
#include "adilab/prec.hpp"
#include "adilab/witness.hpp"

namespace adi {

// Wire layout: {"m": int, "terms": [{"lambda": [l0,l1,l2],
//               "u_poly": [{"exps": [e0..em], "re": "...", "im": "..."}]}]}
// Coefficient parts are decimal strings (plain numbers also accepted on input).
ADEPoly adepoly_from_json(const nlohmann::json& j, const PrecisionConfig& ctx);
nlohmann::json adepoly_to_json(const ADEPoly& p, long digits = 0);

nlohmann::json upoly_to_json(const UPoly& u, long digits = 0);
nlohmann::json table_to_json(const CoeffTable& t, long digits = 0);
nlohmann::json decomposition_to_json(const ADEPoly& p, int ell, long digits = 0);

nlohmann::json dominance_to_json(const DominanceReport& r, long digits = 0);
nlohmann::json blowup_to_json(const BlowupReport& r, long digits = 0);
nlohmann::json independence_to_json(const IndependenceReport& r, long digits = 0);

// Header y,re_0,im_0,...,re_m,im_m; one row per sample, full-precision decimals.
std::string trajectory_csv(const Trajectory& traj, long digits = 0);

ADEPoly load_adepoly(const std::string& path, const PrecisionConfig& ctx);
// Writes through a temp file in the same directory, then renames into place.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace adi
