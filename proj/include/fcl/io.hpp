#ifndef FCL_IO_HPP
#define FCL_IO_HPP

#include "fcl/curve.hpp"
#include "fcl/grid.hpp"
#include "fcl/ledger.hpp"
#include "fcl/level_calculus.hpp"
#include "fcl/pointpush.hpp"
#include "fcl/sequence.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fcl {

using Json = nlohmann::ordered_json;

inline constexpr int kCurveFormat = 1;

// {"format": 1, "vertices": [["p/q","r/s"], ...], "offsets": [[dx,dy], ...]}
Json curve_to_json(const PLCurve& curve);
PLCurve curve_from_json(const Json& j);  // ValidationError on malformed input

PLCurve read_curve_file(const std::string& path);
void write_curve_file(const std::string& path, const PLCurve& curve);

// A list of curves, used for geodesics: {"format": 1, "curves": [curve, ...]}.
Json curves_to_json(const std::vector<PLCurve>& curves);
std::vector<PLCurve> curves_from_json(const Json& j);

Json to_json(const IntersectionList& list);
IntersectionList intersection_list_from_json(const Json& j);

Json to_json(const CrossingProfile& profile);
CrossingProfile profile_from_json(const Json& j);

Json to_json(const LevelSet& set);
LevelSet level_set_from_json(const Json& j);

Json to_json(const PushState& state);
PushState push_state_from_json(const Json& j);

Json to_json(const DistanceCertificate& cert);
DistanceCertificate certificate_from_json(const Json& j);

Json to_json(const std::vector<LedgerRow>& rows);

Json to_json(const std::vector<TraceRow>& rows);

// Comma separated integers, e.g. "-3,-2,-2,-3". ValidationError on bad text.
std::vector<std::int64_t> parse_int_list(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fcl

#endif  // FCL_IO_HPP
