#pragma once

// Wire formats. Rationals are rendered exactly ("a/b" or "a"); elements in
// CSV use the flag syntax num/exp:c so rows stay comma-free.

#include <ostream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "bsac/ball.hpp"
#include "bsac/constants.hpp"
#include "bsac/detour.hpp"
#include "bsac/bound_audit.hpp"
#include "bsac/metric.hpp"
#include "bsac/witness.hpp"

namespace bsac::io {

inline constexpr int kSchemaVersion = 1;

std::string rational(const mpq_class& q);

// {num: "<decimal>", exp: <int>}
nlohmann::json to_json(const PFraction& f);
// {f: {num, exp}, c}
nlohmann::json to_json(const GroupElement& g);
// {num, exp, c}: the flat triple used for configured generators
nlohmann::json to_triple(const GroupElement& g);

/// Accepts {num, exp} with num a decimal string or integer; normalizes.
PFraction fraction_from_json(const nlohmann::json& j, const BaseP& p);
/// Accepts {f: {num, exp}, c} or the flat {num, exp, c}.
GroupElement element_from_json(const nlohmann::json& j, const BaseP& p);

/// Parses "num/exp:c" or "num:c" as (num / p^exp, c). Throws
/// std::invalid_argument on malformed input.
GroupElement parse_element_flag(std::string_view text, const BaseP& p);

nlohmann::json to_json(const Word& w);
nlohmann::json to_json(const WordLength& len);
nlohmann::json to_json(const DistanceLowerBound& lb);
nlohmann::json to_json(const Constants& K);
nlohmann::json to_json(const GeneratingSet& gens);
nlohmann::json to_json(const SizeBoundReport& r);
nlohmann::json to_json(const LipschitzReport& r);
nlohmann::json to_json(const DetourRow& row);
nlohmann::json to_json(const WitnessReport& r, const GeneratingSet& gens);
nlohmann::json to_json(const GrowthCertificate& cert);

// CSV writers; fixed headers.
void write_ball_csv(std::ostream& out, const Ball& ball);                       // num,exp,c,length
void write_detour_csv(std::ostream& out, const std::vector<DetourRow>& rows);   // n,k,N,witness_g,witness_h
void write_word_length_csv(std::ostream& out, const GroupElement& g, const WordLength& len);
void write_constants_csv(std::ostream& out, const Constants& K);                // name,value
void write_size_bound_csv(std::ostream& out, const std::vector<SizeBoundReport>& reports);
void write_lipschitz_csv(std::ostream& out, const LipschitzReport& report);
void write_witness_csv(std::ostream& out, const WitnessReport& r);              // field,value

}  // namespace bsac::io
