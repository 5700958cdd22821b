#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qba/opcoeffs.hpp"
#include "qba/ring.hpp"
#include "qba/setfam.hpp"

namespace qba {

// JSON forms. Sets are sorted arrays of 1-based indices.
//   RingElem: {"n": 2, "basis": "X", "support": [[1], [1, 2]]}
//   OpCoeffs: {"n": 2, "basis": "XY", "terms": [[[1, 2], [1]], ...]}
//   Family:   {"n": 3, "members": [[[1, 2], [2, 3]], ...]}   (plain part, tilde part)

nlohmann::json to_json(const RingElem& f);
nlohmann::json to_json(const OpCoeffs& f);
nlohmann::json to_json(const Family& a);
RingElem ring_from_json(const nlohmann::json& j);
OpCoeffs op_from_json(const nlohmann::json& j);
Family family_from_json(const nlohmann::json& j);

/// Text form such as "x{1} + x{1,2}"; zero prints as "0".
std::string to_text(const RingElem& f);
/// Text form such as "x{1,2}y{1} + x{1,2}y{1,2}"; both factors are always
/// written, so the identity in XY is "x{}y{}". Zero prints as "0".
std::string to_text(const OpCoeffs& f);

}  // namespace qba
