#pragma once

#include "annotation/annotation.hpp"

#include <string>

namespace dca::annotation {

// All parsers are pure and total: any response either yields an annotation or
// raises ParseError (carrying the response for audit). They never abort.

// Extracts the 18 "Level k: [0/1]" / "Label X: [0/1]" flags, tolerant of
// bullet markers, bracket styles and case. The two Level-4 tactics are
// resolved independently (by parenthetical text, or by listing order when the
// response repeats a bare "Level 4").
DisputeTacticsAnnotation parse_dispute_tactics(const std::string& response);

// Score = last number after the concluding "the quality score of the
// discussion is" phrase. Out-of-range scores are rejected, not clamped.
QoAAnnotation parse_qoa(const std::string& response);

// Parses all 20 flag lines of the info/style prompt, then applies repair so
// the low/high pairs and the sentiment triple are one-hot and the
// no-uncertainty flag is consistent. Sets .repaired when anything changed.
InfoStyleAnnotation parse_info_style(const std::string& response);

// The repair step alone (idempotent: repair(repair(x)) == repair(x)).
InfoStyleAnnotation repair_info_style(const InfoStyleAnnotation& annotation);

} // namespace dca::annotation
