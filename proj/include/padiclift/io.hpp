#ifndef PADICLIFT_IO_HPP
#define PADICLIFT_IO_HPP

// JSON and TSV forms of curves, points, divisors and attack transcripts. Every
// number is written as a decimal string; on input, JSON integers are accepted
// as well.

#include <optional>
#include <string>

#include "json.hpp"

#include "padiclift/curve.hpp"
#include "padiclift/ecdlp.hpp"
#include "padiclift/hec.hpp"

namespace padiclift::io {

using Json = nlohmann::ordered_json;

/// A curve file: {"a": .., "b": ..} for y^2 = x^3 + ax + b, or
/// {"a1": .., "a2": .., "a3": .., "a4": .., "a6": ..}, which is moved to short
/// form together with every point read against it.
struct CurveInput {
  ShortWeierstrass curve;
  std::optional<ShortForm> transform;
};

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Rational rational_field(const Json& j, const char* key);
CurveInput curve_from_json(const Json& j);
/// {"x": .., "y": ..}, {"Z": .., "X": .., "Y": ..} or {"infinity": true};
/// kOffCurve when the point is not on the curve.
ProjPointQ point_from_json(const Json& j, const CurveInput& curve);
QHyperelliptic hyperelliptic_from_json(const Json& j);
QDivisor divisor_from_json(const Json& j);

Json to_json(const ShortWeierstrass& curve);
Json to_json(const ProjPointQ& P);
Json to_json(const PointModPk& P);
Json to_json(const AttackTranscript& tr);
Json to_json(const GeneralizedReport& rep);

/// Header plus one line per row: k, log of tP, l1, log of Q - hbar P, l2, n, h.
std::string table_tsv(const AttackTranscript& tr);

/// Canonical text: two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

}  // namespace padiclift::io

#endif  // PADICLIFT_IO_HPP
