#pragma once

#include <string>

#include <json.hpp>

#include "utq/circle_map.hpp"
#include "utq/fock.hpp"
#include "utq/fourier.hpp"
#include "utq/operator.hpp"

namespace utq {

using Json = nlohmann::ordered_json;

/// {"N": int, "real": bool, "coeffs": [[k, re, im], ...]}; a k = 0 entry is
/// what marks the loop as carrying the zero mode.
Json loop_to_json(const FourierLoop& f);
FourierLoop loop_from_json(const Json& j);

/// {"kind": "mobius"|"flow"|"zigzag"|"sampled", ...kind fields,
///  "dilatation_hint": optional}
Json map_to_json(const CircleMap& h);
CircleMap map_from_json(const Json& j);

/// {"n": N, "z": [[re, im], ...] row-major}
Json siegel_to_json(const Mat& Z);
Mat siegel_from_json(const Json& j);

/// {"n": N, "alpha": [[re, im]...], "beta": ..., "gamma": ...} row-major
Json sp_element_to_json(const SpAlgebraElement& X);
SpAlgebraElement sp_element_from_json(const Json& j);

/// CSV of complex entries "row,col,re,im" (rows/cols are mode indices for
/// OneParticleOperator exports, plain 0-based indices for raw matrices).
std::string operator_to_csv(const OneParticleOperator& op);
std::string matrix_to_csv(const Mat& m);
Mat matrix_from_csv(const std::string& text);

Json operator_metadata(const OneParticleOperator& op);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace utq
