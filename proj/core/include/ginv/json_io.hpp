#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "ginv/cline.hpp"
#include "ginv/drazin.hpp"
#include "ginv/matrix.hpp"
#include "ginv/report.hpp"
#include "ginv/spectral.hpp"

namespace ginv {

using Json = nlohmann::json;

using AnyMatrix = std::variant<Matrix<GaussianRational>, Matrix<Complex>>;
using AnyQuadruple = std::variant<ClineQuadruple<GaussianRational>, ClineQuadruple<Complex>>;

// Parse with a "line L, column C" diagnostic wrapped into IoError on syntax
// errors.
Json parse_text(const std::string& text);
Json load_file(const std::string& path);
void save_file(const std::string& path, const Json& j);

// Matrix JSON: {"n": int, "backend": "exact"|"f64", "entries": [[{"re", "im"}]]}
// with string "p/q" components in exact mode and plain numbers in f64 mode.
// Parsing is strict about the backend: a string component in an f64 matrix or
// a numeric component in an exact matrix is rejected. Unknown extra keys are
// ignored, so enriched results (a matrix plus an "index") reparse as matrices.
Json to_json(const Matrix<GaussianRational>& m);
Json to_json(const Matrix<Complex>& m);
AnyMatrix matrix_from_json(const Json& j);

// Quadruple JSON: {"family", "a", "b", "c", "d"}; "d" may be omitted for the
// classical and lian-zeng families, where it defaults to a. All four must
// share one backend and one dimension.
Json to_json(const ClineQuadruple<GaussianRational>& q);
Json to_json(const ClineQuadruple<Complex>& q);
AnyQuadruple quadruple_from_json(const Json& j);

// {"overall": bool, "conditions": [{"name", "residual", "holds"}]}; entries
// that were skipped rather than evaluated carry "skipped": true.
Json to_json(const HypothesisReport& rep);

Json to_json(Complex z);

template <typename T>
Json to_json(const DrazinResult<T>& r) {
    Json j = to_json(r.inverse);
    j["index"] = r.index;
    j["projector"] = to_json(r.projector);
    j["core"] = to_json(r.core);
    j["nilpotent"] = to_json(r.nilpotent);
    return j;
}

// Serialization helpers shared by the CLI and the suite. nlohmann's default
// object keeps keys sorted, so dumps are deterministic.
std::string dump(const Json& j);

}  // namespace ginv
