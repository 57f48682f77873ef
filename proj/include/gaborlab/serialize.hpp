#pragma once

// JSON and CSV output. Doubles are always written with 17 significant
// digits so that identical runs produce identical bytes.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "gaborlab/gabor_matrix.hpp"

namespace gaborlab {

using Json = nlohmann::ordered_json;

// Pretty-printed JSON (2-space indent). Non-finite numbers become the
// strings "inf", "-inf" and "nan".
std::string to_json_text(const Json& j);

std::string format_double(double x);

// Columns mu_k, mu_l, h; mu_k and mu_l are signed lattice indices.
std::string profile_csv(const DecayProfile& h);
// Columns row, col, re, im.
std::string matrix_csv(const CMatrix& m);

// Creates parent directories as needed.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace gaborlab
