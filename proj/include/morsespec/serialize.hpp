#pragma once

#include "json.hpp"
#include "morsespec/continuation.hpp"
#include "morsespec/homology.hpp"
#include "morsespec/morse.hpp"
#include "morsespec/spectral.hpp"

namespace morsespec {

using Json = nlohmann::json;

Json to_json(const SpectralReport& r);
Json to_json(const ContinuationReport& r);
Json to_json(const HomologyClass& x);

/// Generators per grade with values and boundary columns (as cell ids).
Json to_json(const MorseComplex& mc);

}  // namespace morsespec
