#pragma once

#include "rrhash/cca.hpp"

#include <string>
#include <string_view>

namespace rrhash {

/// Versioned text format ("rrhash-model 1"). Numbers are written with 17
/// significant digits so a load reproduces the model exactly and a refit on
/// the same corpus writes an identical file.
std::string model_to_string(const CcaModel& model);
CcaModel model_from_string(std::string_view text);

void save_model(const CcaModel& model, const std::string& path);
/// Throws ModelError on unreadable or malformed files.
CcaModel load_model(const std::string& path);

}  // namespace rrhash
