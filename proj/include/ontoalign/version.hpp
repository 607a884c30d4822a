#pragma once

namespace ontoalign {

inline constexpr const char* kVersion = "0.1.0";

} // namespace ontoalign
