#pragma once

#include <cstddef>

namespace weylkit {

/// Worker threads used by the operations that parallelize internally
/// (antisymmetrization, strict reduced-word checks). Results never depend on
/// this value. Default 1.
void set_thread_count(std::size_t n) noexcept;
std::size_t thread_count() noexcept;

/// True when WEYLKIT_STRICT=1 is set in the environment.
bool strict_from_environment() noexcept;

}  // namespace weylkit
