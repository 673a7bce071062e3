#include "weylkit/config.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string_view>

namespace weylkit {

namespace {
std::atomic<std::size_t> g_threads{1};
}

void set_thread_count(std::size_t n) noexcept { g_threads.store(std::max<std::size_t>(n, 1)); }

std::size_t thread_count() noexcept { return g_threads.load(); }

bool strict_from_environment() noexcept {
  const char* v = std::getenv("WEYLKIT_STRICT");
  return v != nullptr && std::string_view(v) == "1";
}

}  // namespace weylkit
