#include "rigidcay/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace rigidcay {

namespace {

std::atomic<long long> g_override{0};

long long env_capacity() {
  static const long long value = [] {
    const char* raw = std::getenv("RIGIDCAY_CAPACITY");
    if (raw == nullptr) return 0LL;
    try {
      long long parsed = std::stoll(raw);
      return parsed > 0 ? parsed : 0LL;
    } catch (...) {
      return 0LL;
    }
  }();
  return value;
}

long long resolve(long long fallback) {
  long long v = g_override.load(std::memory_order_relaxed);
  if (v > 0) return v;
  v = env_capacity();
  if (v > 0) return v;
  return fallback;
}

}  // namespace

long long element_capacity() { return resolve(1'000'000); }

long long family_capacity() { return resolve(10'000); }

int multiplication_table_cap() { return 10'000; }

void set_capacity_override(long long value) {
  g_override.store(value > 0 ? value : 0, std::memory_order_relaxed);
}

void clear_capacity_override() { g_override.store(0, std::memory_order_relaxed); }

}  // namespace rigidcay
