#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace osps {

// Carriers are index-addressed; subsets are bitmasks over carrier indices.
using Mask = std::uint64_t;

inline constexpr int kMaxCarrier = 64;
// Operations that enumerate all subsets refuse carriers above this.
inline constexpr int kEnumCap = 20;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr Mask full_mask(int n) { return n == 0 ? 0 : (~Mask{0} >> (kMaxCarrier - n)); }
constexpr bool has_bit(Mask m, int i) { return (m >> i) & 1; }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    int i = std::countr_zero(m);
    f(i);
    m &= m - 1;
  }
}

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw Error(code, what);
}

inline void require_enum_cap(std::size_t n, const std::string& where) {
  if (n > kEnumCap)
    fail("E-SIZE-CAP", where + ": carrier of size " + std::to_string(n) +
                           " exceeds enumeration cap " + std::to_string(kEnumCap));
}

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;  // empty when passed
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  void add(std::string name, bool passed, std::string witness = "") {
    checks.push_back({std::move(name), passed, std::move(witness)});
  }
};

// Renders a mask as "{a,b,c}" using the given carrier names.
inline std::string set_to_string(Mask m, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for_each_bit(m, [&](int i) {
    if (!first) out += ",";
    out += names[static_cast<std::size_t>(i)];
    first = false;
  });
  return out + "}";
}

}  // namespace osps
