#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gralg {

/// Exact integer used for every count and group order.
using Count = boost::multiprecision::cpp_int;

/// Default element ceiling for brute-force enumeration.
inline constexpr std::uint64_t kDefaultCeiling = std::uint64_t{1} << 20;

/// Rejected input: violates a documented precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force routine was asked to enumerate more elements than allowed.
class CeilingExceeded : public std::runtime_error {
 public:
  CeilingExceeded(const std::string& what, std::uint64_t size, std::uint64_t ceiling)
      : std::runtime_error(what + ": " + std::to_string(size) + " elements exceeds ceiling " +
                           std::to_string(ceiling)),
        size_(size),
        ceiling_(ceiling) {}
  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t ceiling() const noexcept { return ceiling_; }

 private:
  std::uint64_t size_;
  std::uint64_t ceiling_;
};

/// Parameters outside the range a closed-form statement covers.
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline Count pow2(unsigned e) { return Count{1} << e; }

inline std::string to_string(const Count& c) { return c.str(); }

/// Narrow an exact count; throws if it does not fit.
inline std::uint64_t to_u64(const Count& c) {
  if (c < 0 || c > Count{UINT64_MAX}) throw std::overflow_error("count does not fit in 64 bits: " + c.str());
  return c.convert_to<std::uint64_t>();
}

}  // namespace gralg
