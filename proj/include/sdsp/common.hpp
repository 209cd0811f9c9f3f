#ifndef SDSP_COMMON_HPP
#define SDSP_COMMON_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sdsp {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline constexpr const char* kVersion = "0.1.0";

enum class Family { S, Sigma };

// Cell-counting mode for two_count/zero_count: a full-matrix scan counts an
// off-diagonal cell twice (once per mirror position), an upper-triangle scan
// counts it once. The choice changes the tie structure of the term orders.
enum class TwoCountMode { FullMatrix, UpperTriangle };

inline const char* family_name(Family f) { return f == Family::S ? "S" : "Sigma"; }

// Thrown when an enumeration or basis computation exceeds a configured limit.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a computation contradicts a proven statement it certifies.
class FalsificationError : public std::runtime_error {
 public:
  explicit FalsificationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input or violated precondition.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceLimits {
  std::uint64_t max_points = 10'000'000;
  std::size_t max_basis = 100'000;
  std::size_t max_pairs = 4'000'000;
  double time_budget_seconds = 600.0;
};

}  // namespace sdsp

#endif
