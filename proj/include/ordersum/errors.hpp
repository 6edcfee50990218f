#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ordersum {

// Raised when an enumeration or brute-force request exceeds its configured cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(const std::string& what, std::uint64_t n)
      : std::runtime_error(what), n_(n) {}

  std::uint64_t n() const { return n_; }

 private:
  std::uint64_t n_;
};

}  // namespace ordersum
