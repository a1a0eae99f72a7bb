#pragma once

#include <stdexcept>
#include <string>

namespace scg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad cost function, partition, outcome or file.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A coalition whose size admits no envy-free, credible, Pareto-optimal
/// agreement (more players than resources and not a multiple of them).
class NoQualifiedAgreement : public Error {
 public:
  NoQualifiedAgreement(int size, int m)
      : Error("coalition of size " + std::to_string(size) + " has no qualified agreement with " +
              std::to_string(m) + " resources"),
        size_(size),
        m_(m) {}

  int size() const noexcept { return size_; }
  int resources() const noexcept { return m_; }

 private:
  int size_;
  int m_;
};

}  // namespace scg
