#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& what = "matrix is singular")
      : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what = "dimension mismatch")
      : std::runtime_error(what) {}
};

struct DimensionTooLarge : std::runtime_error {
  explicit DimensionTooLarge(const std::string& what = "dimension too large")
      : std::runtime_error(what) {}
};

struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what = "object exceeds configured cap")
      : std::runtime_error(what) {}
};

struct NotUnimodular : std::runtime_error {
  explicit NotUnimodular(const std::string& what = "matrix is not unimodular")
      : std::runtime_error(what) {}
};

struct NotGenerating : std::runtime_error {
  explicit NotGenerating(const std::string& what =
                             "generators do not generate the full group")
      : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cayley
