#pragma once

#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace scholarank {

// Base of every error raised by the library. The CLI maps these to exit 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed input record; line is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ReferenceError : public Error {
 public:
  using Error::Error;
};

class DuplicateDoiError : public Error {
 public:
  DuplicateDoiError(const std::string& doi, std::size_t first_line, std::size_t second_line)
      : Error("duplicate DOI '" + doi + "' on lines " + std::to_string(first_line) + " and " +
              std::to_string(second_line)),
        doi_(doi),
        first_line_(first_line),
        second_line_(second_line) {}

  const std::string& doi() const noexcept { return doi_; }
  std::size_t first_line() const noexcept { return first_line_; }
  std::size_t second_line() const noexcept { return second_line_; }

 private:
  std::string doi_;
  std::size_t first_line_;
  std::size_t second_line_;
};

class UnknownAuthor : public Error {
 public:
  explicit UnknownAuthor(const std::string& key) : Error("unknown author '" + key + "'") {}
};

// Power iteration did not reach the L1 tolerance within the iteration cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(double theta, std::size_t iterations, double residual)
      : Error(describe(theta, iterations, residual)),
        theta_(theta),
        iterations_(iterations),
        residual_(residual) {}

  double theta() const noexcept { return theta_; }
  std::size_t iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  static std::string describe(double theta, std::size_t iterations, double residual) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "no convergence at theta=%g after %zu iterations (L1 residual %.3g)", theta,
                  iterations, residual);
    return buf;
  }


 private:
  double theta_;
  std::size_t iterations_;
  double residual_;
};

// Citation lookup failed after the retry budget was spent (or on a
// non-retryable HTTP status).
class FetchError : public Error {
 public:
  FetchError(const std::string& what, int status, int attempts)
      : Error(what), status_(status), attempts_(attempts) {}

  int status() const noexcept { return status_; }
  int attempts() const noexcept { return attempts_; }

 private:
  int status_;
  int attempts_;
};

}  // namespace scholarank
