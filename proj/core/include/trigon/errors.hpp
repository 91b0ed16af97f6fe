#pragma once

#include <stdexcept>
#include <string>

namespace trigon {

enum class Errc {
  invalid_parameter,
  invalid_column,
  invalid_crossing,
  parse_error,
  precondition_failed,
  precision_insufficient,
  construction_failed,
  invalid_arrangement,
  out_of_domain,
  no_data,
};

const char* errc_name(Errc code);

// All library failures surface as Error; code() tells callers which
// contract was violated without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

  // Parse failures carry the 1-based input line that triggered them.
  static Error parse(int line, const std::string& message) {
    Error e(Errc::parse_error,
            "line " + std::to_string(line) + ": " + message);
    e.line_ = line;
    return e;
  }

  int line() const { return line_; }  // 0 when not a parse error

 private:
  Errc code_;
  int line_ = 0;
};

}  // namespace trigon
