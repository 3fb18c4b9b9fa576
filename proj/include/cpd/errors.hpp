#pragma once

#include <stdexcept>
#include <string>

namespace cpd {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction / input problems.
struct ValidationError : Error { using Error::Error; };
struct UnknownReference : Error { using Error::Error; };

// Set-level preconditions.
struct CodomainMismatch : Error { using Error::Error; };
struct NotCommuting : Error { using Error::Error; };
struct NotMono : Error { using Error::Error; };

// Path and cell typing.
struct NotComposable : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct UnknownGenerator : Error { using Error::Error; };
struct IllTyped : Error { using Error::Error; };
struct IllTypedVComp : IllTyped { using IllTyped::IllTyped; };
struct IllTypedHComp : IllTyped { using IllTyped::IllTyped; };

// Fragment and scope restrictions.
struct NotEHClass : Error { using Error::Error; };
struct NotInImage : Error { using Error::Error; };
struct DegreeTooSmall : Error { using Error::Error; };

struct ParseError : Error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ":" + std::to_string(column_) +
              ": " + msg),
        line(line_),
        column(column_) {}
};

}  // namespace cpd
