#pragma once

#include <stdexcept>
#include <string>

namespace gale {

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad vertex names, empty facets, unparsable files.
/// Line and column are 1-based; 0 means "not from a file".
class InputError : public Error
{
public:
  InputError(const std::string& what, int line = 0, int column = 0)
    : Error(line > 0 ? std::to_string(line) + ":" + std::to_string(column) + ": " + what : what),
      line_(line), column_(column)
  {
  }

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Vertex capacity exceeded, or a solver table cap hit.
class CapacityError : public Error
{
public:
  using Error::Error;
};

/// A face that is not legal in the position it was played in.
class IllegalMove : public Error
{
public:
  using Error::Error;
};

}  // namespace gale
