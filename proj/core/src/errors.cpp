#include "tauhh/errors.hpp"

namespace tauhh {

namespace {

std::string located(const std::string& what, std::size_t line,
                    std::size_t column) {
  if (line == 0) return what;
  std::string prefix = "line " + std::to_string(line);
  if (column != 0) prefix += ", column " + std::to_string(column);
  return prefix + ": " + what;
}

}  // namespace

PresentationError::PresentationError(const std::string& what, std::size_t line,
                                     std::size_t column)
    : Error(located(what, line, column)), line_(line), column_(column) {}

}  // namespace tauhh
