#pragma once

#include <optional>
#include <string>

#include "tauhh/algebra.hpp"
#include "tauhh/bimodule.hpp"

namespace tauhh {

struct PresentationFile {
  AlgebraPresentation presentation;
  /// Present when the file has a bimodule block.
  std::optional<Bimodule> bimodule;
};

/// Parses the line-oriented presentation format:
///
///   field Q | field GF <prime>
///   vertex <ident>
///   arrow <ident> <source> <target>
///   relation <lincomb>          e.g. "a*d - c*b", "-1/2*y*x + x*y"
///   cap <positive integer>
///   bimodule dim <y> <x> <d>
///   bimodule act left|right <arrow> <from-y> <from-x> <rows>
///
/// '#' starts a comment. "a*b" traverses b first. Matrix rows are comma
/// lists separated by ';'. Throws PresentationError with line and column.
PresentationFile parse_presentation(const std::string& text);

/// Reads a file and parses it; an unreadable file is a PresentationError.
PresentationFile load_presentation(const std::string& path);

/// Canonical text that parses back to the same presentation.
std::string emit_presentation(const PresentationFile& file);

}  // namespace tauhh
