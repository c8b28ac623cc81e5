#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

/// INI-like text:
///   [generators]  one "name weight" per line
///   [relations]   one "monomial = element" per line
///   [delta] [epsilon] [antipode]   one "name = expression" per line
/// '#' starts a comment. Without coalgebra sections the file describes a
/// plain presentation.
struct LoadedPresentation {
  Presentation presentation;
  std::optional<HopfPresentation> hopf;
};

LoadedPresentation parse_presentation_file(std::string_view text);
LoadedPresentation load_presentation_file(const std::string& path);

std::string emit_presentation_file(const Presentation& pres);
std::string emit_presentation_file(const HopfPresentation& H);

/// FNV-1a of the canonical emitted text.
std::uint64_t digest(const Presentation& pres);
std::uint64_t digest(const HopfPresentation& H);
std::string digest_hex(std::uint64_t d);

}  // namespace hopfkit
