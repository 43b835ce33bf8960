#ifndef COQUIVER_IO_HPP
#define COQUIVER_IO_HPP

#include <optional>
#include <string>

#include "coquiver/quiver.hpp"

namespace coquiver {

// Text formats; the grammar is documented in docs/formats.md.

/// Parses a coalgebra file. Throws ParseError on malformed text and
/// AxiomError (naming the identity and basis element) when the structure
/// constants do not define a coalgebra. `field` overrides the file's field.
Coalgebra parse_coalgebra(const std::string& text, std::optional<Field> field = {});
/// Normalized serialization: parse(emit(c)) reproduces c exactly.
std::string emit_coalgebra(const Coalgebra& c);

Quiver parse_quiver(const std::string& text);
std::string emit_quiver(const Quiver& q);

std::string read_file(const std::string& path);

/// A fixture name or a path to a coalgebra file.
Coalgebra load_coalgebra(const std::string& spec, std::optional<Field> field = {});
/// A quiver fixture name or a path to a quiver file.
Quiver load_quiver(const std::string& spec);

}  // namespace coquiver

#endif
