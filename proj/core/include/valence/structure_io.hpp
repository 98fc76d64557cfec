#ifndef VALENCE_STRUCTURE_IO_HPP
#define VALENCE_STRUCTURE_IO_HPP

#include <iosfwd>
#include <string>

#include "valence/logic.hpp"

namespace valence {
namespace logic {

/// Structure text format (whitespace-separated tokens):
///
///   structure
///   domain <elem> <elem> ...
///   constant <symbol> <elem>
///   function <symbol> <arity> <elem> x size^arity   (row-major, first
///                                                    argument most significant)
///   relation <symbol> <arity> <elem-tuple> ...
///   end
///
/// The language is inferred from the declarations.
FiniteStructure read_structure(std::istream& in);
FiniteStructure read_structure_file(const std::string& path);
void write_structure(std::ostream& out, const FiniteStructure& m);

/// Builtin descriptors for the CLI and tests: "field:F_5" (pure field
/// structure) and "trivialvf:F_7" (trivial valued field); anything else
/// is read as a file path.
FiniteStructure structure_from_spec(const std::string& spec);

}  // namespace logic
}  // namespace valence

#endif
