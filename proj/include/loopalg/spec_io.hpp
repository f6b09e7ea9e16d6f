#ifndef LOOPALG_SPEC_IO_HPP
#define LOOPALG_SPEC_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "loopalg/module.hpp"

namespace loopalg {

/// Parses the line-oriented module spec format ('#' starts a comment):
///   mode borel|loop
///   factor spin2=<int> a=<rational>
///   shift c=<rational>
///   explicit dim=<int> K=<int>
///   psi <rational> ...
///   mat kind=h|xp|xm k=<int> <row> <col> <rational>
/// Explicit modules are validated against the defining relations up to
/// K at load.  Errors carry line numbers.
Module parse_module_spec(std::istream& in, std::optional<Mode> mode_override = std::nullopt);

Module load_module_spec(const std::string& path,
                        std::optional<Mode> mode_override = std::nullopt);

}  // namespace loopalg

#endif
