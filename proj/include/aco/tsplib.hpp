#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>

#include "aco/instance.hpp"

namespace aco::tsplib {

/// Structural problem with a TSPLIB document (missing sections, bad counts).
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Well-formed document using a feature outside the EUC_2D subset.
class UnsupportedFormatError : public ParseError {
  public:
    using ParseError::ParseError;
};

/// Parse a TSPLIB EUC_2D document. Node ids are remapped to 0-based
/// contiguous indices in file order; both "KEY: v" and "KEY : v" header
/// spellings are accepted, unknown keys are skipped with a warning on
/// stderr, and a trailing EOF line is optional.
TspInstance parse(std::istream& in);
TspInstance parse(const std::string& text);

TspInstance load_file(const std::filesystem::path& path);

/// Render an instance as a TSPLIB EUC_2D document with 1-based node ids.
/// Coordinates carry enough digits that parse(write(x)) restores them
/// exactly.
std::string write(const TspInstance& inst);

void save_file(const TspInstance& inst, const std::filesystem::path& path);

} // namespace aco::tsplib
