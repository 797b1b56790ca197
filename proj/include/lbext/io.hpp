#pragma once

// Text file formats (JSON). Indices in files are 1-based; output is canonical:
// fixed key order, numerically ordered sparse keys, zero entries omitted and
// scalars in canonical form, so equal values print byte-identically.

#include <filesystem>
#include <string>
#include <string_view>

#include "lbext/flag.hpp"

namespace lbext {

struct NamedBialgebra {
  std::string name;
  LieBialgebra g;
};

/// {"name", "basis", "bracket": {"i,j": [{"k","c"}]}, "cobracket": {"i": [{"j","k","c"}]}}
/// Bracket keys must have i < j.
std::string write_bialgebra(const std::string& name, const LieBialgebra& g);
NamedBialgebra parse_bialgebra(std::string_view text);

/// "base" is a corpus name, a path (relative to base_dir) or an inline
/// bialgebra object; "v_basis" and the seven component maps follow. Absent
/// components are zero.
std::string write_datum(const std::string& base_name, const BiExtendingDatum& d);
BiExtendingDatum parse_datum(std::string_view text, const std::filesystem::path& base_dir = {});

/// {"base", "alpha": [..], "D": [[row]..], "A": [..], "B": {"i,j": c}} with i < j.
std::string write_flag(const std::string& base_name, const FlagDatum& fd);
FlagDatum parse_flag(std::string_view text, const std::filesystem::path& base_dir = {});

/// Reads the whole file; throws Error when it cannot be opened.
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

/// A corpus name or a bialgebra file path.
NamedBialgebra load_bialgebra(const std::string& name_or_path, const std::filesystem::path& base_dir = {});

/// Comma-separated scalars, e.g. "0,1,-2i".
std::vector<Scalar> parse_scalar_list(std::string_view text);
std::string format_vector(std::span<const Scalar> v);

}  // namespace lbext
