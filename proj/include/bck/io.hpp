#pragma once

#include "bck/algebra.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace bck {

/// Parse failure in a .bck document, addressed by 1-based line and column.
class ParseError : public FormatError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// The .bck text format:
///
///     bck 1
///     <order>
///     <row 0: x*0 ... x*(n-1)>
///     ...
///     # optional trailing comment lines
///
/// Parsing only checks the shape and ranges; use validate() for the axioms.
CayleyTable parse_bck(std::string_view text);
std::string emit_bck(const CayleyTable& table);

CayleyTable read_bck_file(const std::filesystem::path& path);
void write_bck_file(const std::filesystem::path& path, const CayleyTable& table);

/// Graphviz digraph of the covering relation, drawn bottom to top.
std::string emit_hasse_dot(const BckAlgebra& a);

/// Tab-separated manifest: index, file, raw degree, reduced degree, and the
/// commutative / bounded / positive-implicative flags of each class.
std::string catalog_manifest(std::span<const BckAlgebra> classes);

/// Writes one zero-padded `NNNN.bck` per class plus `manifest.tsv` into `dir`.
void write_catalog(const std::filesystem::path& dir, std::span<const BckAlgebra> classes);

} // namespace bck
