#pragma once

// Text formats used by the command-line tool.
//
// Table document ("gyro 1"):
//
//   # comment lines start with '#'; blank lines are ignored
//   gyro 1
//   <n>
//   <n rows of n whitespace-separated entries in [0, n)>
//   labels <n names>          (optional)
//
// Gyration document: one line "a b: i0 i1 ... i(n-1)" per ordered pair,
// giving the images of gyr[a,b].
//
// Set list: one "{a,b,c}" per line in ascending order, a trailing '*' marks
// a nondegenerate set.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gyro/cayley_table.hpp"
#include "gyro/gyrogroup.hpp"
#include "gyro/subset.hpp"

namespace gyro::io {

enum class ParseErrorKind { BadMagic, BadDimensions, NonIntegerEntry, EntryOutOfRange, BadSyntax };

std::string_view parse_error_name(ParseErrorKind kind);

/// Parse failure at a 1-based line and column (column 0 when not applicable).
class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& detail);
    ParseErrorKind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
};

struct TableDocument {
    CayleyTable table;
    std::vector<std::string> labels;
};

/// Parses a table document. Does not check any axiom.
TableDocument parse_table(std::string_view text);

/// Canonical text: single spaces, '\n' after every line, no trailing blanks.
std::string serialize_table(const CayleyTable& table, const std::vector<std::string>& labels = {});

std::string serialize_gyrations(const FiniteGyrogroup& g);
/// Returns the n*n permutations indexed a*n + b; every pair must appear once.
std::vector<Permutation> parse_gyrations(std::string_view text, std::size_t order);

/// A permutation file: n whitespace-separated images (comments allowed).
std::vector<Element> parse_element_list(std::string_view text);

std::string serialize_set_list(const std::vector<ElementSubset>& sets,
                               const std::vector<bool>& marked = {});
std::vector<ElementSubset> parse_set_list(std::string_view text, std::size_t order,
                                          std::vector<bool>* marked = nullptr);

/// "0,1,5" -> subset of the given order.
ElementSubset parse_subset_arg(std::string_view text, std::size_t order);

std::string read_file(const std::filesystem::path& path);

}  // namespace gyro::io
