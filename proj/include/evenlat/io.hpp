#pragma once
// JSON conversion for matrices, Gram files, curve configurations and
// involutions. Integers go out as JSON numbers, non-integral rationals as
// "p/q" strings.

#include "evenlat/curveconfig.hpp"
#include "evenlat/lattice.hpp"
#include "evenlat/matrix.hpp"

#include <json.hpp>

#include <string>

namespace evenlat::io {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

/// JSON number when it fits in 64 bits, decimal string otherwise.
Json to_json(const Integer& z);
/// Integer when the denominator is 1, "p/q" otherwise.
Json to_json(const Rational& r);
Json to_json(const IntVec& v);
Json to_json(const RatVec& v);
Json to_json(const IntMat& m);
Json to_json(const RatMat& m);

/// Accepts JSON integers and integer strings.
Integer integer_from_json(const Json& j);
/// Accepts JSON integers and "p" / "p/q" strings.
Rational rational_from_json(const Json& j);
IntMat int_matrix_from_json(const Json& j, const std::string& what = "matrix");
RatMat rat_matrix_from_json(const Json& j, const std::string& what = "matrix");

/// Whole file as a string; ParseError when unreadable.
std::string read_file(const std::string& path);
Json parse_json(const std::string& text);

struct GramFile {
    IntMat gram;
    std::string name;
};

/// {"gram": [[...]], "name": "..."}; rejects non-square and asymmetric
/// matrices, naming the offending (row, col) 1-based.
GramFile parse_gram_file(const std::string& text);
Json gram_file_json(const GramFile& g);

/// {"curves": [{"label": str, "self": int}], "mult": [[label, label, int]]}
CurveConfig parse_config(const std::string& text);
Json config_json(const CurveConfig& c);

/// {"perm": [ints]} with 1-based images.
InvolutionAction parse_involution(const std::string& text);
Json involution_json(const InvolutionAction& a);

/// A lattice from a Gram file path, or from a sum of standard names such
/// as "U+U(2)+<-4>^2".
Lattice lattice_from_spec(const std::string& spec);

/// An integer matrix from a file or inline JSON: [[...]] or {"gens": [[...]]}.
IntMat matrix_from_spec(const std::string& spec, const std::string& key = "gens");

/// {"branch_points": {label: k}, "sheet_parity": [{"curves": [a, b], "parity": [0, 1, ...]}]}
CoverStep parse_cover_step(const std::string& text);

} // namespace evenlat::io
