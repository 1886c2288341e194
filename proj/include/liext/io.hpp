#pragma once

#include <string>

#include "liext/extending.hpp"
#include "liext/lie_algebra.hpp"
#include "liext/twder.hpp"

namespace liext {

/// Line-oriented text formats. All parsers take whole-file contents, treat
/// `#` as a to-end-of-line comment, skip blank lines, and report failures as
/// ParseError carrying the 1-based line number. Serializers emit a canonical
/// form: fixed header order, entry lines sorted by basis index, single
/// spaces, trailing newline — so equal values serialize to identical bytes.
///
/// Algebra file:
///   algebra <name>
///   field <Q | F<p>>
///   dim <n>
///   [i,j] = c*k [c*k ...]      # 1-based, i < j, omitted pairs are zero
///
/// Extending-datum file: the algebra block, then
///   dimV <m>
///   laction x,i = c*y ...      # x <| e_i in the V basis
///   raction x,i = c*j ...      # x |> e_i in the g basis
///   cocycle x,y = c*j ...      # f(x, y) in the g basis, x < y
///   vbracket x,y = c*z ...     # {x, y} in the V basis, x < y
///
/// Twisted-derivation pair file (base algebra supplied separately):
///   lambda s1 ... sn
///   d s11 ... s1n              # n rows of the matrix of D
///   ...
///
/// Matrix file: one row of whitespace-separated scalar literals per line.

LieAlgebra parse_algebra(const std::string& text);
ExtendingDatum parse_datum(const std::string& text);
TwistedDerivation parse_twder_pair(const std::string& text, const LieAlgebra& l);
Matrix parse_matrix_rows(const std::string& text, const FieldSpec& field);

/// Comma-separated scalar literals, e.g. "1,0,-2/3". Throws Error (these come
/// from command arguments, not files, so no line number).
Vec parse_scalar_list(const std::string& text, const FieldSpec& field);

std::string serialize_algebra(const LieAlgebra& l);
std::string serialize_datum(const ExtendingDatum& d);
std::string serialize_twder_pair(const TwistedDerivation& t);
std::string serialize_matrix_rows(const Matrix& m);

/// Reads a whole file; throws Error when it cannot be opened.
std::string read_text_file(const std::string& path);

/// An algebra argument names either a file (tried first, when such a file
/// exists) or a catalog entry built over default_field.
LieAlgebra resolve_algebra(const std::string& spec, const FieldSpec& default_field);

}  // namespace liext
