#include "liext/io.hpp"

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "liext/catalog.hpp"
#include "liext/error.hpp"

namespace liext {
namespace {

struct Line {
    std::size_t number;  // 1-based position in the original text
    std::string text;    // comment stripped, trimmed, non-empty
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string body = trim(raw);
        if (!body.empty()) out.push_back({number, body});
    }
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

std::size_t parse_count(const std::string& tok, const std::string& what, std::size_t line) {
    if (!all_digits(tok) || tok.size() > 9)
        throw ParseError("invalid " + what + " '" + tok + "'", line);
    return static_cast<std::size_t>(std::stoul(tok));
}

/// 1-based basis index, bounds-checked, returned 0-based.
std::size_t parse_index(const std::string& tok, std::size_t dim, const std::string& what,
                        std::size_t line) {
    const std::size_t value = parse_count(tok, what, line);
    if (value < 1 || value > dim)
        throw ParseError(what + " " + tok + " out of range 1.." + std::to_string(dim), line);
    return value - 1;
}

Scalar parse_scalar_at(const std::string& tok, const FieldSpec& field, std::size_t line) {
    try {
        return Scalar::parse(tok, field);
    } catch (const Error& e) {
        throw ParseError(e.what(), line);
    }
}

/// An index pair "i,j" with no internal spaces.
std::pair<std::size_t, std::size_t> parse_pair(const std::string& tok, std::size_t first_dim,
                                               std::size_t second_dim, std::size_t line) {
    const std::size_t comma = tok.find(',');
    if (comma == std::string::npos || tok.find(',', comma + 1) != std::string::npos)
        throw ParseError("expected an index pair 'i,j', got '" + tok + "'", line);
    const std::size_t a = parse_index(tok.substr(0, comma), first_dim, "index", line);
    const std::size_t b = parse_index(tok.substr(comma + 1), second_dim, "index", line);
    return {a, b};
}

/// Right-hand side "c*k c*k ...": coefficients over a target space of
/// dimension dim, each basis index at most once.
Vec parse_value(const std::string& rhs, std::size_t dim, const FieldSpec& field,
                std::size_t line) {
    const std::vector<std::string> tokens = split_ws(rhs);
    if (tokens.empty()) throw ParseError("empty value", line);
    Vec value = zero_vec(dim, field);
    std::vector<bool> seen(dim, false);
    for (const std::string& tok : tokens) {
        const std::size_t star = tok.rfind('*');
        if (star == std::string::npos || star == 0 || star + 1 == tok.size())
            throw ParseError("expected a term 'c*k', got '" + tok + "'", line);
        const Scalar c = parse_scalar_at(tok.substr(0, star), field, line);
        const std::size_t k = parse_index(tok.substr(star + 1), dim, "basis index", line);
        if (seen[k])
            throw ParseError("basis index " + std::to_string(k + 1) + " repeated in one value",
                             line);
        seen[k] = true;
        value[k] = c;
    }
    return value;
}

/// Splits "lhs = rhs" at the first '='; fails when none is present.
std::pair<std::string, std::string> split_assignment(const Line& line) {
    const std::size_t eq = line.text.find('=');
    if (eq == std::string::npos) throw ParseError("expected '=' in '" + line.text + "'", line.number);
    return {trim(line.text.substr(0, eq)), trim(line.text.substr(eq + 1))};
}

/// One keyword-prefixed header line ("algebra x", "field Q", ...).
std::string header_token(const Line& line, const std::string& keyword) {
    const std::vector<std::string> tokens = split_ws(line.text);
    if (tokens.size() != 2 || tokens[0] != keyword)
        throw ParseError("expected '" + keyword + " <value>', got '" + line.text + "'",
                         line.number);
    return tokens[1];
}

struct ParsedStructure {
    LieAlgebra g;
    std::optional<ExtendingDatum> datum;  // present when a dimV section exists
};

ParsedStructure parse_structure(const std::string& text) {
    const std::vector<Line> lines = significant_lines(text);
    std::size_t at = 0;
    auto next = [&]() -> const Line& {
        if (at >= lines.size()) {
            const std::size_t last = lines.empty() ? 1 : lines.back().number;
            throw ParseError("unexpected end of file", last);
        }
        return lines[at++];
    };

    const std::string name = header_token(next(), "algebra");
    FieldSpec field = FieldSpec::rationals();
    {
        const Line& line = next();
        try {
            field = FieldSpec::parse(header_token(line, "field"));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), line.number);
        }
    }
    const Line& dim_line = next();
    const std::size_t n = parse_count(header_token(dim_line, "dim"), "dimension", dim_line.number);

    // Bracket section: "[i,j] = value" lines until "dimV" or end of file.
    std::vector<BracketEntry> entries;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> bracket_seen;  // -> line
    std::optional<std::size_t> dimv;
    std::size_t dimv_line = 0;
    while (at < lines.size()) {
        const Line& line = lines[at];
        if (line.text.rfind("dimV", 0) == 0) {
            ++at;
            dimv = parse_count(header_token(line, "dimV"), "complement dimension", line.number);
            dimv_line = line.number;
            break;
        }
        ++at;
        auto [lhs, rhs] = split_assignment(line);
        if (lhs.size() < 2 || lhs.front() != '[' || lhs.back() != ']')
            throw ParseError("expected a bracket line '[i,j] = ...', got '" + line.text + "'",
                             line.number);
        auto [i, j] = parse_pair(trim(lhs.substr(1, lhs.size() - 2)), n, n, line.number);
        if (i >= j)
            throw ParseError("bracket pairs must satisfy i<j, got [" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + "]",
                             line.number);
        if (auto it = bracket_seen.find({i, j}); it != bracket_seen.end())
            throw ParseError("pair [" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 "] already defined on line " + std::to_string(it->second),
                             line.number);
        bracket_seen[{i, j}] = line.number;
        entries.push_back({i, j, parse_value(rhs, n, field, line.number)});
    }
    LieAlgebra g = LieAlgebra::from_entries(name, field, n, entries);
    if (!dimv) return {std::move(g), std::nullopt};

    const std::size_t m = *dimv;
    if (m == 0) throw ParseError("complement dimension must be positive", dimv_line);
    Tensor3 laction(m, n, m, field);
    Tensor3 raction(m, n, n, field);
    Tensor3 cocycle(m, m, n, field);
    Tensor3 vbracket(m, m, m, field);
    std::map<std::pair<std::string, std::pair<std::size_t, std::size_t>>, std::size_t> seen;
    while (at < lines.size()) {
        const Line& line = lines[at++];
        auto [lhs, rhs] = split_assignment(line);
        const std::vector<std::string> head = split_ws(lhs);
        if (head.size() != 2)
            throw ParseError("expected '<section> x,i = ...', got '" + line.text + "'",
                             line.number);
        const std::string& kw = head[0];
        const bool mixed = kw == "laction" || kw == "raction";
        const bool alternating = kw == "cocycle" || kw == "vbracket";
        if (!mixed && !alternating)
            throw ParseError("unknown section '" + kw + "'", line.number);
        auto [x, i] = parse_pair(head[1], m, mixed ? n : m, line.number);
        if (alternating && x >= i)
            throw ParseError(kw + " pairs must satisfy x<y, got " + std::to_string(x + 1) + "," +
                                 std::to_string(i + 1),
                             line.number);
        if (auto it = seen.find({kw, {x, i}}); it != seen.end())
            throw ParseError(kw + " " + std::to_string(x + 1) + "," + std::to_string(i + 1) +
                                 " already defined on line " + std::to_string(it->second),
                             line.number);
        seen[{kw, {x, i}}] = line.number;
        const std::size_t target = (kw == "raction" || kw == "cocycle") ? n : m;
        const Vec value = parse_value(rhs, target, field, line.number);
        if (kw == "laction") {
            laction.set_fiber(x, i, value);
        } else if (kw == "raction") {
            raction.set_fiber(x, i, value);
        } else {
            Tensor3& tensor = kw == "cocycle" ? cocycle : vbracket;
            tensor.set_fiber(x, i, value);
            tensor.set_fiber(i, x, scale(Scalar::from_int(-1, field), value));
        }
    }
    ExtendingDatum datum(std::move(g), m, std::move(laction), std::move(raction),
                         std::move(cocycle), std::move(vbracket));
    LieAlgebra base = datum.g();
    return {std::move(base), std::move(datum)};
}

std::string term_list(const Vec& value) {
    std::string out;
    for (std::size_t k = 0; k < value.size(); ++k) {
        if (value[k].is_zero()) continue;
        if (!out.empty()) out += ' ';
        out += value[k].str() + "*" + std::to_string(k + 1);
    }
    return out;
}

void emit_fiber_lines(std::ostringstream& out, const std::string& keyword, const Tensor3& tensor,
                      bool alternating) {
    for (std::size_t x = 0; x < tensor.d0(); ++x)
        for (std::size_t i = alternating ? x + 1 : 0; i < tensor.d1(); ++i) {
            const Vec fiber = tensor.fiber(x, i);
            if (is_zero_vec(fiber)) continue;
            out << keyword << ' ' << x + 1 << ',' << i + 1 << " = " << term_list(fiber) << '\n';
        }
}

}  // namespace

LieAlgebra parse_algebra(const std::string& text) {
    ParsedStructure parsed = parse_structure(text);
    if (parsed.datum)
        throw ParseError("extending-datum sections are not allowed in an algebra file", 1);
    return std::move(parsed.g);
}

ExtendingDatum parse_datum(const std::string& text) {
    ParsedStructure parsed = parse_structure(text);
    if (!parsed.datum) throw ParseError("missing dimV section", 1);
    return std::move(*parsed.datum);
}

TwistedDerivation parse_twder_pair(const std::string& text, const LieAlgebra& l) {
    const std::vector<Line> lines = significant_lines(text);
    const std::size_t n = l.dim();
    if (lines.size() != n + 1) {
        const std::size_t where = lines.empty() ? 1 : lines.back().number;
        throw ParseError("expected one lambda line and " + std::to_string(n) +
                             " matrix rows, found " + std::to_string(lines.size()) + " lines",
                         where);
    }
    auto parse_row = [&](const Line& line, const std::string& keyword) {
        const std::vector<std::string> tokens = split_ws(line.text);
        if (tokens.size() != n + 1 || tokens[0] != keyword)
            throw ParseError("expected '" + keyword + "' followed by " + std::to_string(n) +
                                 " scalars, got '" + line.text + "'",
                             line.number);
        Vec row = zero_vec(n, l.field());
        for (std::size_t k = 0; k < n; ++k)
            row[k] = parse_scalar_at(tokens[k + 1], l.field(), line.number);
        return row;
    };
    const Vec lambda = parse_row(lines[0], "lambda");
    std::vector<Vec> rows;
    rows.reserve(n);
    for (std::size_t r = 0; r < n; ++r) rows.push_back(parse_row(lines[r + 1], "d"));
    return {lambda, Matrix::from_rows(n, rows, l.field())};
}

Matrix parse_matrix_rows(const std::string& text, const FieldSpec& field) {
    const std::vector<Line> lines = significant_lines(text);
    if (lines.empty()) throw ParseError("empty matrix", 1);
    std::vector<Vec> rows;
    const std::size_t cols = split_ws(lines[0].text).size();
    for (const Line& line : lines) {
        const std::vector<std::string> tokens = split_ws(line.text);
        if (tokens.size() != cols)
            throw ParseError("expected " + std::to_string(cols) + " entries, got " +
                                 std::to_string(tokens.size()),
                             line.number);
        Vec row = zero_vec(cols, field);
        for (std::size_t k = 0; k < cols; ++k)
            row[k] = parse_scalar_at(tokens[k], field, line.number);
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(cols, rows, field);
}

Vec parse_scalar_list(const std::string& text, const FieldSpec& field) {
    Vec out;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = text.find(',', begin);
        const std::string tok =
            trim(comma == std::string::npos ? text.substr(begin) : text.substr(begin, comma - begin));
        if (tok.empty()) throw Error("empty entry in scalar list '" + text + "'");
        out.push_back(Scalar::parse(tok, field));
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    return out;
}

std::string serialize_algebra(const LieAlgebra& l) {
    std::ostringstream out;
    out << "algebra " << l.name() << '\n';
    out << "field " << l.field().str() << '\n';
    out << "dim " << l.dim() << '\n';
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = i + 1; j < l.dim(); ++j) {
            const Vec fiber = l.bracket_basis(i, j);
            if (is_zero_vec(fiber)) continue;
            out << '[' << i + 1 << ',' << j + 1 << "] = " << term_list(fiber) << '\n';
        }
    return out.str();
}

std::string serialize_datum(const ExtendingDatum& d) {
    std::ostringstream out;
    out << serialize_algebra(d.g());
    out << "dimV " << d.dimv() << '\n';
    emit_fiber_lines(out, "laction", d.laction(), false);
    emit_fiber_lines(out, "raction", d.raction(), false);
    emit_fiber_lines(out, "cocycle", d.cocycle(), true);
    emit_fiber_lines(out, "vbracket", d.vbracket(), true);
    return out.str();
}

std::string serialize_twder_pair(const TwistedDerivation& t) {
    std::ostringstream out;
    out << "lambda";
    for (const Scalar& c : t.lambda) out << ' ' << c.str();
    out << '\n';
    for (std::size_t r = 0; r < t.d.rows(); ++r) {
        out << 'd';
        for (std::size_t c = 0; c < t.d.cols(); ++c) out << ' ' << t.d.at(r, c).str();
        out << '\n';
    }
    return out.str();
}

std::string serialize_matrix_rows(const Matrix& m) {
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out << ' ';
            out << m.at(r, c).str();
        }
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

LieAlgebra resolve_algebra(const std::string& spec, const FieldSpec& default_field) {
    std::error_code ec;
    if (std::filesystem::exists(spec, ec)) return parse_algebra(read_text_file(spec));
    try {
        return catalog(spec, default_field);
    } catch (const Error& e) {
        throw Error(std::string(e.what()) + " (and no file named '" + spec + "' exists)");
    }
}

}  // namespace liext
