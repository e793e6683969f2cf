#include "gyro/table_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace gyro::io {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;  // 1-based
    std::vector<Token> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Non-blank, non-comment lines split into tokens.
std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        const auto raw = text.substr(pos, end - pos);
        ++number;
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && is_space(raw[i])) ++i;
            if (i >= raw.size()) break;
            if (line.tokens.empty() && raw[i] == '#') break;
            const auto start = i;
            while (i < raw.size() && !is_space(raw[i])) ++i;
            line.tokens.push_back({raw.substr(start, i - start), start + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

std::size_t parse_unsigned(const Token& tok, std::size_t line)
{
    std::size_t value = 0;
    const auto* first = tok.text.data();
    const auto* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ptr != last || (ec != std::errc{} && ec != std::errc::result_out_of_range)) {
        throw ParseError(ParseErrorKind::NonIntegerEntry, line, tok.column,
                         "'" + std::string(tok.text) + "' is not a non-negative integer");
    }
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(ParseErrorKind::EntryOutOfRange, line, tok.column, "value too large");
    }
    return value;
}

}  // namespace

std::string_view parse_error_name(ParseErrorKind kind)
{
    switch (kind) {
    case ParseErrorKind::BadMagic: return "BadMagic";
    case ParseErrorKind::BadDimensions: return "BadDimensions";
    case ParseErrorKind::NonIntegerEntry: return "NonIntegerEntry";
    case ParseErrorKind::EntryOutOfRange: return "EntryOutOfRange";
    case ParseErrorKind::BadSyntax: return "BadSyntax";
    }
    return "ParseError";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& detail)
    : Error(std::string(parse_error_name(kind)) + " at line " + std::to_string(line) +
            (column ? ", column " + std::to_string(column) : std::string()) + ": " + detail),
      kind_(kind), line_(line), column_(column)
{
}

TableDocument parse_table(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(ParseErrorKind::BadMagic, 1, 0, "empty document");

    const auto& magic = lines[0];
    if (magic.tokens.size() != 2 || magic.tokens[0].text != "gyro" || magic.tokens[1].text != "1") {
        throw ParseError(ParseErrorKind::BadMagic, magic.number, magic.tokens[0].column,
                         "expected 'gyro 1'");
    }
    if (lines.size() < 2) throw ParseError(ParseErrorKind::BadDimensions, magic.number, 0, "missing order line");

    const auto& order_line = lines[1];
    if (order_line.tokens.size() != 1) {
        throw ParseError(ParseErrorKind::BadDimensions, order_line.number, order_line.tokens[0].column,
                         "order line must hold a single integer");
    }
    const auto n = parse_unsigned(order_line.tokens[0], order_line.number);
    if (n == 0 || n > kMaxOrder) {
        throw ParseError(ParseErrorKind::BadDimensions, order_line.number, order_line.tokens[0].column,
                         "order must be in [1, " + std::to_string(kMaxOrder) + "]");
    }

    std::vector<Element> entries;
    entries.reserve(n * n);
    std::size_t li = 2;
    for (std::size_t row = 0; row < n; ++row, ++li) {
        if (li >= lines.size() || lines[li].tokens[0].text == "labels") {
            const auto at = li < lines.size() ? lines[li].number : lines.back().number;
            throw ParseError(ParseErrorKind::BadDimensions, at, 0,
                             "expected " + std::to_string(n) + " rows, found " + std::to_string(row));
        }
        const auto& line = lines[li];
        for (std::size_t c = 0; c < line.tokens.size() && c < n; ++c) {
            const auto v = parse_unsigned(line.tokens[c], line.number);
            if (v >= n) {
                throw ParseError(ParseErrorKind::EntryOutOfRange, line.number, line.tokens[c].column,
                                 "entry " + std::to_string(v) + " is not below " + std::to_string(n));
            }
            entries.push_back(static_cast<Element>(v));
        }
        if (line.tokens.size() != n) {
            throw ParseError(ParseErrorKind::BadDimensions, line.number,
                             line.tokens.size() > n ? line.tokens[n].column : 0,
                             "row has " + std::to_string(line.tokens.size()) + " entries, expected " +
                                 std::to_string(n));
        }
    }

    TableDocument doc{CayleyTable(n, std::move(entries)), {}};
    if (li < lines.size() && lines[li].tokens[0].text == "labels") {
        const auto& line = lines[li];
        if (line.tokens.size() != n + 1) {
            throw ParseError(ParseErrorKind::BadDimensions, line.number, 0,
                             "expected " + std::to_string(n) + " labels");
        }
        for (std::size_t i = 1; i < line.tokens.size(); ++i) doc.labels.emplace_back(line.tokens[i].text);
        ++li;
    }
    if (li < lines.size()) {
        throw ParseError(ParseErrorKind::BadDimensions, lines[li].number, lines[li].tokens[0].column,
                         "unexpected content after the table");
    }
    return doc;
}

std::string serialize_table(const CayleyTable& table, const std::vector<std::string>& labels)
{
    std::string out = "gyro 1\n" + std::to_string(table.order()) + "\n";
    for (std::size_t a = 0; a < table.order(); ++a) {
        for (std::size_t b = 0; b < table.order(); ++b) {
            if (b) out += ' ';
            out += std::to_string(table(a, b));
        }
        out += '\n';
    }
    if (!labels.empty()) {
        out += "labels";
        for (const auto& l : labels) out += ' ' + l;
        out += '\n';
    }
    return out;
}

std::string serialize_gyrations(const FiniteGyrogroup& g)
{
    std::string out;
    for (std::size_t a = 0; a < g.order(); ++a) {
        for (std::size_t b = 0; b < g.order(); ++b) {
            out += std::to_string(a) + ' ' + std::to_string(b) + ':';
            for (auto x : g.gyr(a, b).images()) out += ' ' + std::to_string(x);
            out += '\n';
        }
    }
    return out;
}

std::vector<Permutation> parse_gyrations(std::string_view text, std::size_t order)
{
    std::vector<Permutation> out(order * order);
    std::vector<bool> seen(order * order, false);
    for (const auto& line : tokenize(text)) {
        if (line.tokens.size() != order + 2 || line.tokens[1].text.empty() ||
            line.tokens[1].text.back() != ':') {
            throw ParseError(ParseErrorKind::BadSyntax, line.number, line.tokens[0].column,
                             "expected 'a b: i0 ... i" + std::to_string(order - 1) + "'");
        }
        Token b_tok = line.tokens[1];
        b_tok.text.remove_suffix(1);
        const auto a = parse_unsigned(line.tokens[0], line.number);
        const auto b = parse_unsigned(b_tok, line.number);
        if (a >= order || b >= order) {
            throw ParseError(ParseErrorKind::EntryOutOfRange, line.number, line.tokens[0].column,
                             "pair index out of range");
        }
        std::vector<Element> images;
        for (std::size_t i = 2; i < line.tokens.size(); ++i) {
            const auto v = parse_unsigned(line.tokens[i], line.number);
            if (v >= order) {
                throw ParseError(ParseErrorKind::EntryOutOfRange, line.number, line.tokens[i].column,
                                 "image out of range");
            }
            images.push_back(static_cast<Element>(v));
        }
        if (!Permutation::is_bijection(images)) {
            throw ParseError(ParseErrorKind::BadSyntax, line.number, 0, "images are not a permutation");
        }
        const auto idx = a * order + b;
        if (seen[idx]) throw ParseError(ParseErrorKind::BadSyntax, line.number, 0, "duplicate pair");
        seen[idx] = true;
        out[idx] = Permutation(std::move(images));
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) {
            throw ParseError(ParseErrorKind::BadDimensions, 0, 0,
                             "missing pair " + std::to_string(i / order) + " " + std::to_string(i % order));
        }
    }
    return out;
}

std::vector<Element> parse_element_list(std::string_view text)
{
    std::vector<Element> out;
    for (const auto& line : tokenize(text)) {
        for (const auto& tok : line.tokens) {
            const auto v = parse_unsigned(tok, line.number);
            if (v >= 2 * kMaxOrder) {
                throw ParseError(ParseErrorKind::EntryOutOfRange, line.number, tok.column, "entry too large");
            }
            out.push_back(static_cast<Element>(v));
        }
    }
    return out;
}

std::string serialize_set_list(const std::vector<ElementSubset>& sets, const std::vector<bool>& marked)
{
    std::string out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        out += sets[i].to_string();
        if (i < marked.size() && marked[i]) out += '*';
        out += '\n';
    }
    return out;
}

std::vector<ElementSubset> parse_set_list(std::string_view text, std::size_t order, std::vector<bool>* marked)
{
    std::vector<ElementSubset> out;
    for (const auto& line : tokenize(text)) {
        if (line.tokens.size() != 1) {
            throw ParseError(ParseErrorKind::BadSyntax, line.number, line.tokens[0].column,
                             "expected one set per line");
        }
        auto body = line.tokens[0].text;
        bool star = false;
        if (!body.empty() && body.back() == '*') {
            star = true;
            body.remove_suffix(1);
        }
        if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
            throw ParseError(ParseErrorKind::BadSyntax, line.number, line.tokens[0].column,
                             "expected {a,b,...}");
        }
        body.remove_prefix(1);
        body.remove_suffix(1);
        try {
            out.push_back(parse_subset_arg(body, order));
        } catch (const Error& e) {
            throw ParseError(ParseErrorKind::BadSyntax, line.number, line.tokens[0].column, e.what());
        }
        if (marked) marked->push_back(star);
    }
    return out;
}

ElementSubset parse_subset_arg(std::string_view text, std::size_t order)
{
    ElementSubset out(order);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find(',', pos), text.size());
        const auto item = text.substr(pos, end - pos);
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw Error("bad element '" + std::string(item) + "' in subset '" + std::string(text) + "'");
        }
        if (v >= order) {
            throw IndexOutOfRange("element " + std::to_string(v) + " not below order " + std::to_string(order));
        }
        out.insert(v);
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace gyro::io
