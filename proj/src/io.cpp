#include "bck/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace bck {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : FormatError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column)
{
}

namespace {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

std::vector<Token> split_ws(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t')
            ++i;
        if (i > start)
            out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::optional<std::uint64_t> to_u64(std::string_view s)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        return std::nullopt;
    return v;
}

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

bool is_blank_or_comment(std::string_view line)
{
    auto tokens = split_ws(line);
    return tokens.empty() || tokens.front().text.front() == '#';
}

} // namespace

CayleyTable parse_bck(std::string_view text)
{
    const auto lines = split_lines(text);
    if (lines.empty())
        throw ParseError(1, 1, "empty document; expected header 'bck 1'");

    const auto header = split_ws(lines[0]);
    if (header.size() != 2 || header[0].text != "bck" || header[1].text != "1")
        throw ParseError(1, 1, "bad header; expected 'bck 1'");

    if (lines.size() < 2)
        throw ParseError(2, 1, "missing order line");
    const auto order_tokens = split_ws(lines[1]);
    if (order_tokens.size() != 1)
        throw ParseError(2, 1, "expected a single order value");
    const auto order = to_u64(order_tokens[0].text);
    if (!order || *order == 0 || *order > 65535)
        throw ParseError(2, order_tokens[0].column, "order must be a positive integer, got '" +
                                                        std::string(order_tokens[0].text) + "'");

    const std::size_t n = *order;
    std::vector<Element> entries;
    entries.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t line_no = r + 3;
        if (line_no > lines.size() || is_blank_or_comment(lines[line_no - 1]))
            throw ParseError(line_no, 1, "wrong row count: expected " + std::to_string(n) + " rows, found " +
                                             std::to_string(r));
        const auto tokens = split_ws(lines[line_no - 1]);
        if (tokens.size() != n)
            throw ParseError(line_no, 1, "row " + std::to_string(r + 1) + " has " + std::to_string(tokens.size()) +
                                             " entries, expected " + std::to_string(n));
        for (const auto& tok : tokens) {
            const auto v = to_u64(tok.text);
            if (!v)
                throw ParseError(line_no, tok.column, "non-numeric entry '" + std::string(tok.text) + "' at row " +
                                                          std::to_string(r + 1));
            if (*v >= n)
                throw ParseError(line_no, tok.column, "entry out of range at row " + std::to_string(r + 1) + ": " +
                                                          std::to_string(*v) + " >= " + std::to_string(n));
            entries.push_back(static_cast<Element>(*v));
        }
    }
    for (std::size_t i = n + 2; i < lines.size(); ++i) {
        if (!is_blank_or_comment(lines[i]))
            throw ParseError(i + 1, 1, "unexpected content after the table; trailing lines must start with '#'");
    }
    return CayleyTable(n, std::move(entries));
}

std::string emit_bck(const CayleyTable& table)
{
    std::ostringstream os;
    const auto n = static_cast<Element>(table.order());
    os << "bck 1\n" << n << '\n';
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y)
            os << (y ? " " : "") << table.at(x, y);
        os << '\n';
    }
    return os.str();
}

CayleyTable read_bck_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bck(buf.str());
}

void write_bck_file(const std::filesystem::path& path, const CayleyTable& table)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << emit_bck(table);
}

std::string emit_hasse_dot(const BckAlgebra& a)
{
    std::ostringstream os;
    os << "digraph hasse {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=circle];\n";
    for (std::size_t x = 0; x < a.order(); ++x)
        os << "  " << x << " [label=\"" << x << "\"];\n";
    for (const auto& [lo, hi] : hasse_covers(a))
        os << "  " << lo << " -> " << hi << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

std::string catalog_name(std::size_t index, std::size_t count)
{
    const std::size_t width = std::max<std::size_t>(4, std::to_string(count).size());
    std::string digits = std::to_string(index);
    return std::string(width - std::min(width, digits.size()), '0') + digits + ".bck";
}

} // namespace

std::string catalog_manifest(std::span<const BckAlgebra> classes)
{
    std::ostringstream os;
    os << "index\tfile\traw\tdegree\tcommutative\tbounded\tpositive_implicative\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& a = classes[i];
        const auto r = commuting_degree(a);
        os << i << '\t' << catalog_name(i, classes.size()) << '\t' << r.pair_count << '/' << r.order * r.order
           << '\t' << r.degree << '\t' << is_commutative(a) << '\t' << is_bounded(a) << '\t'
           << is_positive_implicative(a) << '\n';
    }
    return os.str();
}

void write_catalog(const std::filesystem::path& dir, std::span<const BckAlgebra> classes)
{
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < classes.size(); ++i)
        write_bck_file(dir / catalog_name(i, classes.size()), classes[i].table());
    std::ofstream manifest(dir / "manifest.tsv", std::ios::binary);
    if (!manifest)
        throw std::runtime_error("cannot write manifest in '" + dir.string() + "'");
    manifest << catalog_manifest(classes);
}

} // namespace bck
