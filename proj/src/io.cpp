#include "altermatic/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "altermatic/errors.hpp"

namespace altermatic {

namespace {

std::string_view strip_comment(std::string_view line)
{
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    return line;
}

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; };
    while (i < line.size()) {
        while (i < line.size() && is_sep(line[i]))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !is_sep(line[j]))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool blank(std::string_view line)
{
    for (char c : line)
        if (c != ' ' && c != '\t' && c != '\r')
            return false;
    return true;
}

long long to_int(std::string_view tok, std::size_t line_no)
{
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected an integer, got '" + std::string(tok) + "'");
    return v;
}

} // namespace

Hypergraph parse_hypergraph(std::istream& in)
{
    std::string raw;
    std::size_t line_no = 0;
    int n = 0;
    std::vector<VertexSet> edges;
    std::unordered_map<VertexSet, std::size_t> first_seen;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = strip_comment(raw);
        if (blank(line))
            continue;
        const auto tok = tokens(line);
        if (n == 0) {
            if (tok.size() != 2 || tok[0] != "n")
                throw ParseError(line_no, "missing header 'n <int>'");
            const long long value = to_int(tok[1], line_no);
            if (value < 1 || value > kMaxVertices)
                throw ParseError(line_no, "vertex count must lie in [1, " + std::to_string(kMaxVertices) + "]");
            n = static_cast<int>(value);
            continue;
        }
        if (tok.empty())
            throw ParseError(line_no, "empty edge");
        VertexSet e = 0;
        for (auto t : tok) {
            const long long v = to_int(t, line_no);
            if (v < 1 || v > n)
                throw ParseError(line_no, "vertex " + std::string(t) + " out of range [1, " + std::to_string(n) + "]");
            e |= vertex_bit(static_cast<int>(v));
        }
        if (auto [it, inserted] = first_seen.emplace(e, line_no); !inserted)
            throw ParseError(line_no, "duplicate edge " + format_set(e) + " (first on line " +
                                          std::to_string(it->second) + ")");
        edges.push_back(e);
    }
    if (n == 0)
        throw ParseError(line_no, "missing header 'n <int>'");
    return Hypergraph(n, std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_hypergraph(in);
}

std::string serialize_hypergraph(const Hypergraph& h)
{
    std::string out = "n " + std::to_string(h.vertex_count()) + "\n";
    for (VertexSet e : h.edges()) {
        bool first = true;
        for (int v : set_elements(e)) {
            if (!first)
                out += ' ';
            out += std::to_string(v);
            first = false;
        }
        out += '\n';
    }
    return out;
}

Coloring parse_coloring(std::istream& in, std::size_t expected_len)
{
    std::string raw;
    std::size_t line_no = 0;
    std::vector<int> colors;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = strip_comment(raw);
        if (blank(line))
            continue;
        const auto tok = tokens(line);
        if (tok.size() != 1)
            throw ParseError(line_no, "expected one color per line");
        const long long v = to_int(tok[0], line_no);
        if (v < 1 || v > 1'000'000'000)
            throw ParseError(line_no, "colors must be positive integers, got " + std::string(tok[0]));
        colors.push_back(static_cast<int>(v));
    }
    if (colors.size() != expected_len)
        throw ParseError(0, "coloring has " + std::to_string(colors.size()) + " entries, expected " +
                                std::to_string(expected_len));
    return Coloring::from_assignment(std::move(colors));
}

Coloring parse_coloring(std::string_view text, std::size_t expected_len)
{
    std::istringstream in{std::string(text)};
    return parse_coloring(in, expected_len);
}

std::string serialize_coloring(const Coloring& c)
{
    std::string out;
    for (int x : c.assignment)
        out += std::to_string(x) + "\n";
    return out;
}

std::string read_input(const std::string& path)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw ParseError(0, "cannot open '" + path + "'");
    buf << f.rdbuf();
    return buf.str();
}

std::string digest_hex(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace altermatic
