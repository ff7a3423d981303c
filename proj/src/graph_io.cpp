#include "treepack/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "treepack/error.hpp"

namespace treepack {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

long parse_int(std::string_view tok, int line_no)
{
    long value = 0;
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw InputError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(tok) + "'");
    return value;
}

// Non-empty, comment-stripped lines with their 1-based line numbers.
std::vector<std::pair<int, std::vector<std::string_view>>> content_lines(std::string_view text)
{
    std::vector<std::pair<int, std::vector<std::string_view>>> out;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        ++line_no;
        std::string_view line = text.substr(pos, nl - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto toks = split_tokens(line);
        if (!toks.empty())
            out.emplace_back(line_no, std::move(toks));
        pos = nl + 1;
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text)
{
    if (text.empty() || text.back() != '\n')
        throw InputError("edge list must end with a newline");
    const auto lines = content_lines(text);
    if (lines.empty())
        throw InputError("edge list has no header line");
    const auto& [header_no, header] = lines.front();
    if (header.size() != 2)
        throw InputError("line " + std::to_string(header_no) + ": header must be 'n m'");
    const long n = parse_int(header[0], header_no);
    const long m = parse_int(header[1], header_no);
    if (n < 0 || m < 0)
        throw InputError("header counts must be nonnegative");
    if (static_cast<long>(lines.size()) - 1 != m)
        throw InputError("header declares " + std::to_string(m) + " edges but " +
                         std::to_string(lines.size() - 1) + " edge lines follow");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, toks] = lines[i];
        if (toks.size() != 2)
            throw InputError("line " + std::to_string(no) + ": expected 'u v'");
        const long u = parse_int(toks[0], no);
        const long v = parse_int(toks[1], no);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("line " + std::to_string(no) + ": vertex out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), std::span<const std::pair<int, int>>(edges));
}

Graph read_edge_list_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

std::string format_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

VertexSet parse_vertex_set(std::string_view text, int n)
{
    VertexSet out;
    for (const auto& [no, toks] : content_lines(text))
        for (auto tok : toks)
            out.push_back(static_cast<int>(parse_int(tok, no)));
    std::sort(out.begin(), out.end());
    validate_vertex_set(out, n);
    return out;
}

}  // namespace treepack
