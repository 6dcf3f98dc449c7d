#include "hadwiger/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hadwiger/errors.hpp"

namespace hadwiger {

namespace {

struct Line {
    std::string text;
    int number = 0;
};

// content lines with their original 1-based numbers; comments and blank
// lines dropped, trailing '\r' tolerated
std::vector<Line> content_lines(std::string_view text)
{
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line(text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                        : eol - pos));
        ++number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] != '#')
            lines.push_back({line, number});
        if (eol == std::string_view::npos)
            break;
        pos = eol + 1;
    }
    return lines;
}

std::vector<long long> parse_ints(const Line& line)
{
    std::istringstream in(line.text);
    std::vector<long long> values;
    long long x = 0;
    while (in >> x)
        values.push_back(x);
    if (!in.eof())
        throw parse_error("expected whitespace-separated integers", line.number);
    return values;
}

} // namespace

Graph parse_graph(std::string_view text)
{
    const auto lines = content_lines(text);
    if (lines.empty())
        throw parse_error("missing 'n m' header", 1);

    const auto header = parse_ints(lines[0]);
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        throw parse_error("malformed header, expected 'n m'", lines[0].number);
    const long long n = header[0];
    const long long m = header[1];
    if (n > 1'000'000)
        throw parse_error("vertex count too large", lines[0].number);
    if (static_cast<long long>(lines.size()) - 1 < m)
        throw parse_error("fewer edge lines than the header announces",
                          lines.empty() ? 1 : lines.back().number);
    if (static_cast<long long>(lines.size()) - 1 > m)
        throw parse_error("more edge lines than the header announces",
                          lines[static_cast<std::size_t>(m) + 1].number);

    std::vector<std::pair<int, int>> edge_list;
    std::set<std::pair<int, int>> seen;
    for (long long e = 0; e < m; ++e) {
        const Line& line = lines[static_cast<std::size_t>(e) + 1];
        const auto fields = parse_ints(line);
        if (fields.size() != 2)
            throw parse_error("expected 'u v'", line.number);
        const long long u = fields[0], v = fields[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("vertex id out of range", line.number);
        if (u == v)
            throw parse_error("self-loop not allowed", line.number);
        const int a = static_cast<int>(std::min(u, v));
        const int b = static_cast<int>(std::max(u, v));
        if (!seen.insert({a, b}).second)
            throw parse_error("duplicate edge", line.number);
        edge_list.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edge_list);
}

std::string serialize_graph(const Graph& g)
{
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

MinorWitness parse_partition(std::string_view text, int n)
{
    MinorWitness w;
    for (const Line& line : content_lines(text)) {
        const auto ids = parse_ints(line);
        std::vector<int> cls;
        for (long long v : ids) {
            if (v < 0 || v >= n)
                throw parse_error("vertex id out of range", line.number);
            cls.push_back(static_cast<int>(v));
        }
        if (!cls.empty())
            w.classes.push_back(std::move(cls));
    }
    return w;
}

std::string serialize_partition(const MinorWitness& w)
{
    std::ostringstream out;
    for (const auto& cls : w.classes) {
        for (std::size_t i = 0; i < cls.size(); ++i)
            out << (i ? " " : "") << cls[i];
        out << '\n';
    }
    return out.str();
}

namespace {

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw parse_error("cannot open file: " + path, 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

Graph load_graph_file(const std::string& path)
{
    return parse_graph(read_text_file(path));
}

MinorWitness load_partition_file(const std::string& path, int n)
{
    return parse_partition(read_text_file(path), n);
}

void write_text_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw parse_error("cannot open file for writing: " + path, 0);
    out << content;
}

} // namespace hadwiger
