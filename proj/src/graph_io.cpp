#include "mdim/graph_io.hpp"

#include "mdim/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace mdim {

namespace {

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    /// Next non-comment line, or false at end of input.
    bool next(std::string_view& line)
    {
        while (pos < text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            if (line.empty() || line.front() == '#')
                continue;
            return true;
        }
        return false;
    }

    [[noreturn]] void error(const std::string& what) const
    {
        fail(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": " + what);
    }
};

std::string_view next_token(std::string_view& s)
{
    auto start = s.find_first_not_of(" \t");
    if (start == std::string_view::npos) {
        s = {};
        return {};
    }
    auto end = s.find_first_of(" \t", start);
    if (end == std::string_view::npos)
        end = s.size();
    auto tok = s.substr(start, end - start);
    s.remove_prefix(end);
    return tok;
}

bool parse_int(std::string_view tok, long long& out)
{
    if (tok.empty())
        return false;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
}

} // namespace

std::string format_graph(const Graph& g)
{
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

void write_graph(std::ostream& out, const Graph& g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    if (g.has_labels())
        for (Vertex v = 0; v < g.order(); ++v)
            out << "l " << v << ' ' << g.label(v) << '\n';
}

Graph parse_graph(std::string_view text)
{
    LineReader reader{text};
    std::string_view line;
    if (!reader.next(line))
        reader.error("missing header 'n m'");
    long long n = 0, m = 0;
    {
        auto rest = line;
        if (!parse_int(next_token(rest), n) || !parse_int(next_token(rest), m) || !next_token(rest).empty())
            reader.error("header must be 'n m'");
        if (n < 1 || n > 100000000 || m < 0)
            reader.error("header values out of range");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(line))
            reader.error("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        auto rest = line;
        long long u = 0, v = 0;
        if (!parse_int(next_token(rest), u) || !parse_int(next_token(rest), v) || !next_token(rest).empty())
            reader.error("edge line must be 'u v'");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::vector<std::string> labels;
    std::vector<char> labelled;
    std::size_t label_count = 0;
    while (reader.next(line)) {
        if (line.size() < 2 || line[0] != 'l' || line[1] != ' ')
            reader.error("unexpected content after edges");
        auto rest = line.substr(2);
        auto index_end = rest.find(' ');
        long long i = 0;
        if (index_end == std::string_view::npos || !parse_int(rest.substr(0, index_end), i) || i < 0 || i >= n)
            reader.error("label line must be 'l i label'");
        if (labels.empty()) {
            labels.resize(static_cast<std::size_t>(n));
            labelled.assign(static_cast<std::size_t>(n), 0);
        }
        if (labelled[i])
            reader.error("duplicate label for vertex " + std::to_string(i));
        labelled[i] = 1;
        ++label_count;
        labels[i] = std::string(rest.substr(index_end + 1));
    }
    if (!labels.empty() && label_count != static_cast<std::size_t>(n))
        fail(ErrorCode::parse_error, "labels must be given for all vertices or none");
    return build_graph(static_cast<Vertex>(n), edges, std::move(labels));
}

Graph read_graph(std::istream& in)
{
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

Graph load_graph(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::parse_error, "cannot open '" + path + "'");
    return read_graph(in);
}

void save_graph(const std::string& path, const Graph& g)
{
    std::ofstream out(path);
    if (!out)
        fail(ErrorCode::parse_error, "cannot write '" + path + "'");
    write_graph(out, g);
}

std::string format_labeling(const ProductLabeling& labeling)
{
    std::ostringstream out;
    out << "# index a v\n";
    for (Vertex x = 0; x < labeling.order(); ++x) {
        auto [a, v] = labeling.coords(x);
        out << x << ' ' << a << ' ' << v << '\n';
    }
    return out.str();
}

} // namespace mdim
