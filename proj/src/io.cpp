#include "petcheck/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace petcheck {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";

std::string_view trim_eol(std::string_view s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

// Reads 6-bit groups from a record, remembering the absolute byte offset.
class SixBitReader {
public:
    SixBitReader(std::string_view data, std::size_t base) : data_(data), base_(base) {}

    std::size_t remaining_bytes() const { return data_.size() - pos_; }
    std::size_t offset() const { return base_ + pos_; }

    unsigned next_byte()
    {
        if (pos_ >= data_.size())
            throw ParseError("unexpected end of record", offset());
        unsigned char c = static_cast<unsigned char>(data_[pos_]);
        if (c < 63 || c > 126)
            throw ParseError("byte out of range 63..126", offset());
        ++pos_;
        return c - 63u;
    }

    bool has_bits(std::size_t k) const { return bits_left_ + 6 * remaining_bytes() >= k; }

    unsigned next_bit()
    {
        if (bits_left_ == 0) {
            current_ = next_byte();
            bits_left_ = 6;
        }
        --bits_left_;
        return (current_ >> bits_left_) & 1u;
    }

    std::uint64_t next_bits(std::size_t k)
    {
        std::uint64_t x = 0;
        for (std::size_t i = 0; i < k; ++i)
            x = (x << 1) | next_bit();
        return x;
    }

private:
    std::string_view data_;
    std::size_t base_;
    std::size_t pos_ = 0;
    unsigned current_ = 0;
    unsigned bits_left_ = 0;
};

std::uint64_t read_order(SixBitReader& r)
{
    unsigned first = r.next_byte();
    if (first < 63)
        return first;
    std::size_t start = r.offset();
    if (r.remaining_bytes() == 0)
        throw ParseError("truncated vertex count", start);
    // Peek: a second 126 selects the 8-byte form.
    std::uint64_t n = 0;
    unsigned second = r.next_byte();
    if (second == 63) {
        for (int i = 0; i < 6; ++i)
            n = (n << 6) | r.next_byte();
    } else {
        n = second;
        for (int i = 0; i < 2; ++i)
            n = (n << 6) | r.next_byte();
    }
    return n;
}

void write_order(std::string& out, std::uint64_t n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

constexpr std::uint64_t kMaxOrder = 1u << 20;

MultiGraph parse_graph6_body(std::string_view body, std::size_t base)
{
    SixBitReader r(body, base);
    std::uint64_t n = read_order(r);
    if (n > kMaxOrder)
        throw ParseError("vertex count too large", base);
    std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::uint64_t bytes = (bits + 5) / 6;
    if (r.remaining_bytes() != bytes)
        throw ParseError("expected " + std::to_string(bytes) + " adjacency bytes, found " +
                             std::to_string(r.remaining_bytes()),
                         r.offset());
    MultiGraph g(n);
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i)
            if (r.next_bit())
                g.add_edge(i, j);
    return g;
}

MultiGraph parse_sparse6_body(std::string_view body, std::size_t base)
{
    SixBitReader r(body, base);
    std::uint64_t n = read_order(r);
    if (n > kMaxOrder)
        throw ParseError("vertex count too large", base);
    std::size_t k = 0;
    for (std::uint64_t x = n > 0 ? n - 1 : 0; x > 0; x >>= 1)
        ++k;
    MultiGraph g(n);
    std::uint64_t v = 0;
    while (r.has_bits(1 + k)) {
        unsigned b = r.next_bit();
        std::uint64_t x = r.next_bits(k);
        if (b)
            ++v;
        if (x >= n || v >= n)
            break;
        if (x > v)
            v = x;
        else
            g.add_edge(static_cast<VertexId>(x), static_cast<VertexId>(v));
    }
    return g;
}

class SixBitWriter {
public:
    void bit(unsigned b)
    {
        current_ = (current_ << 1) | (b & 1u);
        if (++filled_ == 6)
            flush();
    }
    void bits(std::uint64_t x, std::size_t k)
    {
        for (std::size_t i = k; i-- > 0;)
            bit(static_cast<unsigned>((x >> i) & 1u));
    }
    std::size_t pending() const { return filled_; }
    void pad_zero() { pad(0); }
    void pad_one() { pad(1); }
    std::string take() { return std::move(out_); }

private:
    void pad(unsigned b)
    {
        while (filled_ != 0)
            bit(b);
    }
    void flush()
    {
        out_.push_back(static_cast<char>(current_ + 63));
        current_ = 0;
        filled_ = 0;
    }
    std::string out_;
    unsigned current_ = 0;
    std::size_t filled_ = 0;
};

// Vertex ids of g in ascending order mapped to 0..n-1.
std::vector<VertexId> dense_index(const MultiGraph& g)
{
    std::vector<VertexId> index(g.vertex_bound(), kNoVertex);
    VertexId next = 0;
    for (VertexId v : g.vertices())
        index[v] = next++;
    return index;
}

bool is_simple(const MultiGraph& g)
{
    for (VertexId v : g.vertices()) {
        std::vector<VertexId> nb = g.neighbours(v);
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            return false;
        if (std::find(nb.begin(), nb.end(), v) != nb.end())
            return false;
    }
    return true;
}

}  // namespace

MultiGraph parse_graph6(std::string_view line)
{
    line = trim_eol(line);
    std::size_t base = 0;
    if (line.starts_with(kGraph6Header)) {
        base = kGraph6Header.size();
    } else if (line.starts_with(kSparse6Header)) {
        base = kSparse6Header.size();
    }
    if (base >= line.size())
        throw ParseError("empty record", base);
    if (line[base] == ':')
        return parse_sparse6_body(line.substr(base + 1), base + 1);
    if (line[base] == '&')
        throw ParseError("digraph6 records are not supported", base);
    return parse_graph6_body(line.substr(base), base);
}

std::string encode_graph6(const MultiGraph& g)
{
    if (!is_simple(g))
        throw GraphError("graph6 requires a simple graph");
    const auto index = dense_index(g);
    const std::size_t n = g.order();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (EdgeId e : g.edges()) {
        const Edge& ed = g.edge(e);
        adj[index[ed.u]][index[ed.v]] = adj[index[ed.v]][index[ed.u]] = 1;
    }
    std::string out;
    write_order(out, n);
    SixBitWriter w;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            w.bit(adj[i][j]);
    w.pad_zero();
    return out + w.take();
}

std::string encode_sparse6(const MultiGraph& g)
{
    const auto index = dense_index(g);
    const std::size_t n = g.order();
    std::size_t k = 0;
    for (std::size_t x = n > 0 ? n - 1 : 0; x > 0; x >>= 1)
        ++k;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> list;  // (larger, smaller)
    for (EdgeId e : g.edges()) {
        const Edge& ed = g.edge(e);
        std::uint64_t a = index[ed.u], b = index[ed.v];
        list.emplace_back(std::max(a, b), std::min(a, b));
    }
    std::sort(list.begin(), list.end());
    SixBitWriter w;
    std::uint64_t v = 0;
    for (auto [j, i] : list) {
        if (j == v) {
            w.bit(0);
            w.bits(i, k);
        } else if (j == v + 1) {
            w.bit(1);
            w.bits(i, k);
            v = j;
        } else {
            w.bit(0);
            w.bits(j, k);
            w.bit(0);
            w.bits(i, k);
            v = j;
        }
    }
    const std::size_t pad = w.pending() == 0 ? 0 : 6 - w.pending();
    const bool special = (n == 2 && k == 1) || (n == 4 && k == 2) || (n == 8 && k == 3) || (n == 16 && k == 4);
    if (special && v + 2 == n && pad >= k + 1) {
        w.bit(0);
        w.pad_one();
    } else {
        w.pad_one();
    }
    std::string out = ":";
    write_order(out, n);
    return out + w.take();
}

std::string encode_record(const MultiGraph& g)
{
    return is_simple(g) ? encode_graph6(g) : encode_sparse6(g);
}

MultiGraph parse_adjacency(std::istream& in)
{
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            ++lineno;
            auto pos = out.find_first_not_of(" \t\r");
            if (pos == std::string::npos || out[pos] == '#')
                continue;
            return true;
        }
        return false;
    };
    if (!next_line(line))
        throw ParseError("missing `n m` header", 0);
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw ParseError("bad `n m` header on line " + std::to_string(lineno), 0);
    MultiGraph g(static_cast<std::size_t>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(line))
            throw ParseError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(i), 0);
        std::istringstream row(line);
        long long u = -1, v = -1;
        if (!(row >> u >> v) || u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("bad edge on line " + std::to_string(lineno), 0);
        g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return g;
}

std::string encode_adjacency(const MultiGraph& g)
{
    const auto index = dense_index(g);
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (EdgeId e : g.edges()) {
        const Edge& ed = g.edge(e);
        out << index[ed.u] << ' ' << index[ed.v] << '\n';
    }
    return out.str();
}

std::vector<GraphRecord> read_catalog(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw GraphError("cannot read catalog " + path);
    std::vector<GraphRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim_eol(line).empty())
            continue;
        GraphRecord rec{parse_graph6(line), path + ":" + std::to_string(lineno)};
        rec.graph.set_name(rec.source);
        out.push_back(std::move(rec));
    }
    return out;
}

MultiGraph load_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw GraphError("cannot read " + path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line)) {
        auto t = trim_eol(line);
        auto pos = t.find_first_not_of(" \t");
        if (pos == std::string_view::npos || t[pos] == '#')
            continue;
        t = t.substr(pos);
        bool six_bit = t.starts_with(">>") || t.front() == ':' ||
                       std::all_of(t.begin(), t.end(), [](char c) { return c >= 63 && c <= 126; });
        MultiGraph g;
        if (six_bit) {
            g = parse_graph6(t);
        } else {
            std::istringstream again(content);
            g = parse_adjacency(again);
        }
        g.set_name(path);
        return g;
    }
    throw ParseError("no graph in " + path, 0);
}

std::map<EdgeId, long long> parse_weights(std::istream& in)
{
    std::map<EdgeId, long long> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#')
            continue;
        std::istringstream row(line);
        long long e = -1, w = 0;
        if (!(row >> e >> w) || e < 0)
            throw ParseError("bad weight line " + std::to_string(lineno), 0);
        out[static_cast<EdgeId>(e)] = w;
    }
    return out;
}

}  // namespace petcheck
