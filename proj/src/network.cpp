#include "binpath/network.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace binpath {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

bool is_comment_or_blank(std::string_view line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;
}

int parse_int(std::string_view f, int line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
    if (ec != std::errc{} || ptr != f.data() + f.size())
        throw ParseError(line_no, std::string("invalid ") + what + " '" + std::string(f) + "'");
    return value;
}

double parse_prob(std::string_view f, int line_no) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
    if (ec != std::errc{} || ptr != f.data() + f.size())
        throw ParseError(line_no, "invalid probability '" + std::string(f) + "'");
    if (value < 0.0 || value > 1.0)
        throw ParseError(line_no, "probability " + std::string(f) + " outside [0,1]");
    return value;
}

} // namespace

Network::Network(int node_count, const std::vector<std::pair<int, int>>& endpoints,
                 int source, int sink, std::vector<double> probs)
    : n_(node_count), source_(source), sink_(sink) {
    if (node_count < 1) throw std::invalid_argument("node count must be positive");
    if (source < 1 || source > node_count || sink < 1 || sink > node_count)
        throw std::invalid_argument("source/sink out of range");
    if (source == sink) throw std::invalid_argument("source equals sink");
    if (!probs.empty() && probs.size() != endpoints.size())
        throw std::invalid_argument("probability count does not match arc count");

    std::set<std::pair<int, int>> seen;
    arcs_.reserve(endpoints.size());
    for (std::size_t k = 0; k < endpoints.size(); ++k) {
        auto [u, v] = endpoints[k];
        if (u < 1 || u > node_count || v < 1 || v > node_count)
            throw std::invalid_argument("arc endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (!seen.insert(std::minmax(u, v)).second) throw std::invalid_argument("parallel arc");
        arcs_.push_back({static_cast<int>(k) + 1, u, v});
    }
    if (probs.empty()) probs.assign(arcs_.size(), 1.0);
    for (double p : probs)
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("probability outside [0,1]");
    probs_ = std::move(probs);
    build_adjacency();
}

void Network::build_adjacency() {
    adj_offset_.assign(static_cast<std::size_t>(n_) + 2, 0);
    for (const Arc& a : arcs_) {
        ++adj_offset_[a.u + 1];
        ++adj_offset_[a.v + 1];
    }
    for (std::size_t i = 1; i < adj_offset_.size(); ++i) adj_offset_[i] += adj_offset_[i - 1];
    adj_.resize(arcs_.size() * 2);
    std::vector<int> fill(adj_offset_.begin(), adj_offset_.end());
    for (const Arc& a : arcs_) {
        adj_[fill[a.u]++] = {a.v, a.id};
        adj_[fill[a.v]++] = {a.u, a.id};
    }
}

Network Network::parse(std::string_view text) {
    int line_no = 0;
    int header_line = 0;
    int n = 0, m = 0, s = 0, t = 0;
    bool have_header = false;
    std::vector<std::pair<int, int>> endpoints;
    std::vector<double> probs;
    std::set<std::pair<int, int>> seen_pairs;
    bool any_prob = false;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        auto fields = split_fields(line);

        if (!have_header) {
            if (fields.size() != 4)
                throw ParseError(line_no, "expected header 'n m s t'");
            n = parse_int(fields[0], line_no, "node count");
            m = parse_int(fields[1], line_no, "arc count");
            s = parse_int(fields[2], line_no, "source");
            t = parse_int(fields[3], line_no, "sink");
            if (n < 1) throw ParseError(line_no, "node count must be positive");
            if (m < 0) throw ParseError(line_no, "arc count must be non-negative");
            if (s < 1 || s > n) throw ParseError(line_no, "source out of range");
            if (t < 1 || t > n) throw ParseError(line_no, "sink out of range");
            if (s == t) throw ParseError(line_no, "source equals sink");
            have_header = true;
            header_line = line_no;
            continue;
        }

        if (static_cast<int>(endpoints.size()) == m)
            throw ParseError(line_no, "more than the declared " + std::to_string(m) + " arc lines");
        if (fields.size() != 2 && fields.size() != 3)
            throw ParseError(line_no, "expected arc line 'u v [p]'");
        int u = parse_int(fields[0], line_no, "endpoint");
        int v = parse_int(fields[1], line_no, "endpoint");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(line_no, "endpoint out of range 1.." + std::to_string(n));
        if (u == v) throw ParseError(line_no, "self-loop at node " + std::to_string(u));
        if (!seen_pairs.insert(std::minmax(u, v)).second)
            throw ParseError(line_no, "parallel arc " + std::to_string(u) + " " + std::to_string(v));
        endpoints.emplace_back(u, v);
        if (fields.size() == 3) {
            probs.resize(endpoints.size() - 1, 1.0);
            probs.push_back(parse_prob(fields[2], line_no));
            any_prob = true;
        } else if (any_prob) {
            probs.push_back(1.0);
        }
    }

    if (!have_header) throw ParseError(line_no, "empty input, expected header 'n m s t'");
    if (static_cast<int>(endpoints.size()) != m)
        throw ParseError(header_line, "declared " + std::to_string(m) + " arcs but found " +
                                          std::to_string(endpoints.size()) + " arc lines");
    return Network(n, endpoints, s, t, any_prob ? std::move(probs) : std::vector<double>{});
}

Network Network::parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::vector<std::string> Network::validate() const {
    std::vector<std::string> warnings;
    std::vector<int> degree(static_cast<std::size_t>(n_) + 1, 0);
    for (const Arc& a : arcs_) {
        ++degree[a.u];
        ++degree[a.v];
    }
    for (int v = 1; v <= n_; ++v)
        if (degree[v] == 0) warnings.push_back("node " + std::to_string(v) + " is isolated");
    if (!detail::st_connected_when(*this, [](int) { return true; }))
        warnings.push_back("source " + std::to_string(source_) + " and sink " +
                           std::to_string(sink_) + " are not connected even with all arcs working");
    return warnings;
}

std::string Network::to_edge_list() const {
    const bool emit_probs =
        std::any_of(probs_.begin(), probs_.end(), [](double p) { return p != 1.0; });
    std::string out = std::to_string(n_) + " " + std::to_string(arc_count()) + " " +
                      std::to_string(source_) + " " + std::to_string(sink_) + "\n";
    for (const Arc& a : arcs_) {
        out += std::to_string(a.u) + " " + std::to_string(a.v);
        if (emit_probs) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", probs_[a.id - 1]);
            out += " ";
            out += buf;
        }
        out += "\n";
    }
    return out;
}

bool is_st_connected(const Network& net, const StateVector& x) {
    if (x.size() != static_cast<std::size_t>(net.arc_count()))
        throw std::invalid_argument("state vector length does not match arc count");
    return detail::st_connected_when(net, [&x](int arc) { return x.bit(arc); });
}

bool is_st_connected(const Network& net, std::uint64_t arc_mask) {
    return detail::st_connected_when(net,
                                     [arc_mask](int arc) { return (arc_mask >> (arc - 1)) & 1u; });
}

} // namespace binpath
