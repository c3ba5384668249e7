#include "bbnet/edgelist.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>

namespace bbnet {

namespace {

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(delim, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

Timestamp parse_time(const std::string& s) {
    std::size_t used = 0;
    Timestamp t = std::stoll(s, &used);
    if (used != s.size() || s.empty()) throw std::invalid_argument("not an integer");
    return t;
}

[[noreturn]] void malformed(std::int64_t line_no, const std::string& line, const char* why) {
    throw std::runtime_error("malformed line " + std::to_string(line_no) + " (" + why +
                             "): " + line);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

ParseResult parse_edges(std::istream& in, const ColumnMap& colmap) {
    if (colmap.col_a == colmap.col_b || colmap.col_a == colmap.col_t ||
        colmap.col_b == colmap.col_t) {
        throw std::invalid_argument("column map indices must be distinct");
    }
    int needed = std::max({colmap.col_a, colmap.col_b, colmap.col_t}) + 1;

    ParseResult result;
    std::map<std::pair<std::string, std::string>, std::size_t> seen;
    std::string line;
    std::int64_t line_no = 0;
    int to_skip = colmap.skip_header;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        if (to_skip > 0) {
            --to_skip;
            continue;
        }
        auto fields = split(line, colmap.delimiter);
        if (static_cast<int>(fields.size()) < needed) malformed(line_no, line, "too few columns");
        const std::string& a = fields[static_cast<std::size_t>(colmap.col_a)];
        const std::string& b = fields[static_cast<std::size_t>(colmap.col_b)];
        if (a.empty() || b.empty()) malformed(line_no, line, "empty node id");
        Timestamp t;
        try {
            t = parse_time(fields[static_cast<std::size_t>(colmap.col_t)]);
        } catch (const std::exception&) {
            malformed(line_no, line, "non-integer time");
        }
        if (a == b) {
            ++result.self_loops_dropped;
            continue;
        }
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        auto it = seen.find(key);
        if (it != seen.end()) {
            ++result.duplicates_dropped;
            result.edges[it->second].time = std::min(result.edges[it->second].time, t);
            continue;
        }
        seen.emplace(std::move(key), result.edges.size());
        result.edges.push_back(TimedEdgeRecord{a, b, t});
    }
    return result;
}

BuiltGraph build_graph(const std::vector<TimedEdgeRecord>& edges) {
    if (edges.empty()) throw std::invalid_argument("build_graph: empty edge list");

    std::map<std::string, Timestamp> birth;
    for (const TimedEdgeRecord& e : edges) {
        for (const std::string* id : {&e.src, &e.dst}) {
            auto it = birth.find(*id);
            if (it == birth.end()) {
                birth.emplace(*id, e.time);
            } else {
                it->second = std::min(it->second, e.time);
            }
        }
    }
    std::vector<std::pair<Timestamp, const std::string*>> node_order;
    node_order.reserve(birth.size());
    for (const auto& [id, t] : birth) node_order.emplace_back(t, &id);
    std::sort(node_order.begin(), node_order.end(),
              [](const auto& x, const auto& y) {
                  return x.first != y.first ? x.first < y.first : *x.second < *y.second;
              });

    std::vector<TimedEdgeRecord> sorted = edges;
    std::sort(sorted.begin(), sorted.end(), [](const TimedEdgeRecord& x, const TimedEdgeRecord& y) {
        if (x.time != y.time) return x.time < y.time;
        if (x.src != y.src) return x.src < y.src;
        return x.dst < y.dst;
    });

    // interleave: all nodes born at or before t enter before the first edge at t
    BuiltGraph built;
    std::size_t next_node = 0;
    for (const TimedEdgeRecord& e : sorted) {
        while (next_node < node_order.size() && node_order[next_node].first <= e.time) {
            built.graph.add_node(*node_order[next_node].second, node_order[next_node].first);
            ++next_node;
        }
        built.graph.add_edge(e.src, e.dst, e.time);
    }

    for (const TimedEdgeRecord& e : sorted) {
        if (built.snapshot_times.empty() || built.snapshot_times.back() != e.time) {
            built.snapshot_times.push_back(e.time);
        }
    }
    return built;
}

void serialize_graph(const EvolvingGraph& graph, std::ostream& out,
                     const std::vector<std::string>& header_comments) {
    for (const std::string& c : header_comments) out << "# " << c << "\n";
    std::vector<TimedEdgeRecord> rows;
    rows.reserve(graph.edge_count());
    for (const TimedEdge& e : graph.edges()) {
        const std::string& a = graph.node(e.a).id;
        const std::string& b = graph.node(e.b).id;
        rows.push_back(a < b ? TimedEdgeRecord{a, b, e.time} : TimedEdgeRecord{b, a, e.time});
    }
    std::sort(rows.begin(), rows.end(), [](const TimedEdgeRecord& x, const TimedEdgeRecord& y) {
        if (x.time != y.time) return x.time < y.time;
        if (x.src != y.src) return x.src < y.src;
        return x.dst < y.dst;
    });
    for (const TimedEdgeRecord& e : rows) {
        out << e.src << '\t' << e.dst << '\t' << e.time << '\n';
    }
}

void serialize_node_metadata(const EvolvingGraph& graph, std::ostream& out,
                             const std::vector<std::string>& header_comments) {
    for (const std::string& c : header_comments) out << "# " << c << "\n";
    out << "# id\tbirth_time\tfitness\tbirth_degree\n";
    std::vector<const NodeRecord*> rows;
    rows.reserve(graph.node_count());
    for (const NodeRecord& r : graph.nodes()) rows.push_back(&r);
    std::sort(rows.begin(), rows.end(), [](const NodeRecord* x, const NodeRecord* y) {
        if (x->birth_time != y->birth_time) return x->birth_time < y->birth_time;
        return x->id < y->id;
    });
    for (const NodeRecord* r : rows) {
        out << r->id << '\t' << r->birth_time << '\t'
            << (r->has_fitness() ? format_double(r->fitness) : std::string("-")) << '\t'
            << r->birth_degree << '\n';
    }
}

std::vector<NodeMetadataRecord> parse_node_metadata(std::istream& in) {
    std::vector<NodeMetadataRecord> out;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split(line, '\t');
        if (fields.size() < 4) malformed(line_no, line, "expected 4 columns");
        NodeMetadataRecord rec;
        rec.id = fields[0];
        try {
            rec.birth_time = parse_time(fields[1]);
            rec.fitness = fields[2] == "-" ? -1.0 : std::stod(fields[2]);
            rec.birth_degree = fields[3] == "-" ? 0 : parse_time(fields[3]);
        } catch (const std::exception&) {
            malformed(line_no, line, "bad numeric field");
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace bbnet
