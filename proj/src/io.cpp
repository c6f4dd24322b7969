#include "lpmwc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "lpmwc/errors.hpp"

namespace lpmwc {

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string format_p(double p) { return p == kInfiniteP ? "inf" : format_double(p); }

double parse_double(const std::string& token, const std::string& what, int line_no) {
    double value = 0.0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size())
        throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + token + "'");
    return value;
}

namespace {

long parse_int(const std::string& token, const std::string& what, int line_no) {
    long value = 0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size())
        throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + token + "'");
    return value;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

// strips the comment tail; returns the recorded comment text when the whole
// line is a comment
std::optional<std::string> strip_comment(std::string& line) {
    auto pos = line.find('#');
    if (pos == std::string::npos) return std::nullopt;
    std::string tail = line.substr(pos + 1);
    bool whole_line = line.find_first_not_of(" \t") == pos;
    line.erase(pos);
    if (!whole_line) return std::nullopt;
    if (!tail.empty() && tail.front() == ' ') tail.erase(0, 1);
    return tail;
}

}  // namespace

std::optional<double> InstanceFile::threshold() const {
    for (const auto& c : comments) {
        auto toks = tokenize(c);
        if (toks.size() == 2 && toks[0] == "threshold") {
            double v = 0.0;
            auto res = std::from_chars(toks[1].data(), toks[1].data() + toks[1].size(), v);
            if (res.ec == std::errc()) return v;
        }
    }
    return std::nullopt;
}

InstanceFile make_instance_file(const GeneratedInstance& gen) {
    InstanceFile file;
    file.instance = gen.instance;
    file.comments.push_back("kind " + gadget_kind_name(gen.meta.kind));
    for (const auto& [name, value] : gen.meta.params) file.comments.push_back(name + " " + format_double(value));
    if (gen.meta.has_threshold) file.comments.push_back("threshold " + format_double(gen.meta.threshold));
    return file;
}

std::string serialize_instance(const InstanceFile& file) {
    std::ostringstream out;
    out << "lpmwc 1\n";
    for (const auto& c : file.comments) out << "# " << c << "\n";
    out << "p " << format_p(file.instance.p) << "\n";
    out << "graph " << file.instance.graph.n << " " << file.instance.graph.edges.size() << "\n";
    out << "terminals " << file.instance.terminals.size();
    for (int t : file.instance.terminals) out << " " << t;
    out << "\n";
    for (const auto& e : file.instance.graph.edges)
        out << e.u << " " << e.v << " " << format_double(e.w) << "\n";
    return out.str();
}

InstanceFile parse_instance(std::istream& in) {
    InstanceFile file;
    std::string line;
    int line_no = 0;
    int stage = 0;  // 0: header, 1: p, 2: graph, 3: terminals, 4: edges
    long n = 0, m = 0, edges_read = 0;

    while (std::getline(in, line)) {
        ++line_no;
        auto comment = strip_comment(line);
        if (comment) {
            file.comments.push_back(*comment);
            continue;
        }
        auto toks = tokenize(line);
        if (toks.empty()) continue;

        switch (stage) {
            case 0:
                if (toks.size() != 2 || toks[0] != "lpmwc" || toks[1] != "1")
                    throw ParseError("line " + std::to_string(line_no) + ": expected header 'lpmwc 1'");
                stage = 1;
                break;
            case 1: {
                if (toks.size() != 2 || toks[0] != "p")
                    throw ParseError("line " + std::to_string(line_no) + ": expected 'p <value>'");
                if (toks[1] == "inf")
                    file.instance.p = kInfiniteP;
                else
                    file.instance.p = parse_double(toks[1], "exponent", line_no);
                if (!(file.instance.p >= 1.0))
                    throw ParseError("line " + std::to_string(line_no) + ": p must be >= 1");
                stage = 2;
                break;
            }
            case 2:
                if (toks.size() != 3 || toks[0] != "graph")
                    throw ParseError("line " + std::to_string(line_no) + ": expected 'graph <n> <m>'");
                n = parse_int(toks[1], "vertex count", line_no);
                m = parse_int(toks[2], "edge count", line_no);
                if (n < 1 || m < 0) throw ParseError("line " + std::to_string(line_no) + ": bad graph size");
                file.instance.graph = Graph(int(n));
                stage = 3;
                break;
            case 3: {
                if (toks.size() < 2 || toks[0] != "terminals")
                    throw ParseError("line " + std::to_string(line_no) + ": expected 'terminals <k> <ids>'");
                long k = parse_int(toks[1], "terminal count", line_no);
                if (long(toks.size()) != 2 + k)
                    throw ParseError("line " + std::to_string(line_no) + ": terminal count mismatch");
                for (long i = 0; i < k; ++i)
                    file.instance.terminals.push_back(int(parse_int(toks[2 + i], "terminal id", line_no)));
                stage = 4;
                break;
            }
            case 4: {
                if (toks.size() != 3)
                    throw ParseError("line " + std::to_string(line_no) + ": expected '<u> <v> <w>'");
                if (edges_read >= m)
                    throw ParseError("line " + std::to_string(line_no) + ": more edges than declared");
                long u = parse_int(toks[0], "endpoint", line_no);
                long v = parse_int(toks[1], "endpoint", line_no);
                double w = parse_double(toks[2], "weight", line_no);
                try {
                    file.instance.graph.add_edge(int(u), int(v), w);
                } catch (const std::invalid_argument& err) {
                    throw ParseError("line " + std::to_string(line_no) + ": " + err.what());
                }
                ++edges_read;
                break;
            }
        }
    }
    if (stage < 4) throw ParseError("truncated instance file");
    if (edges_read != m) throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges_read));
    try {
        file.instance.validate();
    } catch (const std::invalid_argument& err) {
        throw ParseError(std::string("invalid instance: ") + err.what());
    }
    return file;
}

InstanceFile parse_instance_string(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

InstanceFile load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file '" + path + "'");
    return parse_instance(in);
}

std::string serialize_partition(const Instance& inst, const MultiwayCut& cut) {
    std::ostringstream out;
    auto parts = cut.parts(inst);
    for (int i = 0; i < inst.k(); ++i) {
        out << "part " << (i + 1);
        parts[i].for_each([&](int v) { out << " " << v; });
        out << "\n";
    }
    return out.str();
}

PartitionFile parse_partition(std::istream& in) {
    PartitionFile file;
    std::string line;
    int line_no = 0;
    bool saw_part = false, saw_frac = false;
    while (std::getline(in, line)) {
        ++line_no;
        strip_comment(line);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "part") {
            if (toks.size() < 2) throw ParseError("line " + std::to_string(line_no) + ": expected 'part <i> <ids>'");
            saw_part = true;
            int index = int(parse_int(toks[1], "part index", line_no));
            std::vector<int> ids;
            for (std::size_t i = 2; i < toks.size(); ++i)
                ids.push_back(int(parse_int(toks[i], "vertex id", line_no)));
            file.parts.emplace_back(index, std::move(ids));
        } else if (toks[0] == "frac") {
            if (toks.size() < 3) throw ParseError("line " + std::to_string(line_no) + ": expected 'frac <v> <x...>'");
            saw_frac = true;
            int v = int(parse_int(toks[1], "vertex id", line_no));
            std::vector<double> row;
            for (std::size_t i = 2; i < toks.size(); ++i) row.push_back(parse_double(toks[i], "coordinate", line_no));
            file.rows.emplace_back(v, std::move(row));
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" + toks[0] + "'");
        }
    }
    if (saw_part && saw_frac) throw ParseError("partition file mixes integral and fractional rows");
    if (!saw_part && !saw_frac) throw ParseError("empty partition file");
    file.fractional = saw_frac;
    return file;
}

PartitionFile load_partition(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open partition file '" + path + "'");
    std::istream& ref = in;
    return parse_partition(ref);
}

MultiwayCut partition_to_cut(const Instance& inst, const PartitionFile& file) {
    if (file.fractional) throw ParseError("expected an integral partition file");
    MultiwayCut cut;
    cut.part.assign(inst.n(), -1);
    for (const auto& [index, ids] : file.parts) {
        if (index < 1 || index > inst.k())
            throw ParseError("part index " + std::to_string(index) + " outside 1.." + std::to_string(inst.k()));
        for (int v : ids) {
            if (v < 0 || v >= inst.n()) throw ParseError("vertex " + std::to_string(v) + " outside the instance");
            if (cut.part[v] != -1) throw ParseError("vertex " + std::to_string(v) + " assigned twice");
            cut.part[v] = index - 1;
        }
    }
    for (int v = 0; v < inst.n(); ++v)
        if (cut.part[v] == -1) throw ParseError("vertex " + std::to_string(v) + " missing from the partition");
    if (!cut.valid_for(inst)) throw ParseError("partition does not place every terminal in its own part");
    return cut;
}

FractionalAssignment partition_to_fractional(const Instance& inst, const PartitionFile& file) {
    if (!file.fractional) throw ParseError("expected a fractional partition file");
    FractionalAssignment x;
    x.x.assign(inst.n(), {});
    std::vector<char> seen(inst.n(), 0);
    for (const auto& [v, row] : file.rows) {
        if (v < 0 || v >= inst.n()) throw ParseError("vertex " + std::to_string(v) + " outside the instance");
        if (seen[v]) throw ParseError("vertex " + std::to_string(v) + " listed twice");
        if (int(row.size()) != inst.k())
            throw ParseError("row of vertex " + std::to_string(v) + " has " + std::to_string(row.size()) +
                             " coordinates, expected " + std::to_string(inst.k()));
        seen[v] = 1;
        x.x[v] = row;
    }
    for (int v = 0; v < inst.n(); ++v)
        if (!seen[v]) throw ParseError("vertex " + std::to_string(v) + " missing from the fractional assignment");
    return x;
}

}  // namespace lpmwc
