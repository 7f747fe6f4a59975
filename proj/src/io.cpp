#include "skewpf/io.hpp"

#include <fstream>
#include <sstream>

#include "skewpf/errors.hpp"

namespace skewpf {

namespace {

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

struct LineReader {
    std::istream& in;
    int line_no = 0;
    std::string pending;
    bool has_pending = false;

    explicit LineReader(std::istream& s) : in(s) {}

    // Next non-empty payload line, or empty optional at end of stream.
    bool next(std::string& out) {
        if (has_pending) {
            out = pending;
            has_pending = false;
            return true;
        }
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream probe(strip_comment(line));
            std::string token;
            if (probe >> token) {
                out = strip_comment(line);
                return true;
            }
        }
        return false;
    }

    void push_back(const std::string& line) {
        pending = line;
        has_pending = true;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("line " + std::to_string(line_no) + ": " + what);
    }
};

Multigraph parse_graph_body(LineReader& reader, std::vector<std::pair<int, int>>* labels) {
    std::string line;
    if (!reader.next(line)) reader.fail("expected 'graph <vertices> <circles>'");
    std::istringstream head(line);
    std::string keyword;
    Multigraph g;
    head >> keyword >> g.vertex_count >> g.circle_count;
    if (head.fail() || keyword != "graph" || g.vertex_count < 0 || g.circle_count < 0) {
        reader.fail("expected 'graph <vertices> <circles>'");
    }
    if (g.vertex_count > 10000000 || g.circle_count > 10000000) {
        reader.fail("implausibly large header counts");
    }
    while (reader.next(line)) {
        std::istringstream row(line);
        row >> keyword;
        if (keyword == "edge") {
            int u = -1, v = -1;
            row >> u >> v;
            if (row.fail()) reader.fail("expected 'edge <u> <v>'");
            if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count) {
                reader.fail("edge endpoint out of range");
            }
            g.add_edge(u, v);
        } else if (keyword == "label" && labels != nullptr) {
            int v = -1, index = -1;
            row >> v >> index;
            if (row.fail()) reader.fail("expected 'label <vertex> <index>'");
            labels->emplace_back(v, index);
        } else if (keyword == "graph") {
            reader.push_back(line);
            break;
        } else {
            reader.fail("unknown directive '" + keyword + "'");
        }
    }
    return g;
}

}  // namespace

Multigraph parse_graph(std::istream& in) {
    LineReader reader(in);
    return parse_graph_body(reader, nullptr);
}

Multigraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_graph(in);
}

namespace {

Fragment assemble_fragment(const Multigraph& g, const std::vector<std::pair<int, int>>& labels) {
    Fragment f;
    f.graph = g;
    int k = 0;
    for (const auto& [v, index] : labels) k = std::max(k, index);
    f.labels.assign(k, -1);
    for (const auto& [v, index] : labels) {
        if (index < 1 || index > k) throw ParseError("label index out of range");
        if (f.labels[index - 1] != -1) throw ParseError("duplicate label index");
        f.labels[index - 1] = v;
    }
    for (int i = 0; i < k; ++i) {
        if (f.labels[i] == -1) throw ParseError("label indices must be 1..k without gaps");
    }
    f.validate();
    return f;
}

}  // namespace

Fragment parse_fragment(std::istream& in) {
    LineReader reader(in);
    std::vector<std::pair<int, int>> labels;
    const Multigraph g = parse_graph_body(reader, &labels);
    return assemble_fragment(g, labels);
}

std::vector<Fragment> parse_fragments_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    LineReader reader(in);
    std::vector<Fragment> out;
    std::string probe;
    while (reader.next(probe)) {
        reader.push_back(probe);
        std::vector<std::pair<int, int>> labels;
        const Multigraph g = parse_graph_body(reader, &labels);
        out.push_back(assemble_fragment(g, labels));
    }
    if (out.empty()) throw ParseError("no fragments in '" + path + "'");
    return out;
}

SkewTensor parse_skew_tensor(std::istream& in) {
    LineReader reader(in);
    std::string line;
    if (!reader.next(line)) reader.fail("expected 'skewtensor <ell>'");
    std::istringstream head(line);
    std::string keyword;
    SkewTensor h;
    head >> keyword >> h.ell;
    if (head.fail() || keyword != "skewtensor" || h.ell < 1) {
        reader.fail("expected 'skewtensor <ell>'");
    }
    while (reader.next(line)) {
        std::istringstream row(line);
        std::string subset_text, value_text;
        row >> subset_text >> value_text;
        if (row.fail()) reader.fail("expected '<subset> <value>'");
        std::vector<int> subset;
        if (subset_text != "-") {
            std::istringstream items(subset_text);
            std::string item;
            while (std::getline(items, item, ',')) {
                try {
                    subset.push_back(std::stoi(item));
                } catch (const std::exception&) {
                    reader.fail("bad subset entry '" + item + "'");
                }
            }
            for (size_t i = 0; i < subset.size(); ++i) {
                if (subset[i] < 1 || subset[i] > 2 * h.ell) reader.fail("subset entry out of range");
                if (i > 0 && subset[i] <= subset[i - 1]) {
                    reader.fail("subset must be sorted strictly increasing");
                }
            }
        }
        try {
            const Rat value = parse_rational(value_text);
            if (value != 0) h.coeffs[subset] = value;
        } catch (const ParseError& e) {
            reader.fail(e.what());
        }
    }
    return h;
}

SkewTensor parse_skew_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_skew_tensor(in);
}

std::string format_graph(const Multigraph& g) {
    std::ostringstream out;
    out << "graph " << g.vertex_count << ' ' << g.circle_count << '\n';
    for (const auto& [u, v] : g.edges) out << "edge " << u << ' ' << v << '\n';
    return out.str();
}

std::string format_skew_tensor(const SkewTensor& h) {
    std::ostringstream out;
    out << "skewtensor " << h.ell << '\n';
    for (const auto& [subset, value] : h.coeffs) {
        if (value == 0) continue;
        if (subset.empty()) {
            out << '-';
        } else {
            for (size_t i = 0; i < subset.size(); ++i) {
                if (i) out << ',';
                out << subset[i];
            }
        }
        out << ' ' << to_string(value) << '\n';
    }
    return out.str();
}

Multigraph graph_from_name_or_file(const std::string& arg) {
    auto parse_suffix_int = [](const std::string& s, size_t from) -> int {
        if (from >= s.size()) return -1;
        for (size_t i = from; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return -1;
        }
        return std::stoi(s.substr(from));
    };
    if (arg == "empty") return Multigraph{};
    if (arg == "circle") return Multigraph::circles(1);
    if (arg == "bowtie") return Multigraph::bowtie();
    if (arg == "fig8" || arg == "figure8") return Multigraph::bouquet(2);
    if ((arg.size() > 1 && (arg[0] == 'C' || arg[0] == 'c')) && parse_suffix_int(arg, 1) > 0) {
        return Multigraph::cycle(parse_suffix_int(arg, 1));
    }
    if ((arg.size() > 1 && (arg[0] == 'P' || arg[0] == 'p')) && parse_suffix_int(arg, 1) > 0) {
        return Multigraph::path(parse_suffix_int(arg, 1));
    }
    if (arg.rfind("bouquet", 0) == 0 && parse_suffix_int(arg, 7) >= 0) {
        return Multigraph::bouquet(parse_suffix_int(arg, 7));
    }
    return parse_graph_file(arg);
}

}  // namespace skewpf
