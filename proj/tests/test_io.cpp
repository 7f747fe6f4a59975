#include <fstream>
#include <sstream>

#include "doctest.h"
#include "skewpf/errors.hpp"
#include "skewpf/io.hpp"
#include "skewpf/partition_fn.hpp"
#include "test_util.hpp"

using namespace skewpf;

TEST_CASE("graph parsing round trip") {
    std::istringstream in(
        "# triangle with a circle\n"
        "graph 3 1\n"
        "edge 0 1\n"
        "edge 1 2   # closing\n"
        "edge 2 0\n");
    const Multigraph g = parse_graph(in);
    CHECK(g.vertex_count == 3);
    CHECK(g.circle_count == 1);
    CHECK(g.edge_count() == 3);

    std::istringstream again(format_graph(g));
    CHECK(canonical_edge_key(parse_graph(again)) == canonical_edge_key(g));
}

TEST_CASE("graph parse errors carry line information") {
    std::istringstream missing("edge 0 1\n");
    CHECK_THROWS_AS(parse_graph(missing), ParseError);
    std::istringstream bad_vertex("graph 2 0\nedge 0 5\n");
    CHECK_THROWS_AS(parse_graph(bad_vertex), ParseError);
    std::istringstream junk("graph 1 0\nwedge 0 0\n");
    CHECK_THROWS_AS(parse_graph(junk), ParseError);
}

TEST_CASE("fragment parsing") {
    std::istringstream in(
        "graph 3 0\n"
        "edge 1 0\n"
        "edge 0 2\n"
        "label 1 1\n"
        "label 2 2\n");
    const Fragment f = parse_fragment(in);
    CHECK(f.k() == 2);
    CHECK(f.labels == std::vector<int>{1, 2});

    std::istringstream degree_two(
        "graph 2 0\nedge 0 1\nedge 0 1\nlabel 0 1\n");
    CHECK_THROWS_AS(parse_fragment(degree_two), Error);
}

TEST_CASE("fragment files may hold several fragments") {
    const std::string content =
        "graph 2 0\nedge 0 1\nlabel 0 1\nlabel 1 2\n"
        "graph 3 0\nedge 1 0\nedge 0 2\nlabel 1 1\nlabel 2 2\n";
    const std::string path = "/tmp/skewpf_test_fragments.txt";
    {
        std::ofstream out(path);
        out << content;
    }
    const auto fragments = parse_fragments_file(path);
    REQUIRE(fragments.size() == 2);
    CHECK(fragments[0].graph.edge_count() == 1);
    CHECK(fragments[1].graph.edge_count() == 2);
}

TEST_CASE("tensor parsing matches the built-in model") {
    std::istringstream in(
        "skewtensor 1\n"
        "- 1\n"
        "1,2 -1\n");
    const SkewTensor h = parse_skew_tensor(in);
    const SkewTensor martin = build_martin_model(1);
    CHECK(h.ell == 1);
    CHECK(h.coeffs == martin.coeffs);

    std::istringstream round(format_skew_tensor(build_martin_model(2)));
    CHECK(parse_skew_tensor(round).coeffs == build_martin_model(2).coeffs);
}

TEST_CASE("tensor parse errors") {
    std::istringstream unsorted("skewtensor 1\n2,1 1\n");
    CHECK_THROWS_AS(parse_skew_tensor(unsorted), ParseError);
    std::istringstream out_of_range("skewtensor 1\n3 1\n");
    CHECK_THROWS_AS(parse_skew_tensor(out_of_range), ParseError);
    std::istringstream bad_value("skewtensor 1\n1,2 x\n");
    CHECK_THROWS_AS(parse_skew_tensor(bad_value), ParseError);
    std::istringstream rational("skewtensor 1\n1 3/4\n");
    CHECK(parse_skew_tensor(rational).coeff({1}) == Rat(3, 4));
}

TEST_CASE("named graphs") {
    CHECK(canonical_edge_key(graph_from_name_or_file("C4")) ==
          canonical_edge_key(Multigraph::cycle(4)));
    CHECK(graph_from_name_or_file("circle").circle_count == 1);
    CHECK(graph_from_name_or_file("fig8").edge_count() == 2);
    CHECK(graph_from_name_or_file("empty").empty());
    CHECK(graph_from_name_or_file("bouquet3").edge_count() == 3);
    CHECK_THROWS_AS(graph_from_name_or_file("/nonexistent/file"), ParseError);
}
