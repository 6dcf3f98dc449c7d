#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hadwiger/enumerate.hpp"
#include "hadwiger/errors.hpp"
#include "hadwiger/families.hpp"
#include "hadwiger/graph_io.hpp"
#include "test_util.hpp"

using namespace hadwiger;

TEST_CASE("parse_graph happy path")
{
    Graph c3 = parse_graph("3 3\n0 1\n1 2\n2 0\n");
    CHECK(c3 == test_util::make_cycle(3));

    // comments, blank lines, extra whitespace
    Graph g = parse_graph("# triangle\n\n 3   3 \n0 1\n# middle\n1 2\n2 0\n");
    CHECK(g == c3);
}

TEST_CASE("parse_graph error positions")
{
    auto line_of = [](const char* text) {
        try {
            parse_graph(text);
        } catch (const parse_error& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("x y\n") == 1);
    CHECK(line_of("3\n") == 1);
    CHECK(line_of("2 1\n0 0\n") == 2);
    CHECK(line_of("2 1\n0 2\n") == 2);
    CHECK(line_of("3 2\n0 1\n1 0\n") == 3);          // duplicate edge
    CHECK(line_of("# c\n3 2\n0 1\n# c\n1 0\n") == 5); // duplicate after comments
    CHECK(line_of("2 2\n0 1\n") >= 1);                // truncated edge block
    CHECK(line_of("2 1\n0 1\n0 1\n") == 3);           // trailing content
}

TEST_CASE("serialize matches the derived D_{3,9} edge block")
{
    CHECK(serialize_graph(build_d_r_n(3, 9))
          == "9 9\n0 3\n1 3\n1 4\n2 5\n2 6\n3 6\n4 7\n5 7\n5 8\n");
}

TEST_CASE("round trip on 1000 seeded random graphs")
{
    std::mt19937_64 rng(0xC0FFEE);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        Graph g = test_util::random_graph(n, 0.4, rng);
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
}

TEST_CASE("partition files")
{
    MinorWitness w = parse_partition("0 3 6\n1 4 7\n# comment\n2 5 8\n", 9);
    CHECK(w.classes == std::vector<std::vector<int>>{{0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
    CHECK(parse_partition(serialize_partition(w), 9).classes == w.classes);
    CHECK_THROWS_AS(parse_partition("0 9\n", 9), parse_error);
}

TEST_CASE("random_connected_graph")
{
    CHECK(random_connected_graph(1, 0.5, 7).vertex_count() == 1);
    CHECK(random_connected_graph(5, 1.0, 7) == test_util::make_complete(5));
    CHECK(random_connected_graph(6, 0.5, 123) == random_connected_graph(6, 0.5, 123));
    CHECK(random_connected_graph(6, 0.5, 123) != random_connected_graph(6, 0.5, 124));
    for (int trial = 0; trial < 50; ++trial)
        CHECK(is_connected(random_connected_graph(7, 0.4, 1000 + trial)));
    // an edge probability this small never yields a connected sample
    CHECK_THROWS_AS(random_connected_graph(40, 1e-9, 1), resource_error);
    CHECK_THROWS_AS(random_connected_graph(4, 0.0, 1), precondition_error);
    CHECK_THROWS_AS(random_connected_graph(0, 0.5, 1), precondition_error);
}

TEST_CASE("enumeration counts match the labeled connected graph numbers")
{
    CHECK(connected_graph_masks(1).size() == 1);
    CHECK(connected_graph_masks(2).size() == 1);
    CHECK(connected_graph_masks(3).size() == 4);
    CHECK(connected_graph_masks(4).size() == 38);
    CHECK(connected_graph_masks(5).size() == 728);
    CHECK(connected_graph_masks(6).size() == 26704);
    CHECK_THROWS_AS(connected_graph_masks(8), resource_error);
}

TEST_CASE("parallel enumeration equals the serial reference")
{
    for (int n = 1; n <= 6; ++n)
        CHECK(connected_graph_masks(n) == connected_graph_masks_serial(n));
}

TEST_CASE("enumeration yields each connected graph exactly once")
{
    int count = 0;
    std::uint64_t previous_mask = 0;
    auto masks = connected_graph_masks(5);
    for_each_connected(5, [&](const Graph& g) {
        CHECK(g.vertex_count() == 5);
        CHECK(is_connected(g));
        CHECK(graph_from_edge_mask(5, masks[count]) == g);
        if (count > 0)
            CHECK(masks[count] > previous_mask);
        previous_mask = masks[count];
        ++count;
    });
    CHECK(count == 728);
}
