#include "doctest.h"

#include "isingtp/corpus.hpp"
#include "isingtp/directed.hpp"
#include "isingtp/errors.hpp"
#include "isingtp/graph.hpp"

#include <algorithm>
#include <string>

using namespace isingtp;

namespace {

const char* kSingleEdge = R"({
  "vertices": 2,
  "edges": [{"id": 0, "u": 0, "v": 1, "x": "1/2"}],
  "rotations": {"0": [0], "1": [0]},
  "boundary": [{"v": 0, "color": "o"}, {"v": 1, "color": "o"}]
})";

const char* kTriangle = R"({
  "vertices": 3,
  "edges": [{"id": 0, "u": 0, "v": 1, "x": "1/2"},
            {"id": 1, "u": 1, "v": 2, "x": "1/2"},
            {"id": 2, "u": 2, "v": 0, "x": "1/2"}],
  "rotations": {"0": [0, 2], "1": [1, 0], "2": [2, 1]},
  "boundary": [{"v": 0, "color": "o"}, {"v": 1, "color": "o"}, {"v": 2, "color": "b"}]
})";

GraphData k5_data() {
  GraphData d;
  d.vertex_count = 5;
  int id = 0;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) d.edges.push_back({id++, u, v, Rational(1, 2)});
  d.rotations.assign(5, {});
  for (const auto& e : d.edges) {
    d.rotations[static_cast<std::size_t>(e.u)].push_back(e.id);
    d.rotations[static_cast<std::size_t>(e.v)].push_back(e.id);
  }
  d.boundary = {{0, Color::Open}, {1, Color::Open}, {2, Color::Open}};
  return d;
}

int index_in(const std::vector<int>& rot, int arc) {
  return static_cast<int>(std::find(rot.begin(), rot.end(), arc) - rot.begin());
}

}  // namespace

TEST_SUITE("core-graph") {
  TEST_CASE("parse the smallest documents") {
    PlanarGraph e = parse_graph(kSingleEdge);
    CHECK(e.vertex_count() == 2);
    CHECK(e.edge_count() == 1);
    CHECK(e.boundary_size() == 2);
    CHECK(e.edge(0).x == Rational(1, 2));

    PlanarGraph t = parse_graph(kTriangle);
    CHECK(t.edge_count() == 3);
    CHECK(t.embedding().faces == 2);
    CHECK(t.embedding().euler_ok);
    CHECK(t.color(2) == Color::Filled);
    CHECK(t.boundary_position(1) == 1);
  }

  TEST_CASE("boundary order that no face walks is rejected") {
    // 4-cycle listed 0,2,1,3: neither face of the cycle visits vertices in that order
    PlanarGraph c = cycle_graph(4, uniform_weights(4, Rational(1, 3)));
    GraphData d = c.data();
    std::swap(d.boundary[1], d.boundary[2]);
    CHECK_THROWS_AS(PlanarGraph{d}, EmbeddingError);
  }

  TEST_CASE("Euler characteristic of K4 and K5") {
    PlanarGraph k4 = k4_graph(mixed_weights(6));
    CHECK(k4.embedding().faces == 4);
    CHECK(k4.embedding().euler_ok);
    EmbeddingReport r = validate_embedding(k5_data());
    CHECK_FALSE(r.euler_ok);
    CHECK_THROWS_AS(PlanarGraph{k5_data()}, EmbeddingError);
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_graph("{ not json"), InputError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": 2})"), InputError);
    std::string bad_weight = kSingleEdge;
    bad_weight.replace(bad_weight.find("1/2"), 3, "3/2");
    CHECK_THROWS_AS(parse_graph(bad_weight), InputError);
    std::string bad_color = kSingleEdge;
    bad_color.replace(bad_color.find("\"o\""), 3, "\"q\"");
    CHECK_THROWS_AS(parse_graph(bad_color), InputError);
  }

  TEST_CASE("json round trip") {
    for (const auto& ng : identity_corpus()) {
      PlanarGraph back = parse_graph(graph_to_json(ng.graph));
      CHECK(back.vertex_count() == ng.graph.vertex_count());
      CHECK(back.edge_count() == ng.graph.edge_count());
      for (int e = 0; e < back.edge_count(); ++e) CHECK(back.edge(e).x == ng.graph.edge(e).x);
      for (int v = 0; v < back.vertex_count(); ++v) CHECK(back.rotation(v) == ng.graph.rotation(v));
      CHECK(back.boundary_size() == ng.graph.boundary_size());
    }
  }

  TEST_CASE("shipped graph files load") {
    for (const char* name : {"single_edge", "path3", "triangle", "cycle4", "k4", "grid3x3", "theta", "wheel5",
                             "bowtie", "dumbbell"}) {
      CAPTURE(name);
      PlanarGraph g = load_graph(std::string(ISINGTP_DATA_DIR) + "/graphs/" + name + ".json");
      CHECK(g.embedding().ok());
    }
  }

  TEST_CASE("corpus outer faces") {
    auto corpus = identity_corpus();
    auto find = [&](const std::string& n) {
      return std::find_if(corpus.begin(), corpus.end(), [&](const NamedGraph& g) { return g.name == n; })->graph;
    };
    CHECK(find("grid3x3").boundary_size() == 8);  // the centre is interior
    CHECK(find("wheel5").boundary_size() == 4);   // the hub is interior
    CHECK(find("k4").boundary_size() == 3);
    CHECK(find("theta").boundary_size() == 4);
    for (const auto& ng : corpus) CHECK(ng.graph.embedding().ok());
  }

  TEST_CASE("directed modification weights") {
    DirectedModification d(single_edge(Rational(1, 2)));
    CHECK(d.arc(d.middle(0)).weight == Rational(2, 3));
    CHECK(d.arc(d.side1(0)).weight == Rational(1, 4));
    CHECK(d.arc(d.side2(0)).weight == Rational(1, 4));
    CHECK(d.arc(d.source_arc(0)).weight == 1);

    DirectedModification e(single_edge(Rational(3, 5)));
    CHECK(e.arc(e.middle(0)).weight == Rational(15, 16));
    CHECK(e.arc(e.side1(0)).weight == Rational(3, 10));

    // sides run against the middle
    CHECK(d.arc(d.side1(0)).tail == d.arc(d.middle(0)).head);
    CHECK(d.arc(d.side2(0)).head == d.arc(d.middle(0)).tail);
  }

  TEST_CASE("middle orientation override") {
    PlanarGraph g = path_graph(3, mixed_weights(2));
    DirectedModification d(g, std::vector<bool>{false, true});
    CHECK(d.middle_tail(0) == 1);
    CHECK(d.middle_head(0) == 0);
    CHECK(d.middle_tail(1) == 1);
  }

  TEST_CASE("stub order encodes the colour") {
    PlanarGraph t = parse_graph(kTriangle);
    DirectedModification d(t);
    for (int p = 0; p < t.boundary_size(); ++p) {
      int v = t.boundary()[static_cast<std::size_t>(p)].vertex;
      const auto& rot = d.rotation(v);
      const int n = static_cast<int>(rot.size());
      int sink = index_in(rot, d.sink_arc(p)), source = index_in(rot, d.source_arc(p));
      REQUIRE(sink < n);
      REQUIRE(source < n);
      if (t.color(v) == Color::Open) CHECK((sink + 1) % n == source);
      else CHECK((source + 1) % n == sink);
      CHECK(d.arc(d.source_arc(p)).head == v);
      CHECK(d.arc(d.sink_arc(p)).tail == v);
    }
  }

  TEST_CASE("recolouring and reweighting keep the embedding") {
    PlanarGraph g = identity_corpus()[4].graph;
    PlanarGraph h = g.recolored(std::vector<Color>(static_cast<std::size_t>(g.boundary_size()), Color::Filled));
    for (const auto& b : h.boundary()) CHECK(b.color == Color::Filled);
    CHECK_THROWS_AS(g.recolored({Color::Open}), InputError);
    PlanarGraph w = g.reweighted(Rational(1, 7));
    for (const auto& e : w.edges()) CHECK(e.x == Rational(1, 7));
  }
}
