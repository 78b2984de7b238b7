#include "doctest.h"

#include <algorithm>

#include "betagap/covers.hpp"
#include "betagap/error.hpp"
#include "corpus.hpp"

using namespace betagap;

namespace {

GapSet gs(const char* text) { return GapSet::parse(text); }
ParrySeq ps(const char* text) { return ParrySeq::parse(text); }

std::vector<Edge> sorted_edges(const LabeledGraph& g) {
  std::vector<Edge> e = g.edges();
  std::sort(e.begin(), e.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
  });
  return e;
}

CountMatrix golden() { return {{1, 1}, {1, 0}}; }

bool is_iso(const CountMatrix& a, const CountMatrix& b, const std::vector<std::size_t>& phi) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != b[phi[i]][phi[j]]) return false;
  return true;
}

}  // namespace

TEST_CASE("fischer_gap examples") {
  LabeledGraph g = fischer_gap(gs("{0,1}"));
  CHECK(g.vertex_count() == 2);
  CHECK(g.name(0) == "F1");
  CHECK(g.name(1) == "F10");
  CHECK(sorted_edges(g) == std::vector<Edge>{{0, 0, 1}, {0, 1, 0}, {1, 0, 1}});

  LabeledGraph h = fischer_gap(gs("0;(2,1)*"));
  CHECK(h.vertex_count() == 3);
  CHECK(h.name(2) == "F10^2");
  std::vector<Letter> into_root;
  for (const Edge& e : h.edges())
    if (e.from == 2 && e.to == 0) into_root.push_back(e.label);
  std::sort(into_root.begin(), into_root.end());
  CHECK(into_root == std::vector<Letter>{0, 1});

  LabeledGraph k = fischer_gap(gs("0;1,(2)*"));
  CHECK(k.vertex_count() == 3);
  CHECK(sorted_edges(k) == std::vector<Edge>{{0, 0, 1}, {0, 1, 0}, {1, 0, 1}, {1, 2, 0}, {2, 1, 0}});
  CHECK_FALSE(k.warnings().empty());
}

TEST_CASE("fischer_gap errors") {
  try {
    fischer_gap(gs("{3}"));
    FAIL("expected TooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooSmall);
  }
  try {
    fischer_gap(gs("trunc:squares@40"));
    FAIL("expected HorizonRequired");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HorizonRequired);
  }
  LabeledGraph t = fischer_gap(gs("trunc:squares@40"), 20);
  CHECK(t.vertex_count() == 21);
}

TEST_CASE("fischer_beta examples") {
  LabeledGraph g = fischer_beta(ps("1,1"));
  CHECK(g.vertex_count() == 2);
  CHECK(g.name(0) == "a1");
  CHECK(sorted_edges(g) == std::vector<Edge>{{0, 0, 0}, {0, 1, 1}, {1, 0, 0}});

  CHECK(fischer_beta(ps("1(1,0)*")).underlying() == CountMatrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 0}});

  LabeledGraph h = fischer_beta(ps("1,1,0,1"));
  CHECK(h.vertex_count() == 4);
  CHECK(sorted_edges(h) ==
        std::vector<Edge>{{0, 0, 0}, {0, 1, 1}, {1, 0, 0}, {1, 2, 1}, {2, 3, 0}, {3, 0, 0}});

  LabeledGraph full = fischer_beta(ps("(1)*"));
  CHECK(full.vertex_count() == 1);
  CHECK(full.underlying() == CountMatrix{{2}});

  CHECK_THROWS_AS(fischer_beta(ps("1,0,1,1")), Error);
  CHECK_THROWS_AS(fischer_beta(ps("trunc:1,1,...@10")), Error);
  CHECK(fischer_beta(ps("trunc:1,1,...@10"), 5).vertex_count() == 5);
}

TEST_CASE("check_presentation examples") {
  PresentationFlags f = check_presentation(fischer_gap(gs("{0,1}")));
  CHECK(f.right_resolving);
  CHECK(f.irreducible);
  CHECK(f.follower_separated);

  LabeledGraph bad(2);
  bad.add_edge(0, 0, 0);
  bad.add_edge(0, 1, 0);
  bad.add_edge(1, 0, 1);
  CHECK_FALSE(check_presentation(bad).right_resolving);

  LabeledGraph loops(2);
  loops.add_edge(0, 0, 0);
  loops.add_edge(1, 1, 0);
  CHECK_FALSE(check_presentation(loops).irreducible);

  LabeledGraph twins(2);
  twins.add_edge(0, 1, 0);
  twins.add_edge(1, 0, 0);
  CHECK_FALSE(check_presentation(twins).follower_separated);

}

TEST_CASE("min_factor examples") {
  LabeledGraph g = fischer_gap(gs("{0,2,3}"));
  MinFactor m = min_factor(g);
  CHECK(m.partition.size() == 2);
  CHECK(m.partition.blocks[0] == std::vector<std::size_t>{0, 2});
  CHECK(m.partition.blocks[1] == std::vector<std::size_t>{1, 3});
  CHECK(m.quotient == golden());
  CHECK(min_factor(fischer_gap(gs("{0,1}"))).partition.is_discrete());
  CHECK(min_factor(fischer_gap(gs("0;1,(2)*"))).partition.is_discrete());
}

TEST_CASE("graph_iso examples") {
  auto id = graph_iso(golden(), golden());
  REQUIRE(id);
  CHECK(*id == std::vector<std::size_t>{0, 1});

  CountMatrix beta = fischer_beta(ps("1,1,0,1")).underlying();
  CountMatrix gap = fischer_gap(gs("{0,1,3}")).underlying();
  auto phi = graph_iso(beta, gap);
  REQUIRE(phi);
  CHECK(*phi == std::vector<std::size_t>{0, 1, 2, 3});

  CountMatrix cycle{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  CHECK_FALSE(graph_iso(golden(), cycle));

  CountMatrix big(65, std::vector<std::size_t>(65, 0));
  CHECK_THROWS_AS(graph_iso(big, big), Error);
}

TEST_CASE("graph_iso finds permuted copies") {
  CountMatrix a = fischer_gap(gs("0;1,2,(3,1)*")).underlying();
  std::vector<std::size_t> perm(a.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = (i * 3 + 2) % perm.size();
  CountMatrix b(a.size(), std::vector<std::size_t>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) b[perm[i]][perm[j]] = a[i][j];
  auto phi = graph_iso(a, b);
  REQUIRE(phi);
  CHECK(is_iso(a, b, *phi));
  b[0][0] += 1;
  CHECK_FALSE(graph_iso(a, b));
}

TEST_CASE("relabel_to_gap examples") {
  CHECK(labeled_iso(relabel_to_gap(fischer_beta(ps("1,1"))), fischer_gap(gs("{0,1}"))));
  CHECK(labeled_iso(relabel_to_gap(fischer_beta(ps("1(1,0)*"))), fischer_gap(gs("0;1,(2)*"))));
  CHECK(labeled_iso(relabel_to_gap(fischer_beta(ps("1,1,0,1"))), fischer_gap(gs("{0,1,3}"))));
  LabeledGraph plain(1);
  plain.add_edge(0, 0, 0);
  try {
    relabel_to_gap(plain);
    FAIL("expected NoDistinguishedVertex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoDistinguishedVertex);
  }
}

TEST_CASE("covers are Fischer presentations") {
  for (const GapSet& s : corpus::finite_sets(7)) CHECK(check_presentation(fischer_gap(s)).all());
  for (const GapSet& s : corpus::periodic_sets({0, 1, 2}, 2, 2, 3)) {
    PresentationFlags f = check_presentation(fischer_gap(s));
    CHECK(f.irreducible);
    CHECK(f.follower_separated);
    // Case (1a) sets carry the parallel 0/1 pair into F1 and are still
    // deterministic; only the labels differ.
    CHECK(f.right_resolving);
  }
  for (const ParrySeq& s : corpus::finite_parry(10)) CHECK(check_presentation(fischer_beta(s)).all());
  for (const ParrySeq& s : corpus::periodic_parry(4, 4)) CHECK(check_presentation(fischer_beta(s)).all());
}

TEST_CASE("min_factor is idempotent") {
  for (const GapSet& s : corpus::finite_sets(7)) {
    MinFactor m = min_factor(fischer_gap(s));
    CHECK(min_factor(m.quotient).partition.is_discrete());
  }
}

TEST_CASE("minimal factor blocks have equal size") {
  for (const GapSet& s : corpus::finite_sets(8)) {
    MinFactor m = min_factor(fischer_gap(s));
    for (const auto& block : m.partition.blocks) CHECK(block.size() == m.partition.blocks[0].size());
  }
}

TEST_CASE("beta covers equal their minimal factor") {
  for (const ParrySeq& s : corpus::finite_parry(10)) CHECK(min_factor(fischer_beta(s)).partition.is_discrete());
  for (const ParrySeq& s : corpus::periodic_parry(4, 4))
    CHECK(min_factor(fischer_beta(s)).partition.is_discrete());
}

TEST_CASE("follower-class counts agree with the case formulas except when k = 0") {
  for (const GapSet& s : corpus::periodic_sets({0, 1, 2}, 2, 2, 3)) {
    CoverCase c = cover_case(s);
    LabeledGraph g = fischer_gap(s);
    if (c.k == 0) {
      CHECK_FALSE(c.last_vertex);
      continue;
    }
    REQUIRE(c.last_vertex);
    CHECK(*c.last_vertex + 1 == g.vertex_count());
  }
}

TEST_CASE("graph export") {
  LabeledGraph g = fischer_gap(gs("0;1,(2)*"));
  LabeledGraph back = LabeledGraph::from_json(g.to_json());
  CHECK(back == g);
  std::string dot = g.to_dot();
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("\"F10^2\" -> \"F10\" [label=\"0\"];") != std::string::npos);
  CHECK(LabeledGraph::from_json(fischer_beta(ps("1,1,0,1")).to_json()) == fischer_beta(ps("1,1,0,1")));
  CHECK_THROWS_AS(LabeledGraph::from_json("{\"vertices\":[\"a\"],\"edges\":[{\"from\":0,\"to\":3,\"label\":0}]}"),
                  Error);
  CHECK(count_matrix_dot(golden()).find("\"P0\" -> \"P1\"") != std::string::npos);
}
