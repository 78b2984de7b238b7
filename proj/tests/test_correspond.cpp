#include "doctest.h"

#include "betagap/correspond.hpp"
#include "betagap/covers.hpp"
#include "betagap/error.hpp"
#include "corpus.hpp"

using namespace betagap;

namespace {

GapSet gs(const char* text) { return GapSet::parse(text); }
ParrySeq ps(const char* text) { return ParrySeq::parse(text); }

std::vector<ParrySeq> sofic_parry() {
  std::vector<ParrySeq> out = corpus::finite_parry(10);
  for (const ParrySeq& s : corpus::periodic_parry(4, 4)) out.push_back(s);
  return out;
}

FiniteWord power(const FiniteWord& w, std::size_t k) { return repeat(w, k); }

bool full_shift_set(const GapSet& s) { return normalize(s) == gs("0;(1)*"); }

}  // namespace

TEST_CASE("ass_of_beta examples") {
  CHECK(ass_of_beta(ps("1,1")) == gs("{0,1}"));
  CHECK(ass_of_beta(ps("1(1,0)*")) == gs("0;1,(2)*"));
  CHECK(ass_of_beta(ps("1,0,0,1")) == gs("{0,3}"));
  CHECK(ass_of_beta(ps("(1)*")) == gs("0;(1)*"));
  CHECK_THROWS_AS(ass_of_beta(ps("1,0,1,1")), Error);
  GapSet t = ass_of_beta(ps("trunc:1,1,0,1,...@10"));
  CHECK(t.kind() == GapKind::Truncated);
  CHECK(t.horizon() == 9);
  CHECK(t.members_upto(9) == std::vector<Value>{0, 1, 3});
}

TEST_CASE("ass_of_gap examples") {
  AssRecord golden = ass_of_gap(gs("{0,1}"));
  CHECK(golden.parry == ps("1,1"));
  CHECK(golden.exact);

  AssRecord sofic = ass_of_gap(gs("0;1,(2)*"));
  CHECK(sofic.parry == ps("1(1,0)*"));
  CHECK(sofic.exact);

  AssRecord reduced = ass_of_gap(gs("{0,2,3}"));
  CHECK(reduced.parry == ps("1,1"));
  CHECK_FALSE(reduced.exact);
  CHECK_FALSE(reduced.note.empty());
}

TEST_CASE("ass_of_gap errors") {
  try {
    ass_of_gap(gs("0;(2,1)*"));
    FAIL("expected StarFails");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StarFails);
    CHECK(e.index() == 2);
  }
  try {
    ass_of_gap(gs("{1,2}"));
    FAIL("expected NonzeroS0");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonzeroS0);
  }
}

TEST_CASE("round trip from the beta side") {
  for (const ParrySeq& s : sofic_parry()) {
    CAPTURE(s.to_string());
    GapSet g = ass_of_beta(s);
    CHECK(star_condition(g).holds());
    AssRecord r = ass_of_gap(g);
    CHECK(r.exact);
    CHECK(r.parry == s);
  }
}

TEST_CASE("round trip from the gap side") {
  std::vector<GapSet> sets = corpus::finite_sets(8);
  for (const GapSet& s : corpus::periodic_sets({0}, 2, 3, 3)) sets.push_back(s);
  for (const GapSet& s : sets) {
    if (s.members_upto(0).empty()) continue;
    CAPTURE(s.to_string());
    if (!star_condition(s).holds()) continue;
    AssRecord r = ass_of_gap(s);
    if (r.exact) CHECK(ass_of_beta(r.parry) == normalize(s));
    CHECK(validate_parry(r.parry).ok());
  }
}

TEST_CASE("star condition holds exactly when ass_of_gap succeeds") {
  for (const GapSet& s : corpus::periodic_sets({0}, 2, 3, 3)) {
    CAPTURE(s.to_string());
    bool holds = star_condition(s).holds();
    bool ok = true;
    try {
      ass_of_gap(s);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::StarFails);
      ok = false;
    }
    CHECK(ok == holds);
  }
}

TEST_CASE("case (1a) sets have no beta partner") {
  std::vector<ParrySeq> betas = sofic_parry();
  for (const GapSet& s : corpus::periodic_sets({0}, 2, 2, 3)) {
    if (cover_case(s).kind != CoverCase::Kind::Case1a || full_shift_set(s)) continue;
    CAPTURE(s.to_string());
    CHECK_THROWS_AS(ass_of_gap(s), Error);
    CountMatrix mine = fischer_gap(s).underlying();
    for (const ParrySeq& b : betas) {
      CountMatrix theirs = fischer_beta(b).underlying();
      if (theirs.size() == mine.size()) CHECK_FALSE(graph_iso(mine, theirs));
    }
  }
}

TEST_CASE("the full shift pairs with N0") {
  GapSet n0 = gs("0;(1)*");
  CHECK(cover_case(n0).kind == CoverCase::Kind::Case1a);
  CHECK(star_condition(n0).holds());
  AssRecord r = ass_of_gap(n0);
  CHECK(r.exact);
  CHECK(r.parry == ps("(1)*"));
  CHECK(equivalence_level(ps("(1)*"), n0).level == EquivalenceLevel::Conjugate);
}

TEST_CASE("equivalence_level examples") {
  EquivalenceResult a = equivalence_level(ps("1,1"), gs("{0,1}"));
  CHECK(a.level == EquivalenceLevel::Conjugate);

  EquivalenceResult b = equivalence_level(ps("1(1,0)*"), gs("0;1,(2)*"));
  CHECK(b.level == EquivalenceLevel::RRAlmostConjugate);
  CHECK(b.certificate.size() == 3);

  EquivalenceResult c = equivalence_level(ps("1,1"), gs("{0,2,3}"));
  CHECK(c.level == EquivalenceLevel::RRFiniteEquivalent);
  CHECK(c.certificate.size() == 2);

  CHECK(equivalence_level(ps("1,1"), gs("{0,3}")).level == EquivalenceLevel::None);
  CHECK_THROWS_AS(equivalence_level(ps("1,1"), gs("trunc:squares@20")), Error);
  CHECK(equivalence_level_name(EquivalenceLevel::RRAlmostConjugate) == "RRAlmostConjugate");
}

TEST_CASE("a beta-shift against its own ASS") {
  for (const ParrySeq& s : sofic_parry()) {
    CAPTURE(s.to_string());
    EquivalenceLevel level = equivalence_level(s, ass_of_beta(s)).level;
    if (classify_beta(s) == BetaClass::SFT)
      CHECK(level == EquivalenceLevel::Conjugate);
    else
      CHECK(level == EquivalenceLevel::RRAlmostConjugate);
  }
}

TEST_CASE("underlying covers of a beta-shift and its ASS coincide") {
  for (const ParrySeq& s : sofic_parry()) {
    if (s == ps("(1)*")) continue;
    CAPTURE(s.to_string());
    LabeledGraph beta = fischer_beta(s);
    LabeledGraph gap = fischer_gap(ass_of_beta(s));
    CHECK(graph_iso(beta.underlying(), gap.underlying()));
    CHECK(labeled_iso(relabel_to_gap(beta), gap));
  }
}

TEST_CASE("family_sj examples") {
  GapSet s0 = gs("{0,1}");
  CHECK(family_sj(s0, 0) == s0);
  CHECK(family_sj(s0, 1) == gs("{0,2,3}"));
  CHECK(family_sj(s0, 2) == gs("{0,2,4,5}"));
  try {
    family_sj(gs("{0,2,3}"), 1);
    FAIL("expected NotAssImage");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAssImage);
  }
}

TEST_CASE("family_sj powers the D word and keeps the minimal factor") {
  for (const ParrySeq& s : corpus::finite_parry(7)) {
    GapSet s0 = ass_of_beta(s);
    CAPTURE(s0.to_string());
    CountMatrix base = min_factor(fischer_gap(s0)).quotient;
    for (std::size_t j = 0; j <= 4; ++j) {
      GapSet sj = family_sj(s0, j);
      CHECK(d_word(sj) == power(d_word(s0), j + 1));
      CHECK(graph_iso(min_factor(fischer_gap(sj)).quotient, base));
      if (j >= 1) CHECK(equivalence_level(s, sj).level == EquivalenceLevel::RRFiniteEquivalent);
    }
  }
}
