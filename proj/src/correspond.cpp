#include "betagap/correspond.hpp"

#include <algorithm>

#include "betagap/covers.hpp"
#include "betagap/error.hpp"

namespace betagap {

std::string_view equivalence_level_name(EquivalenceLevel level) {
  switch (level) {
    case EquivalenceLevel::Conjugate: return "Conjugate";
    case EquivalenceLevel::RRAlmostConjugate: return "RRAlmostConjugate";
    case EquivalenceLevel::RRFiniteEquivalent: return "RRFiniteEquivalent";
    case EquivalenceLevel::None: return "None";
  }
  return "?";
}

GapSet ass_of_beta(const ParrySeq& s) {
  require_valid(s);
  const EPWord& digits = s.digits();
  switch (s.kind()) {
    case ParryKind::Finite:
      return normalize(GapSet::from_indicator(EPWord::finite(digits.preperiod())));
    case ParryKind::EventuallyPeriodic: return normalize(GapSet::from_indicator(digits));
    case ParryKind::Truncated:
      return GapSet::truncated_from_indicator(digits.preperiod(), s.horizon() - 1);
  }
  return GapSet::from_list({0});
}

namespace {

std::string join(const std::vector<Value>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + "}";
}

}  // namespace

AssRecord ass_of_gap(const GapSet& input) {
  GapSet s = normalize(input);
  StarVerdict star = star_condition(s);
  if (!star.holds())
    throw Error(ErrorCode::StarFails, "the star condition fails: " + star.to_string(), star.index);
  EPWord chi = s.indicator();
  switch (s.kind()) {
    case GapKind::Finite: {
      ParrySeq candidate = ParrySeq::finite(chi.preperiod());
      if (validate_parry(candidate).ok()) return {candidate, s, true, {}};
      // Only a non-primitive D(S) gets here; cut S after one period of D.
      FiniteWord d = d_word(s);
      std::size_t q = least_period(d);
      std::vector<Value> m = s.members();
      std::vector<Value> reduced(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(q));
      reduced.push_back(m[q] - 1);
      GapSet s_prime = GapSet::from_list(reduced);
      AssRecord inner = ass_of_gap(s_prime);
      return {inner.parry, s, false,
              "D(S) is not primitive (least period " + std::to_string(q) +
                  "); beta is read from S' = " + join(reduced)};
    }
    case GapKind::EventuallyPeriodic: {
      if (chi.preperiod().empty() && chi.period() != FiniteWord{1}) {
        FiniteWord digits = chi.period();
        if (digits.back() != 0)
          throw Error(ErrorCode::NotValidated, "purely periodic candidate " + chi.to_string() +
                                                   " has no finite counterpart");
        digits.back() = 1;
        ParrySeq finite = ParrySeq::finite(digits);
        require_valid(finite);
        return {finite, s, false,
                "candidate " + chi.to_string() + " is purely periodic; it is the quasi-greedy form of " +
                    finite.to_string()};
      }
      ParrySeq candidate = ParrySeq::from_word(chi);
      require_valid(candidate);
      return {candidate, s, true, {}};
    }
    case GapKind::Truncated: {
      ParrySeq candidate = ParrySeq::truncated(chi.preperiod(), s.horizon() + 1);
      require_valid(candidate);
      return {candidate, s, true, "digits known up to the horizon only"};
    }
  }
  throw Error(ErrorCode::NotSofic, "unsupported gap set");
}

EquivalenceResult equivalence_level(const ParrySeq& s, const GapSet& gap) {
  if (!s.is_sofic() || !gap.is_sofic())
    throw Error(ErrorCode::NotSofic, "equivalence levels need sofic inputs");
  require_valid(s);
  GapSet normal = normalize(gap);
  bool same_ass = normal == ass_of_beta(s);
  LabeledGraph g_beta = fischer_beta(s);
  LabeledGraph g_gap = fischer_gap(normal);
  auto iso = graph_iso(g_beta.underlying(), g_gap.underlying());
  EquivalenceResult out;
  if (same_ass && s.is_sft()) {
    out.level = EquivalenceLevel::Conjugate;
    if (iso) out.certificate = *iso;
    out.note = "S is the associated gap set of an SFT beta-shift";
    return out;
  }
  if (iso) {
    out.level = EquivalenceLevel::RRAlmostConjugate;
    out.certificate = *iso;
    out.note = same_ass ? "S is the associated gap set; a strictly sofic beta-shift is not conjugate to it"
                        : "the underlying graphs of the Fischer covers are isomorphic";
    return out;
  }
  MinFactor mb = min_factor(g_beta);
  MinFactor mg = min_factor(g_gap);
  if (auto iso = graph_iso(mb.quotient, mg.quotient)) {
    out.level = EquivalenceLevel::RRFiniteEquivalent;
    out.certificate = *iso;
    out.note = "the minimal right-resolving factors are isomorphic";
    return out;
  }
  out.note = "no graph isomorphism between the covers or their minimal factors";
  return out;
}

GapSet family_sj(const GapSet& s0, std::size_t j) {
  if (!s0.is_finite() || s0.d0() != 0)
    throw Error(ErrorCode::NotAssImage, "S_0 must be a finite set containing 0");
  AssRecord rec = [&] {
    try {
      return ass_of_gap(s0);
    } catch (const Error& e) {
      throw Error(ErrorCode::NotAssImage, std::string("S_0 is not an ASS image: ") + e.what());
    }
  }();
  if (!rec.exact || rec.parry.kind() != ParryKind::Finite || !(normalize(s0) == s0))
    throw Error(ErrorCode::NotAssImage, "S_0 is not the ASS image of a finite expansion");
  std::vector<Value> h = s0.members();
  std::vector<Value> current = h;
  for (std::size_t step = 0; step < j; ++step) {
    Value top = current.back();
    current.pop_back();
    for (Value x : h) current.push_back(top + 1 + x);
  }
  return GapSet::from_list(current);
}

}  // namespace betagap
