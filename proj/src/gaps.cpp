#include "betagap/gaps.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "betagap/error.hpp"

namespace betagap {

std::string_view gap_kind_name(GapKind kind) {
  switch (kind) {
    case GapKind::Finite: return "Finite";
    case GapKind::EventuallyPeriodic: return "EventuallyPeriodic";
    case GapKind::Truncated: return "Truncated";
  }
  return "?";
}

std::string_view gap_class_name(GapClass c) {
  switch (c) {
    case GapClass::SFT: return "SFT";
    case GapClass::AFTnotSFT: return "AFTnotSFT";
    case GapClass::SoficNotAFT: return "SoficNotAFT";
    case GapClass::NonSofic: return "NonSofic";
  }
  return "?";
}

std::string_view cover_case_name(CoverCase::Kind kind) {
  switch (kind) {
    case CoverCase::Kind::Finite: return "finite";
    case CoverCase::Kind::Case1a: return "1a";
    case CoverCase::Kind::Case1b: return "1b";
    case CoverCase::Kind::Case2: return "2";
    case CoverCase::Kind::Case3: return "3";
    case CoverCase::Kind::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

void check_increments(const FiniteWord& w) {
  for (Letter d : w) {
    if (d == 0) throw Error(ErrorCode::SyntaxError, "increments must be positive");
  }
}

FiniteWord differences(const std::vector<Value>& values) {
  FiniteWord out;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= values[i - 1])
      throw Error(ErrorCode::SyntaxError, "set elements must be strictly increasing");
    Value d = values[i] - values[i - 1];
    if (d > 0xFFFFFFFFull) throw Error(ErrorCode::SyntaxError, "increment too large");
    out.push_back(static_cast<Letter>(d));
  }
  return out;
}

void append_ones_gaps(FiniteWord& chi, const FiniteWord& increments) {
  for (Letter d : increments) {
    chi.insert(chi.end(), d - 1, 0);
    chi.push_back(1);
  }
}

std::vector<Value> positions_of_ones(const FiniteWord& chi) {
  std::vector<Value> out;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (chi[i] == 1) out.push_back(i);
    else if (chi[i] != 0) throw Error(ErrorCode::SyntaxError, "indicator letters must be 0 or 1");
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }
  std::string_view rest() const { return text_.substr(pos_); }
  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!consume(token)) fail("'" + std::string(token) + "'");
  }
  Value number() {
    skip_space();
    std::size_t start = pos_;
    Value v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > 1'000'000'000'000ull) fail("a smaller number");
      v = v * 10 + static_cast<Value>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("number");
    return v;
  }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& expected) const {
    std::size_t at = base_ + pos_;
    throw Error(ErrorCode::SyntaxError, "expected " + expected, at);
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

EPWord parse_word_at(std::string_view text, std::size_t base) {
  try {
    return EPWord::parse(text);
  } catch (const Error& e) {
    std::size_t at = base + e.index();
    throw Error(ErrorCode::SyntaxError, e.what(), at);
  }
}

GapSet parse_braces(std::string_view text) {
  Cursor c(text);
  c.expect("{");
  std::vector<Value> values;
  bool continues = false;
  c.skip_space();
  if (c.consume("}")) throw Error(ErrorCode::EmptySet, "empty gap set");
  while (true) {
    if (c.consume("...")) {
      continues = true;
      c.expect("}");
      break;
    }
    values.push_back(c.number());
    if (c.consume("}")) break;
    c.expect(",");
  }
  c.skip_space();
  if (!c.done()) c.fail("end of set");
  if (!continues) return GapSet::from_list(values);
  if (values.size() < 2) c.fail("two elements before '...'");
  FiniteWord incs = differences(values);
  Letter step = incs.back();
  incs.pop_back();
  return GapSet::from_increments(values.front(), EPWord::periodic(std::move(incs), {step}));
}

GapSet parse_delta(std::string_view text, std::size_t base) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    Cursor c(text, base);
    c.number();
    c.fail("';'");
  }
  Cursor c(text.substr(0, semi), base);
  Value d0 = c.number();
  c.skip_space();
  if (!c.done()) c.fail("';'");
  EPWord incs = parse_word_at(text.substr(semi + 1), base + semi + 1);
  return GapSet::from_increments(d0, incs);
}

std::vector<Value> squares_upto(std::size_t horizon) {
  std::vector<Value> out;
  for (Value i = 0; i * i <= horizon; ++i) out.push_back(i * i);
  return out;
}

GapSet parse_truncated(std::string_view text) {
  constexpr std::size_t base = 6;  // "trunc:"
  std::string_view body = text.substr(base);
  auto at = body.rfind('@');
  if (at == std::string_view::npos) {
    Cursor c(text);
    c.fail("'@horizon'");
  }
  Cursor hc(body.substr(at + 1), base + at + 1);
  Value horizon = hc.number();
  hc.skip_space();
  if (!hc.done()) hc.fail("end of horizon");
  if (horizon > 1'000'000) hc.fail("horizon at most 1000000");
  std::string_view list = body.substr(0, at);
  if (list == "squares") {
    FiniteWord chi(horizon + 1, 0);
    for (Value v : squares_upto(horizon)) chi[v] = 1;
    return GapSet::truncated_from_indicator(chi, horizon);
  }
  if (list.size() >= 4 && list.substr(list.size() - 4) == ",...") list.remove_suffix(4);
  else if (list.size() >= 3 && list.substr(list.size() - 3) == "...") list.remove_suffix(3);
  GapSet prefix = parse_delta(list, base);
  if (prefix.increments().is_infinite())
    throw Error(ErrorCode::SyntaxError, "a truncated gap set has no period", base);
  return GapSet::truncated(prefix.d0(), prefix.increments().preperiod(), horizon);
}

}  // namespace

GapSet GapSet::from_list(const std::vector<Value>& values) {
  if (values.empty()) throw Error(ErrorCode::EmptySet, "empty gap set");
  return GapSet(GapKind::Finite, values.front(), EPWord::finite(differences(values)), 0);
}

GapSet GapSet::from_increments(Value d0, const EPWord& increments) {
  check_increments(increments.preperiod());
  check_increments(increments.period());
  GapKind kind = increments.is_infinite() ? GapKind::EventuallyPeriodic : GapKind::Finite;
  return GapSet(kind, d0, increments, 0);
}

GapSet GapSet::truncated(Value d0, const FiniteWord& increments, std::size_t horizon) {
  if (d0 > horizon)
    throw Error(ErrorCode::HorizonTooSmall, "no element of the set lies within the horizon");
  check_increments(increments);
  FiniteWord kept;
  Value v = d0;
  for (Letter d : increments) {
    if (v + d > horizon) break;
    v += d;
    kept.push_back(d);
  }
  return GapSet(GapKind::Truncated, d0, EPWord::finite(std::move(kept)), horizon);
}

GapSet GapSet::from_indicator(const EPWord& chi) {
  const FiniteWord& pre = chi.preperiod();
  const FiniteWord& per = chi.period();
  bool periodic_ones = std::find(per.begin(), per.end(), 1u) != per.end();
  if (!periodic_ones) {
    if (!std::all_of(per.begin(), per.end(), [](Letter x) { return x == 0; }))
      throw Error(ErrorCode::SyntaxError, "indicator letters must be 0 or 1");
    return from_list(positions_of_ones(pre));
  }
  // Ones of the preperiod and two copies of the period expose a full period
  // of increments.
  FiniteWord unrolled = pre;
  unrolled.insert(unrolled.end(), per.begin(), per.end());
  unrolled.insert(unrolled.end(), per.begin(), per.end());
  std::vector<Value> ones = positions_of_ones(unrolled);
  std::size_t in_pre = positions_of_ones(pre).size();
  std::size_t in_per = positions_of_ones(per).size();
  FiniteWord diffs = differences(ones);
  FiniteWord head(diffs.begin(), diffs.begin() + static_cast<std::ptrdiff_t>(in_pre));
  FiniteWord cycle(diffs.begin() + static_cast<std::ptrdiff_t>(in_pre),
                   diffs.begin() + static_cast<std::ptrdiff_t>(in_pre + in_per));
  return from_increments(ones.front(), EPWord::periodic(std::move(head), std::move(cycle)));
}

GapSet GapSet::truncated_from_indicator(const FiniteWord& chi, std::size_t horizon) {
  FiniteWord known(chi.begin(), chi.begin() + static_cast<std::ptrdiff_t>(std::min(chi.size(), horizon + 1)));
  std::vector<Value> ones = positions_of_ones(known);
  if (ones.empty()) throw Error(ErrorCode::EmptySet, "no element of the set lies within the horizon");
  return truncated(ones.front(), differences(ones), horizon);
}

GapSet GapSet::parse(std::string_view text) {
  std::size_t lead = 0;
  while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
  std::string_view body = text.substr(lead);
  if (body.substr(0, 6) == "trunc:") return parse_truncated(body);
  if (!body.empty() && body.front() == '{') return parse_braces(body);
  return parse_delta(body, lead);
}

std::string GapSet::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case GapKind::Finite: {
      os << '{';
      std::vector<Value> m = members();
      for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
      os << '}';
      break;
    }
    case GapKind::EventuallyPeriodic:
      os << d0_ << ';' << increments_.to_string(",");
      break;
    case GapKind::Truncated:
      os << "trunc:" << d0_ << ';' << increments_.to_string()
         << (increments_.length() ? ",..." : "...") << '@' << horizon_;
      break;
  }
  return os.str();
}

std::size_t GapSet::size() const {
  if (kind_ != GapKind::Finite) throw Error(ErrorCode::NotFinite, "the set is infinite");
  return increments_.length() + 1;
}

Value GapSet::max() const {
  if (kind_ != GapKind::Finite) throw Error(ErrorCode::NotFinite, "the set is infinite");
  const FiniteWord& d = increments_.preperiod();
  return std::accumulate(d.begin(), d.end(), d0_);
}

bool GapSet::contains(Value m) const {
  if (kind_ == GapKind::Truncated && m > horizon_)
    throw Error(ErrorCode::HorizonTooSmall,
                "membership of " + std::to_string(m) + " lies past the horizon");
  if (kind_ == GapKind::Finite && m > max()) return false;
  return indicator().at(m) == 1;
}

std::vector<Value> GapSet::members_upto(Value limit) const {
  if (kind_ == GapKind::Truncated && limit > horizon_)
    throw Error(ErrorCode::HorizonTooSmall, "limit lies past the horizon");
  std::vector<Value> out;
  Value v = d0_;
  for (std::size_t i = 0; v <= limit; ++i) {
    out.push_back(v);
    if (!increments_.is_infinite() && i >= increments_.length()) break;
    v += increments_.at(i);
  }
  return out;
}

std::vector<Value> GapSet::members() const {
  return members_upto(max());
}

EPWord GapSet::indicator() const {
  FiniteWord head(d0_, 0);
  head.push_back(1);
  append_ones_gaps(head, increments_.preperiod());
  switch (kind_) {
    case GapKind::Finite: return EPWord::finite(std::move(head));
    case GapKind::Truncated:
      head.resize(horizon_ + 1, 0);
      return EPWord::finite(std::move(head));
    case GapKind::EventuallyPeriodic: {
      FiniteWord cycle;
      append_ones_gaps(cycle, increments_.period());
      return EPWord::periodic(std::move(head), std::move(cycle));
    }
  }
  return {};
}

GapClass classify_gap(const GapSet& s) {
  switch (s.kind()) {
    case GapKind::Finite: return GapClass::SFT;
    case GapKind::Truncated: return GapClass::NonSofic;
    case GapKind::EventuallyPeriodic: {
      const FiniteWord& per = s.increments().period();
      if (per == FiniteWord{1}) return GapClass::SFT;
      return per.size() == 1 ? GapClass::AFTnotSFT : GapClass::SoficNotAFT;
    }
  }
  return GapClass::NonSofic;
}

GapSet normalize(const GapSet& s) {
  if (s.kind() == GapKind::EventuallyPeriodic && s.d0() >= 1 &&
      s.increments().preperiod().empty() && s.increments().period() == FiniteWord{1})
    return GapSet::from_list({0, s.d0()});
  return s;
}

FiniteWord d_word(const GapSet& s) {
  if (!s.is_finite()) throw Error(ErrorCode::NotFinite, "D(S) needs a finite set");
  if (s.size() < 2) throw Error(ErrorCode::TooSmall, "D(S) needs at least two elements");
  FiniteWord d = s.increments().preperiod();
  d.back() += static_cast<Letter>(s.d0() + 1);
  return d;
}

EPWord inverse_parry_word(const GapSet& s) {
  if (s.d0() != 0) throw Error(ErrorCode::NonzeroS0, "the set must contain 0");
  if (s.is_finite()) {
    if (s.size() < 2) throw Error(ErrorCode::TooSmall, "the set needs at least two elements");
    return EPWord::periodic({}, d_word(s));
  }
  return s.increments();
}

std::string StarVerdict::to_string() const {
  switch (status) {
    case Status::Holds: return "Holds";
    case Status::FailsAt: return "FailsAt(" + std::to_string(index) + ")";
    case Status::HoldsToHorizon: return "HoldsToHorizon(" + std::to_string(index) + ")";
    case Status::HoldsByMonotonicity: return "HoldsByMonotonicity";
  }
  return "?";
}

StarVerdict star_condition(const GapSet& input) {
  using Status = StarVerdict::Status;
  GapSet s = normalize(input);
  EPWord d = inverse_parry_word(s);
  if (s.kind() == GapKind::Truncated) {
    const FiniteWord& w = d.preperiod();
    if (std::is_sorted(w.begin(), w.end())) return {Status::HoldsByMonotonicity, 0};
    for (std::size_t k = 1; k < w.size(); ++k) {
      for (std::size_t j = 0; k + j < w.size(); ++j) {
        if (w[k + j] < w[j]) return {Status::FailsAt, k + 1};
        if (w[k + j] > w[j]) break;
      }
    }
    return {Status::HoldsToHorizon, s.horizon()};
  }
  std::size_t last = d.preperiod().size() + d.period().size();
  for (std::size_t k = 1; k < last; ++k) {
    if (lex_compare(shift(d, k), d) == Ordering::Less) return {Status::FailsAt, k + 1};
  }
  return {Status::Holds, 0};
}

CoverCase cover_case(const GapSet& s) {
  CoverCase out;
  if (s.kind() == GapKind::Finite) {
    out.kind = CoverCase::Kind::Finite;
    out.last_vertex = s.max();
    return out;
  }
  if (s.kind() == GapKind::Truncated) return out;
  FiniteWord full{static_cast<Letter>(s.d0())};
  full.insert(full.end(), s.increments().preperiod().begin(), s.increments().preperiod().end());
  EPWord delta = EPWord::periodic(std::move(full), s.increments().period());
  const FiniteWord& d = delta.preperiod();
  const FiniteWord& g = delta.period();
  out.k = d.size();
  out.l = g.size();
  if (out.k == 0) return out;
  auto partial = [&](std::size_t i) {
    Value acc = 0;
    for (std::size_t j = 0; j <= i; ++j) acc += delta.at(j);
    return acc;
  };
  Value s0 = d[0];
  Value g_sum = std::accumulate(g.begin(), g.end(), Value{0});
  Value g_last = g.back();
  std::size_t k = out.k, l = out.l;
  if (k == 1 && g_last > s0) {
    if (g_last == s0 + 1) {
      out.kind = CoverCase::Kind::Case1a;
      out.last_vertex = partial(l - 1);
    } else {
      out.kind = CoverCase::Kind::Case1b;
      out.last_vertex = g_sum - 1;
    }
  } else if (k != 1 && g_last > d[k - 1]) {
    out.kind = CoverCase::Kind::Case2;
    out.last_vertex = g_sum + partial(k - 2);
  } else if (g_last <= d[k - 1]) {
    out.kind = CoverCase::Kind::Case3;
    out.last_vertex = partial(k + l - 2);
  }
  return out;
}

}  // namespace betagap
