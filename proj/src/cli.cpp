#include "betagap/cli.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "betagap/analytics.hpp"
#include "betagap/correspond.hpp"
#include "betagap/covers.hpp"
#include "betagap/error.hpp"

namespace betagap {

using Json = nlohmann::ordered_json;

std::string ObjectSpec::to_string() const {
  return kind == Kind::Beta ? "beta:" + beta->to_string() : "gap:" + gap->to_string();
}

ObjectSpec parse_spec(std::string_view text) {
  auto rebase = [](const Error& e, std::size_t offset) {
    return Error(e.code(), e.what(), e.code() == ErrorCode::SyntaxError ? e.index() + offset : e.index());
  };
  ObjectSpec spec;
  if (text.substr(0, 5) == "beta:") {
    spec.kind = ObjectSpec::Kind::Beta;
    try {
      spec.beta = ParrySeq::parse(text.substr(5));
    } catch (const Error& e) {
      throw rebase(e, 5);
    }
    return spec;
  }
  if (text.substr(0, 4) == "gap:") {
    spec.kind = ObjectSpec::Kind::Gap;
    try {
      spec.gap = GapSet::parse(text.substr(4));
    } catch (const Error& e) {
      throw rebase(e, 4);
    }
    return spec;
  }
  throw Error(ErrorCode::SyntaxError, "expected 'beta:' or 'gap:'", 0);
}

namespace {

struct Options {
  std::vector<std::string> specs;
  std::string beta_text;
  bool json = false;
  bool dot = false;
  bool oracle = false;
  std::optional<std::size_t> horizon;
  std::string tol = "1e-12";
  std::size_t n = 8;
  std::size_t j = 1;
  std::size_t depth = 10;
  unsigned precision = kDefaultGreedyPrecision;
  unsigned jobs = 1;
  std::size_t m = 3;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Output for one command: a JSON object, or text lines.
struct Report {
  Json json = Json::object();
  std::string text;
  int code = kExitOk;
};

std::string decimal(const Rational& x) {
  return to_decimal(x, 16);
}

Json bracket_json(const Bracket& b) {
  return {{"lo", decimal(b.lo)}, {"hi", decimal(b.hi)}, {"width", decimal(b.width())}};
}

std::string bracket_text(const Bracket& b) {
  return "[" + decimal(b.lo) + ", " + decimal(b.hi) + "] width " + decimal(b.width());
}

Rational tolerance(const Options& o) {
  Rational tol = parse_rational(o.tol);
  if (tol <= 0) throw UsageError("--tol must be positive");
  return tol;
}

const ObjectSpec& only_spec(const std::vector<ObjectSpec>& specs) {
  if (specs.size() != 1) throw UsageError("expected exactly one object spec");
  return specs.front();
}

const GapSet& require_gap(const ObjectSpec& spec) {
  if (spec.kind != ObjectSpec::Kind::Gap) throw UsageError("expected a gap: spec");
  return *spec.gap;
}

LabeledGraph cover_of(const ObjectSpec& spec, const Options& o) {
  return spec.kind == ObjectSpec::Kind::Beta ? fischer_beta(*spec.beta, o.horizon)
                                             : fischer_gap(*spec.gap, o.horizon);
}

std::string edge_lines(const LabeledGraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << " vertices, " << g.edges().size() << " edges\n";
  for (const Edge& e : g.edges())
    os << g.name(e.from) << " -" << e.label << "-> " << g.name(e.to) << '\n';
  for (const std::string& w : g.warnings()) os << "warning: " << w << '\n';
  return os.str();
}

std::string matrix_text(const CountMatrix& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.size(); ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < a[i].size(); ++j) os << (j ? "," : "") << a[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

Json counts_json(const std::vector<BigInt>& c) {
  Json a = Json::array();
  for (const BigInt& x : c) {
    if (x <= std::numeric_limits<std::uint64_t>::max())
      a.push_back(x.convert_to<std::uint64_t>());
    else
      a.push_back(x.str());
  }
  return a;
}

Report cmd_validate(const std::vector<ObjectSpec>& specs, const Options&) {
  const ObjectSpec& spec = only_spec(specs);
  Report r;
  if (spec.kind == ObjectSpec::Kind::Beta) {
    ParryVerdict v = validate_parry(*spec.beta);
    r.text = v.to_string() + "\n";
    r.json["verdict"] = v.to_string();
    r.json["valid"] = v.ok();
    r.code = v.ok() ? kExitOk : kExitDomain;
  } else {
    r.text = "Valid\n";
    r.json["verdict"] = "Valid";
    r.json["valid"] = true;
  }
  return r;
}

Report cmd_classify(const std::vector<ObjectSpec>& specs, const Options&) {
  const ObjectSpec& spec = only_spec(specs);
  Report r;
  std::string name;
  if (spec.kind == ObjectSpec::Kind::Beta) {
    require_valid(*spec.beta);
    name = std::string(beta_class_name(classify_beta(*spec.beta)));
    if (spec.beta->kind() == ParryKind::Truncated)
      r.json["caveat"] = "classification by representation; digits known up to horizon " +
                         std::to_string(spec.beta->horizon());
  } else {
    name = std::string(gap_class_name(classify_gap(*spec.gap)));
    if (spec.gap->kind() == GapKind::Truncated)
      r.json["caveat"] = "classification by representation; membership known up to horizon " +
                         std::to_string(spec.gap->horizon());
  }
  r.json["class"] = name;
  r.text = name + "\n";
  return r;
}

Report cmd_ass(const std::vector<ObjectSpec>& specs, const Options&) {
  const ObjectSpec& spec = only_spec(specs);
  Report r;
  if (spec.kind == ObjectSpec::Kind::Beta) {
    std::string result = "gap:" + ass_of_beta(*spec.beta).to_string();
    r.text = result + "\n";
    r.json["result"] = result;
    r.json["exact"] = true;
    return r;
  }
  AssRecord rec = ass_of_gap(*spec.gap);
  std::string result = "beta:" + rec.parry.to_string();
  r.text = result + "\n";
  if (!rec.exact) r.text += "inexact: " + rec.note + "\n";
  r.json["result"] = result;
  r.json["exact"] = rec.exact;
  if (!rec.note.empty()) r.json["note"] = rec.note;
  return r;
}

Report cmd_cover(const std::vector<ObjectSpec>& specs, const Options& o) {
  LabeledGraph g = cover_of(only_spec(specs), o);
  Report r;
  r.text = o.dot ? g.to_dot("cover") : edge_lines(g);
  r.json["graph"] = Json::parse(g.to_json());
  PresentationFlags f = check_presentation(g);
  r.json["right_resolving"] = f.right_resolving;
  r.json["irreducible"] = f.irreducible;
  r.json["follower_separated"] = f.follower_separated;
  return r;
}

Report cmd_mg(const std::vector<ObjectSpec>& specs, const Options& o) {
  LabeledGraph g = cover_of(only_spec(specs), o);
  MinFactor mf = min_factor(g);
  Report r;
  Json blocks = Json::array();
  std::ostringstream os;
  os << mf.partition.size() << " blocks" << (mf.partition.is_discrete() ? " (discrete)" : "") << '\n';
  for (std::size_t b = 0; b < mf.partition.size(); ++b) {
    Json names = Json::array();
    os << "P" << b << ": {";
    for (std::size_t i = 0; i < mf.partition.blocks[b].size(); ++i) {
      std::string name = g.name(mf.partition.blocks[b][i]);
      names.push_back(name);
      os << (i ? "," : "") << name;
    }
    os << "}\n";
    blocks.push_back(names);
  }
  os << "quotient " << matrix_text(mf.quotient) << '\n';
  r.text = o.dot ? count_matrix_dot(mf.quotient, "mg") : os.str();
  r.json["blocks"] = blocks;
  r.json["discrete"] = mf.partition.is_discrete();
  r.json["quotient"] = mf.quotient;
  return r;
}

Report cmd_equiv(const std::vector<ObjectSpec>& specs, const Options&) {
  if (specs.size() != 2) throw UsageError("equiv expects a beta: spec and a gap: spec");
  const ObjectSpec* b = &specs[0];
  const ObjectSpec* s = &specs[1];
  if (b->kind == ObjectSpec::Kind::Gap) std::swap(b, s);
  if (b->kind != ObjectSpec::Kind::Beta || s->kind != ObjectSpec::Kind::Gap)
    throw UsageError("equiv expects a beta: spec and a gap: spec");
  EquivalenceResult res = equivalence_level(*b->beta, *s->gap);
  Report r;
  std::string level(equivalence_level_name(res.level));
  r.json["level"] = level;
  r.json["certificate"] = res.certificate;
  r.json["note"] = res.note;
  std::ostringstream os;
  os << level << '\n';
  if (!res.certificate.empty()) {
    os << "certificate:";
    for (std::size_t i = 0; i < res.certificate.size(); ++i) os << ' ' << i << "->" << res.certificate[i];
    os << '\n';
  }
  os << "note: " << res.note << '\n';
  r.text = os.str();
  return r;
}

Report cmd_entropy(const std::vector<ObjectSpec>& specs, const Options& o) {
  const ObjectSpec& spec = only_spec(specs);
  Rational tol = tolerance(o);
  Bracket h = spec.kind == ObjectSpec::Kind::Beta ? entropy_beta(*spec.beta, tol)
                                                   : entropy_gap(*spec.gap, tol);
  Report r;
  r.text = bracket_text(h) + "\n";
  r.json["entropy"] = bracket_json(h);
  return r;
}

RationalFn zeta_of(const ObjectSpec& spec) {
  return spec.kind == ObjectSpec::Kind::Beta ? zeta_beta(*spec.beta) : zeta_gap(*spec.gap);
}

Report cmd_zeta(const std::vector<ObjectSpec>& specs, const Options&) {
  RationalFn z = zeta_of(only_spec(specs));
  Report r;
  r.text = z.pretty() + "\n";
  r.json["zeta"] = z.pretty();
  r.json["num"] = poly_to_string(z.num());
  r.json["den"] = poly_to_string(z.den());
  return r;
}

PnTable oracle_of(const ObjectSpec& spec, const Options& o) {
  return spec.kind == ObjectSpec::Kind::Beta ? oracle_pn(*spec.beta, o.n, o.jobs)
                                             : oracle_pn(*spec.gap, o.n, o.jobs);
}

Report cmd_pn(const std::vector<ObjectSpec>& specs, const Options& o) {
  const ObjectSpec& spec = only_spec(specs);
  PnTable t = o.oracle ? oracle_of(spec, o) : series_pn(zeta_of(spec), o.n);
  Report r;
  r.text = t.to_json() + "\n";
  r.json["source"] = o.oracle ? "oracle" : "series";
  r.json["counts"] = counts_json(t.counts);
  return r;
}

Report cmd_oracle(const std::vector<ObjectSpec>& specs, const Options& o) {
  const ObjectSpec& spec = only_spec(specs);
  PnTable brute = oracle_of(spec, o);
  PnTable series = series_pn(zeta_of(spec), o.n);
  bool agree = brute.counts == series.counts;
  Report r;
  r.text = "oracle " + brute.to_json() + "\nseries " + series.to_json() + "\n" +
           (agree ? "agree" : "disagree") + "\n";
  r.json["oracle"] = counts_json(brute.counts);
  r.json["series"] = counts_json(series.counts);
  r.json["agree"] = agree;
  r.code = agree ? kExitOk : kExitDomain;
  return r;
}

Report cmd_xs(const std::vector<ObjectSpec>& specs, const Options& o) {
  CFValue v = xs_value(require_gap(only_spec(specs)), o.depth);
  Report r;
  std::ostringstream os;
  os << '[' << v.quotients.front();
  for (std::size_t i = 1; i < v.quotients.size(); ++i) os << (i == 1 ? "; " : ", ") << v.quotients[i];
  os << (v.exact ? "]" : ", ...]") << '\n';
  Json conv = Json::array();
  for (std::size_t i = 0; i < v.convergents.size(); ++i) {
    os << "c" << i << " = " << v.convergents[i] << '\n';
    conv.push_back(v.convergents[i].str());
  }
  if (v.reciprocal_integer) os << "flag: x_S is of the form 1/n\n";
  r.text = os.str();
  r.json["quotients"] = v.quotients;
  r.json["convergents"] = conv;
  r.json["exact"] = v.exact;
  r.json["reciprocal_integer"] = v.reciprocal_integer;
  return r;
}

Report cmd_family(const std::vector<ObjectSpec>& specs, const Options& o) {
  GapSet sj = family_sj(require_gap(only_spec(specs)), o.j);
  Report r;
  std::string result = "gap:" + sj.to_string();
  r.text = result + "\n";
  r.json["result"] = result;
  r.json["d_word"] = EPWord::finite(d_word(sj)).to_string();
  return r;
}

Report cmd_star(const std::vector<ObjectSpec>& specs, const Options&) {
  StarVerdict v = star_condition(require_gap(only_spec(specs)));
  Report r;
  r.text = v.to_string() + "\n";
  r.json["verdict"] = v.to_string();
  r.json["holds"] = v.holds();
  r.code = v.holds() ? kExitOk : kExitDomain;
  return r;
}

Report cmd_witness(const std::vector<ObjectSpec>& specs, const Options& o) {
  CantorWitness w = cantor_witness(require_gap(only_spec(specs)), o.m);
  Report r;
  r.text = "in: gap:" + w.inside.to_string() + " " + w.inside_verdict.to_string() + "\nout: gap:" +
           w.outside.to_string() + " " + w.outside_verdict.to_string() + "\n";
  r.json["in"] = "gap:" + w.inside.to_string();
  r.json["out"] = "gap:" + w.outside.to_string();
  r.json["in_verdict"] = w.inside_verdict.to_string();
  r.json["out_verdict"] = w.outside_verdict.to_string();
  return r;
}

Report cmd_expand(const Options& o) {
  GreedyExpansion g = greedy_expand(o.beta_text, o.n, o.precision);
  Report r;
  std::ostringstream digits, flags;
  Json certain = Json::array();
  for (std::size_t i = 0; i < g.digits.size(); ++i) {
    digits << (i ? "," : "") << g.digits[i];
    if (!g.certain[i]) flags << (flags.tellp() > 0 ? "," : "") << i + 1;
    certain.push_back(static_cast<bool>(g.certain[i]));
  }
  r.text = digits.str() + "\n";
  if (flags.tellp() > 0) r.text += "uncertain digits: " + flags.str() + "\n";
  r.json["digits"] = g.digits;
  r.json["certain"] = certain;
  return r;
}

using Handler = std::function<Report(const std::vector<ObjectSpec>&, const Options&)>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Beta-shifts and S-gap shifts: covers, ASS correspondence, entropy and zeta functions",
               "betagap"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, std::pair<Handler, std::string>> commands = {
      {"validate", {cmd_validate, "Check the Parry condition"}},
      {"classify", {cmd_classify, "SFT / sofic classification"}},
      {"ass", {cmd_ass, "Associated gap set or beta expansion"}},
      {"cover", {cmd_cover, "Fischer cover"}},
      {"mg", {cmd_mg, "Minimal right-resolving factor of the Fischer cover"}},
      {"equiv", {cmd_equiv, "Equivalence level between a beta-shift and a gap shift"}},
      {"entropy", {cmd_entropy, "Entropy bracket"}},
      {"zeta", {cmd_zeta, "Zeta function"}},
      {"pn", {cmd_pn, "Periodic point counts p_1..p_n"}},
      {"oracle", {cmd_oracle, "Compare zeta-series counts with brute force"}},
      {"xs", {cmd_xs, "Continued fraction x_S"}},
      {"family", {cmd_family, "The set S_j built from S_0"}},
      {"star", {cmd_star, "Star condition on the increments"}},
      {"witness", {cmd_witness, "Cantor-set neighbours of S"}},
  };
  std::map<std::string, CLI::App*> subs;
  auto add_output = [&](CLI::App* sub, bool dot) {
    sub->add_flag("--json", o.json, "JSON output");
    if (dot) sub->add_flag("--dot", o.dot, "Graphviz output");
  };
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    subs[name] = sub;
    std::size_t count = name == "equiv" ? 2 : 1;
    sub->add_option("spec", o.specs, "Object spec: beta:... or gap:...")->required()->expected(
        static_cast<int>(count));
    add_output(sub, name == "cover" || name == "mg");
  }
  for (const char* name : {"cover", "mg"})
    subs[name]->add_option("--horizon", o.horizon, "Cover vertices for truncated inputs");
  subs["entropy"]->add_option("--tol", o.tol, "Bracket width");
  for (const char* name : {"pn", "oracle"}) {
    subs[name]->add_option("--n", o.n, "Largest period")->check(CLI::PositiveNumber);
    subs[name]->add_option("--jobs", o.jobs, "Worker threads for brute force")->check(CLI::Range(1, 64));
  }
  subs["pn"]->add_flag("--oracle", o.oracle, "Brute-force counts instead of the zeta series");
  subs["xs"]->add_option("--depth", o.depth, "Number of partial quotients after d_0");
  subs["family"]->add_option("--j", o.j, "Index j");
  subs["witness"]->add_option("--m", o.m, "Shared prefix length");
  CLI::App* expand = app.add_subcommand("expand", "Greedy digits of 1 in base beta");
  expand->add_option("beta", o.beta_text, "Decimal beta in (1, 2)")->required();
  expand->add_option("--n", o.n, "Number of digits")->check(CLI::PositiveNumber);
  expand->add_option("--precision", o.precision, "Significant bits of the interval endpoints");
  add_output(expand, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::string command = app.get_subcommands().front()->get_name();
  std::vector<ObjectSpec> specs;
  Report report;
  try {
    if (command == "expand") {
      report = cmd_expand(o);
    } else {
      for (const std::string& text : o.specs) specs.push_back(parse_spec(text));
      report = commands.at(command).first(specs, o);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    if (o.json) {
      Json j;
      j["schema"] = 1;
      j["command"] = command;
      j["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}, {"index", e.index()}};
      out << j.dump() << '\n';
    } else {
      err << "error: " << error_code_name(e.code());
      if (e.code() == ErrorCode::SyntaxError) err << " at position " << e.index();
      err << ": " << e.what() << '\n';
    }
    return e.code() == ErrorCode::SyntaxError ? kExitUsage : kExitDomain;
  }
  if (o.json) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    if (command == "expand") {
      j["input"] = o.beta_text;
    } else {
      Json inputs = Json::array();
      for (const ObjectSpec& s : specs) inputs.push_back(s.to_string());
      j["input"] = specs.size() == 1 ? inputs.front() : inputs;
    }
    for (auto& [key, value] : report.json.items()) j[key] = value;
    out << j.dump() << '\n';
  } else {
    out << report.text;
  }
  return report.code;
}

}  // namespace betagap
