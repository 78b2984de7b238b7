#include "betagap/covers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "betagap/error.hpp"

namespace betagap {

using Json = nlohmann::ordered_json;

LabeledGraph::LabeledGraph(std::size_t vertex_count) : names_(vertex_count) {}

std::size_t LabeledGraph::add_vertex(std::string name) {
  names_.push_back(std::move(name));
  return names_.size() - 1;
}

void LabeledGraph::check_vertex(std::size_t v) const {
  if (v >= names_.size()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

void LabeledGraph::add_edge(std::size_t from, std::size_t to, Letter label) {
  check_vertex(from);
  check_vertex(to);
  if (label > 1) throw std::invalid_argument("edge labels are 0 or 1");
  edges_.push_back({from, to, label});
}

std::string LabeledGraph::name(std::size_t v) const {
  check_vertex(v);
  return names_[v].empty() ? std::to_string(v) : names_[v];
}

void LabeledGraph::set_name(std::size_t v, std::string name) {
  check_vertex(v);
  names_[v] = std::move(name);
}

void LabeledGraph::set_distinguished(std::size_t v) {
  check_vertex(v);
  distinguished_ = v;
}

CountMatrix LabeledGraph::underlying() const {
  CountMatrix a(vertex_count(), std::vector<std::size_t>(vertex_count(), 0));
  for (const Edge& e : edges_) ++a[e.from][e.to];
  return a;
}

CountMatrix LabeledGraph::label_matrix(Letter label) const {
  CountMatrix a(vertex_count(), std::vector<std::size_t>(vertex_count(), 0));
  for (const Edge& e : edges_) {
    if (e.label == label) ++a[e.from][e.to];
  }
  return a;
}

namespace {

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string LabeledGraph::to_dot(std::string_view graph_name) const {
  std::ostringstream os;
  os << "digraph " << dot_id(std::string(graph_name)) << " {\n";
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    os << "  " << dot_id(name(v));
    if (distinguished_ == v) os << " [shape=doublecircle]";
    os << ";\n";
  }
  for (const Edge& e : edges_)
    os << "  " << dot_id(name(e.from)) << " -> " << dot_id(name(e.to)) << " [label=\"" << e.label
       << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string LabeledGraph::to_json() const {
  Json j;
  j["vertices"] = Json::array();
  for (std::size_t v = 0; v < vertex_count(); ++v) j["vertices"].push_back(names_[v]);
  j["edges"] = Json::array();
  for (const Edge& e : edges_) j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
  if (distinguished_) j["distinguished"] = *distinguished_;
  if (!warnings_.empty()) j["warnings"] = warnings_;
  return j.dump();
}

LabeledGraph LabeledGraph::from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
    LabeledGraph g;
    for (const auto& name : j.at("vertices")) g.add_vertex(name.get<std::string>());
    for (const auto& e : j.at("edges"))
      g.add_edge(e.at("from").get<std::size_t>(), e.at("to").get<std::size_t>(),
                 e.at("label").get<Letter>());
    if (j.contains("distinguished")) g.set_distinguished(j["distinguished"].get<std::size_t>());
    if (j.contains("warnings"))
      for (const auto& w : j["warnings"]) g.add_warning(w.get<std::string>());
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("bad graph JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorCode::SyntaxError, std::string("bad graph JSON: ") + e.what());
  }
}

std::string follower_vertex_name(std::size_t m) {
  if (m == 0) return "F1";
  if (m == 1) return "F10";
  return "F10^" + std::to_string(m);
}

LabeledGraph fischer_gap(const GapSet& s, std::optional<std::size_t> horizon) {
  EPWord chi = s.indicator();
  std::size_t n = 0;
  bool wraps = false;
  std::size_t wrap_to = 0;
  switch (s.kind()) {
    case GapKind::Finite:
      if (s.size() < 2) throw Error(ErrorCode::TooSmall, "the cover needs |S| >= 2");
      n = chi.length();
      break;
    case GapKind::EventuallyPeriodic:
      n = chi.preperiod().size() + chi.period().size();
      wraps = true;
      wrap_to = chi.preperiod().size();
      break;
    case GapKind::Truncated:
      if (!horizon) throw Error(ErrorCode::HorizonRequired, "a truncated set needs --horizon");
      if (*horizon > s.horizon())
        throw Error(ErrorCode::HorizonTooSmall, "membership is known only up to " +
                                                    std::to_string(s.horizon()));
      n = *horizon + 1;
      break;
  }
  LabeledGraph g;
  for (std::size_t m = 0; m < n; ++m) g.add_vertex(follower_vertex_name(m));
  g.set_distinguished(0);
  for (std::size_t m = 0; m < n; ++m) {
    if (m + 1 < n) g.add_edge(m, m + 1, 0);
    else if (wraps) g.add_edge(m, wrap_to, 0);
    if (chi.at(m) == 1) g.add_edge(m, 0, 1);
  }
  if (s.kind() == GapKind::EventuallyPeriodic) {
    CoverCase c = cover_case(s);
    if (!c.last_vertex) {
      g.add_warning("no case formula applies to this set (k = " + std::to_string(c.k) + ")");
    } else if (*c.last_vertex + 1 != n) {
      g.add_warning("case (" + std::string(cover_case_name(c.kind)) + ") formula gives n(S) = " +
                    std::to_string(*c.last_vertex) + " but the follower classes give " +
                    std::to_string(n - 1));
    }
    if (c.kind == CoverCase::Kind::Case2 && chi.at(n - 1) == 0)
      g.add_warning("case (2): n(S) = " + std::to_string(n - 1) +
                    " is not in S, so the last vertex has no 1-edge");
  }
  return g;
}

LabeledGraph fischer_beta(const ParrySeq& s, std::optional<std::size_t> horizon) {
  require_valid(s);
  LabeledGraph g;
  if (s.is_full_shift()) {
    g.add_vertex("a1");
    g.set_distinguished(0);
    g.add_edge(0, 0, 0);
    g.add_edge(0, 0, 1);
    return g;
  }
  std::size_t n = 0;
  switch (s.kind()) {
    case ParryKind::Finite: n = s.preperiod_length(); break;
    case ParryKind::EventuallyPeriodic: n = s.preperiod_length() + s.period_length(); break;
    case ParryKind::Truncated:
      if (!horizon) throw Error(ErrorCode::HorizonRequired, "a truncated expansion needs --horizon");
      if (*horizon > s.horizon() || *horizon == 0)
        throw Error(ErrorCode::HorizonTooSmall,
                    "digits are known only up to " + std::to_string(s.horizon()));
      n = *horizon;
      break;
  }
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex("a" + std::to_string(i));
  g.set_distinguished(0);
  for (std::size_t i = 1; i < n; ++i) {
    Letter a = s.digit(i);
    g.add_edge(i - 1, i, a);
    if (a == 1) g.add_edge(i - 1, 0, 0);
  }
  Letter last = s.digit(n);
  switch (s.kind()) {
    case ParryKind::Finite: g.add_edge(n - 1, 0, 0); break;
    case ParryKind::EventuallyPeriodic:
      g.add_edge(n - 1, s.preperiod_length(), last);
      if (last == 1) g.add_edge(n - 1, 0, 0);
      break;
    case ParryKind::Truncated:
      if (last == 1) g.add_edge(n - 1, 0, 0);
      break;
  }
  return g;
}

namespace {

// Refines `start` until stable; signature(v, block_of) must be finer than
// the current block.
template <typename Signature>
Partition refine(std::size_t n, Signature signature) {
  std::vector<std::size_t> block_of(n, 0);
  std::size_t count = n ? 1 : 0;
  while (true) {
    using Key = std::pair<std::size_t, decltype(signature(0, block_of))>;
    std::map<Key, std::size_t> ids;
    std::vector<std::size_t> next(n);
    // Ids in order of first occurrence keep the output deterministic.
    for (std::size_t v = 0; v < n; ++v) {
      Key key{block_of[v], signature(v, block_of)};
      auto it = ids.find(key);
      if (it == ids.end()) it = ids.emplace(std::move(key), ids.size()).first;
      next[v] = it->second;
    }
    block_of = std::move(next);
    if (ids.size() == count) break;
    count = ids.size();
  }
  Partition p;
  p.block_of = block_of;
  p.blocks.resize(count);
  for (std::size_t v = 0; v < n; ++v) p.blocks[block_of[v]].push_back(v);
  return p;
}

bool strongly_connected(const CountMatrix& a) {
  std::size_t n = a.size();
  if (n == 0) return false;
  auto reaches_all = [&](bool reverse) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        std::size_t c = reverse ? a[v][u] : a[u][v];
        if (c && !seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reaches_all(false) && reaches_all(true);
}

}  // namespace

PresentationFlags check_presentation(const LabeledGraph& g) {
  PresentationFlags flags;
  std::size_t n = g.vertex_count();
  flags.right_resolving = true;
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t i = 0; i < g.edges().size(); ++i) out[g.edges()[i].from].push_back(i);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Letter> labels;
    for (std::size_t e : out[v]) labels.push_back(g.edges()[e].label);
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) flags.right_resolving = false;
  }
  flags.irreducible = strongly_connected(g.underlying());
  Partition p = refine(n, [&](std::size_t v, const std::vector<std::size_t>& block_of) {
    std::vector<std::pair<Letter, std::size_t>> sig;
    for (std::size_t e : out[v]) sig.emplace_back(g.edges()[e].label, block_of[g.edges()[e].to]);
    std::sort(sig.begin(), sig.end());
    sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
    return sig;
  });
  flags.follower_separated = p.is_discrete();
  return flags;
}

MinFactor min_factor(const CountMatrix& a) {
  std::size_t n = a.size();
  MinFactor out;
  out.partition = refine(n, [&](std::size_t v, const std::vector<std::size_t>& block_of) {
    std::size_t blocks = 1 + *std::max_element(block_of.begin(), block_of.end());
    std::vector<std::size_t> counts(blocks, 0);
    for (std::size_t u = 0; u < n; ++u) counts[block_of[u]] += a[v][u];
    return counts;
  });
  std::size_t k = out.partition.size();
  out.quotient.assign(k, std::vector<std::size_t>(k, 0));
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t rep = out.partition.blocks[p].front();
    for (std::size_t u = 0; u < n; ++u) out.quotient[p][out.partition.block_of[u]] += a[rep][u];
  }
  return out;
}

MinFactor min_factor(const LabeledGraph& g) {
  return min_factor(g.underlying());
}

namespace {

constexpr std::size_t kIsoLimit = 64;

class IsoSearch {
 public:
  IsoSearch(const std::vector<CountMatrix>& a, const std::vector<CountMatrix>& b)
      : a_(a), b_(b), n_(a.front().size()) {}

  std::optional<std::vector<std::size_t>> run() {
    if (!colour()) return std::nullopt;
    // Match the rarest colours first.
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<std::size_t> freq(2 * n_, 0);
    for (std::size_t v = 0; v < n_; ++v) ++freq[colour_a_[v]];
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return freq[colour_a_[x]] < freq[colour_a_[y]];
    });
    map_.assign(n_, kNone);
    used_.assign(n_, false);
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Joint colour refinement on the disjoint union; false if the colour
  // histograms differ.
  bool colour() {
    std::size_t layers = a_.size();
    std::size_t total = 2 * n_;
    auto matrix = [&](std::size_t layer, std::size_t i, std::size_t j) -> std::size_t {
      // Vertices 0..n-1 are from a, n..2n-1 from b; no edges cross.
      bool ia = i < n_, ja = j < n_;
      if (ia != ja) return 0;
      return ia ? a_[layer][i][j] : b_[layer][i - n_][j - n_];
    };
    Partition p = refine(total, [&](std::size_t v, const std::vector<std::size_t>& block_of) {
      std::size_t blocks = 1 + *std::max_element(block_of.begin(), block_of.end());
      std::vector<std::size_t> sig(layers * (2 * blocks + 1), 0);
      for (std::size_t layer = 0; layer < layers; ++layer) {
        std::size_t base = layer * (2 * blocks + 1);
        sig[base + 2 * blocks] = matrix(layer, v, v);
        for (std::size_t u = 0; u < total; ++u) {
          sig[base + block_of[u]] += matrix(layer, v, u);
          sig[base + blocks + block_of[u]] += matrix(layer, u, v);
        }
      }
      return sig;
    });
    colour_a_.assign(p.block_of.begin(), p.block_of.begin() + static_cast<std::ptrdiff_t>(n_));
    colour_b_.assign(p.block_of.begin() + static_cast<std::ptrdiff_t>(n_), p.block_of.end());
    std::vector<std::size_t> ha(p.size(), 0), hb(p.size(), 0);
    for (std::size_t v = 0; v < n_; ++v) {
      ++ha[colour_a_[v]];
      ++hb[colour_b_[v]];
    }
    return ha == hb;
  }

  bool consistent(std::size_t u, std::size_t v) const {
    for (std::size_t layer = 0; layer < a_.size(); ++layer) {
      if (a_[layer][u][u] != b_[layer][v][v]) return false;
      for (std::size_t w = 0; w < n_; ++w) {
        if (map_[w] == kNone) continue;
        if (a_[layer][u][w] != b_[layer][v][map_[w]]) return false;
        if (a_[layer][w][u] != b_[layer][map_[w]][v]) return false;
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    std::size_t u = order_[depth];
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v] || colour_b_[v] != colour_a_[u] || !consistent(u, v)) continue;
      map_[u] = v;
      used_[v] = true;
      if (extend(depth + 1)) return true;
      map_[u] = kNone;
      used_[v] = false;
    }
    return false;
  }

  const std::vector<CountMatrix>& a_;
  const std::vector<CountMatrix>& b_;
  std::size_t n_;
  std::vector<std::size_t> colour_a_, colour_b_, order_, map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> graph_iso(const std::vector<CountMatrix>& a,
                                                  const std::vector<CountMatrix>& b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("layer counts differ");
  std::size_t n = a.front().size(), m = b.front().size();
  if (n > kIsoLimit || m > kIsoLimit)
    throw Error(ErrorCode::TooLarge, "isomorphism search is limited to 64 vertices");
  if (n != m) return std::nullopt;
  if (n == 0) return std::vector<std::size_t>{};
  return IsoSearch(a, b).run();
}

std::optional<std::vector<std::size_t>> graph_iso(const CountMatrix& a, const CountMatrix& b) {
  return graph_iso(std::vector<CountMatrix>{a}, std::vector<CountMatrix>{b});
}

std::optional<std::vector<std::size_t>> labeled_iso(const LabeledGraph& g, const LabeledGraph& h) {
  return graph_iso({g.label_matrix(0), g.label_matrix(1)}, {h.label_matrix(0), h.label_matrix(1)});
}

LabeledGraph relabel_to_gap(const LabeledGraph& g_beta) {
  auto root = g_beta.distinguished();
  if (!root) throw Error(ErrorCode::NoDistinguishedVertex, "the graph has no distinguished vertex");
  LabeledGraph g;
  for (std::size_t v = 0; v < g_beta.vertex_count(); ++v) g.add_vertex(g_beta.name(v));
  g.set_distinguished(*root);
  for (const Edge& e : g_beta.edges()) g.add_edge(e.from, e.to, e.to == *root ? 1 : 0);
  return g;
}

std::string count_matrix_dot(const CountMatrix& a, std::string_view graph_name) {
  std::ostringstream os;
  os << "digraph " << dot_id(std::string(graph_name)) << " {\n";
  for (std::size_t v = 0; v < a.size(); ++v) os << "  \"P" << v << "\";\n";
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t k = 0; k < a[i][j]; ++k) os << "  \"P" << i << "\" -> \"P" << j << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace betagap
