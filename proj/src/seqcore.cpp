#include "betagap/seqcore.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "betagap/error.hpp"

namespace betagap {

std::string_view ordering_name(Ordering order) {
  switch (order) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

std::size_t least_period(std::span<const Letter> w) {
  if (w.empty()) throw std::invalid_argument("least_period of empty word");
  // Failure function: the longest proper border gives the shortest period.
  std::vector<std::size_t> border(w.size(), 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && w[i] != w[k]) k = border[k - 1];
    if (w[i] == w[k]) ++k;
    border[i] = k;
  }
  std::size_t p = w.size() - border.back();
  return w.size() % p == 0 ? p : w.size();
}

bool is_primitive(std::span<const Letter> w) {
  return least_period(w) == w.size();
}

FiniteWord repeat(std::span<const Letter> block, std::size_t times) {
  FiniteWord out;
  out.reserve(block.size() * times);
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), block.begin(), block.end());
  return out;
}

EPWord EPWord::finite(FiniteWord letters) {
  return EPWord(std::move(letters), {});
}

EPWord EPWord::filled(FiniteWord letters, Letter fill) {
  return periodic(std::move(letters), FiniteWord{fill});
}

EPWord EPWord::periodic(FiniteWord pre, FiniteWord per) {
  if (per.empty()) throw std::invalid_argument("periodic word needs a non-empty period");
  EPWord w(std::move(pre), std::move(per));
  w.canonicalize();
  return w;
}

void EPWord::canonicalize() {
  if (per_.empty()) return;
  per_.resize(least_period(per_));
  // Fold trailing preperiod letters into the period by rotating it.
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
  }
}

Letter EPWord::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  if (per_.empty()) throw std::out_of_range("position past the end of a finite word");
  return per_[(i - pre_.size()) % per_.size()];
}

FiniteWord EPWord::prefix(std::size_t n) const {
  if (!is_infinite()) n = std::min(n, pre_.size());
  FiniteWord out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
  return out;
}

namespace {

void append_letters(std::ostringstream& os, const FiniteWord& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  EPWord parse() {
    FiniteWord pre;
    FiniteWord per;
    skip_space();
    while (pos_ < text_.size() && text_[pos_] != '(') {
      pre.push_back(letter());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        skip_space();
        if (pos_ >= text_.size()) fail("letter or '('");
      } else if (pos_ < text_.size() && text_[pos_] != '(') {
        fail("',' or '('");
      }
    }
    if (pos_ < text_.size()) {
      ++pos_;  // '('
      skip_space();
      per.push_back(letter());
      skip_space();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        skip_space();
        per.push_back(letter());
        skip_space();
      }
      expect(')');
      expect('*');
      skip_space();
      if (pos_ != text_.size()) fail("end of word");
      return EPWord::periodic(std::move(pre), std::move(per));
    }
    return EPWord::finite(std::move(pre));
  }

 private:
  Letter letter() {
    std::size_t start = pos_;
    unsigned long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > 0xFFFFFFFFull) fail("letter below 2^32");
      ++pos_;
    }
    if (pos_ == start) fail("letter");
    return static_cast<Letter>(value);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("'") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw Error(ErrorCode::SyntaxError,
                "expected " + expected,
                pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

EPWord EPWord::parse(std::string_view text) {
  return WordParser(text).parse();
}

std::string EPWord::to_string(std::string_view separator) const {
  std::ostringstream os;
  append_letters(os, pre_);
  if (!per_.empty()) {
    if (!pre_.empty()) os << separator;
    os << '(';
    append_letters(os, per_);
    os << ")*";
  }
  return os.str();
}

std::size_t decision_bound(const EPWord& u, const EPWord& v) {
  std::size_t pu = u.period().size(), pv = v.period().size();
  std::size_t l = (pu && pv) ? std::lcm(pu, pv) : std::max(pu, pv);
  return u.preperiod().size() + v.preperiod().size() + l + std::max(pu, pv);
}

Ordering lex_compare(const EPWord& u, const EPWord& v) {
  std::size_t bound = decision_bound(u, v);
  if (!u.is_infinite()) bound = std::min(bound, u.length() + 1);
  if (!v.is_infinite()) bound = std::min(bound, v.length() + 1);
  for (std::size_t i = 0; i < bound; ++i) {
    bool u_ended = !u.is_infinite() && i >= u.length();
    bool v_ended = !v.is_infinite() && i >= v.length();
    if (u_ended || v_ended) {
      if (u_ended && v_ended) return Ordering::Equal;
      return u_ended ? Ordering::Less : Ordering::Greater;
    }
    Letter a = u.at(i), b = v.at(i);
    if (a != b) return a < b ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

EPWord shift(const EPWord& u, std::size_t k) {
  const FiniteWord& pre = u.preperiod();
  const FiniteWord& per = u.period();
  if (k <= pre.size()) {
    FiniteWord rest(pre.begin() + static_cast<std::ptrdiff_t>(k), pre.end());
    return per.empty() ? EPWord::finite(std::move(rest)) : EPWord::periodic(std::move(rest), per);
  }
  if (per.empty()) return EPWord::finite({});
  std::size_t offset = (k - pre.size()) % per.size();
  FiniteWord rotated(per.begin() + static_cast<std::ptrdiff_t>(offset), per.end());
  rotated.insert(rotated.end(), per.begin(), per.begin() + static_cast<std::ptrdiff_t>(offset));
  return EPWord::periodic({}, std::move(rotated));
}

}  // namespace betagap
