#include "repsmooth/ncpoly.hpp"

#include <cctype>
#include <sstream>

#include "repsmooth/error.hpp"

namespace repsmooth {

NCPoly NCPoly::constant(std::uint32_t generators, const Rational& c) {
  NCPoly p(generators);
  p.add_term({}, c);
  return p;
}

NCPoly NCPoly::generator(std::uint32_t generators, std::uint32_t index) {
  if (index >= generators) throw DimensionMismatch("generator index out of range");
  return word(generators, {index});
}

NCPoly NCPoly::word(std::uint32_t generators, NCWord w, const Rational& c) {
  for (auto l : w)
    if (l >= generators) throw DimensionMismatch("generator index out of range");
  NCPoly p(generators);
  p.add_term(w, c);
  return p;
}

std::size_t NCPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

void NCPoly::add_term(const NCWord& w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  if (m_ != o.m_) throw DimensionMismatch("generator count mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  if (m_ != o.m_) throw DimensionMismatch("generator count mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  if (a.m_ != b.m_) throw DimensionMismatch("generator count mismatch");
  NCPoly out(a.m_);
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) {
      NCWord w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add_term(w, c * d);
    }
  return out;
}

NCPoly nc_add(const NCPoly& f, const NCPoly& g) { return f + g; }
NCPoly nc_mul(const NCPoly& f, const NCPoly& g) { return f * g; }

std::string word_to_string(const NCWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += '*';
    s += 'x' + std::to_string(w[k] + 1);
  }
  return s;
}

std::string to_string(const NCPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + '*';
      out += word_to_string(w);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::uint32_t m) : s_(text), m_(m) {}

  NCPoly parse() {
    NCPoly out(m_);
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [w, c] = term();
      out.add_term(w, sign * c);
      skip();
    }
    return out;
  }

  NCWord word_only() {
    skip();
    auto [w, c] = term();
    skip();
    if (pos_ != s_.size() || c != 1) fail("expected a single word");
    return w;
  }

 private:
  std::pair<NCWord, Rational> term() {
    NCWord w;
    Rational c = 1;
    factor(w, c);
    skip();
    while (peek() == '*') {
      ++pos_;
      skip();
      factor(w, c);
      skip();
    }
    return {w, c};
  }

  void factor(NCWord& w, Rational& c) {
    if (peek() == 'x') {
      ++pos_;
      const auto idx = number();
      if (idx == 0 || idx > m_) fail("generator x" + std::to_string(idx) + " out of range");
      std::size_t power = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        power = number();
      }
      for (std::size_t k = 0; k < power; ++k) w.push_back(static_cast<std::uint32_t>(idx - 1));
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/') {
        ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      c *= parse_rational(s_.substr(start, pos_ - start));
    } else {
      fail("unexpected character");
    }
  }

  std::size_t number() {
    const auto start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::uint32_t m_;
  std::size_t pos_ = 0;
};

struct MatOps {
  std::size_t n;
  Mat one() const { return Mat::identity(n); }
  Mat add(const Mat& a, const Mat& b) const { return a + b; }
  Mat mul(const Mat& a, const Mat& b) const { return a * b; }
  Mat scale(const Rational& s, const Mat& a) const { return a * s; }
};

std::size_t check_point(std::uint32_t m, std::span<const Mat> point) {
  if (point.size() != m)
    throw DimensionMismatch("point has " + std::to_string(point.size()) + " matrices, expected " + std::to_string(m));
  if (point.empty()) return 0;
  const std::size_t n = point.front().rows();
  for (const auto& x : point)
    if (x.rows() != n || x.cols() != n) throw DimensionMismatch("point matrices must all be n x n");
  return n;
}

}  // namespace

NCPoly NCPoly::parse(std::string_view text, std::uint32_t generators) { return Parser(text, generators).parse(); }

NCWord parse_word(std::string_view text, std::uint32_t generators) {
  const auto trimmed = text.find_first_not_of(" \t");
  if (trimmed != std::string_view::npos && text.substr(trimmed) == "1") return {};
  return Parser(text, generators).word_only();
}

Mat evaluate_word(const NCWord& w, std::span<const Mat> point) {
  if (point.empty()) throw DimensionMismatch("cannot evaluate on an empty point");
  Mat acc = Mat::identity(point.front().rows());
  for (auto l : w) {
    if (l >= point.size()) throw DimensionMismatch("word letter out of range");
    acc = acc * point[l];
  }
  return acc;
}

Mat evaluate(const NCPoly& f, std::span<const Mat> point) {
  const std::size_t n = check_point(f.generators(), point);
  return evaluate_in<Mat>(f, point, MatOps{n});
}

Mat leibniz(const NCPoly& f, std::span<const Mat> point, std::span<const Mat> direction) {
  const std::size_t n = check_point(f.generators(), point);
  if (check_point(f.generators(), direction) != n) throw DimensionMismatch("direction and point sizes differ");
  Mat acc(n, n);
  for (const auto& [w, c] : f.terms()) {
    const std::size_t k = w.size();
    // prefix[j] = X(w[0..j)), suffix[j] = X(w[j+1..k)).
    std::vector<Mat> prefix(k + 1), suffix(k + 1);
    prefix[0] = Mat::identity(n);
    for (std::size_t j = 0; j < k; ++j) prefix[j + 1] = prefix[j] * point[w[j]];
    suffix[k] = Mat::identity(n);
    for (std::size_t j = k; j-- > 0;) suffix[j] = point[w[j]] * suffix[j + 1];
    for (std::size_t j = 0; j < k; ++j) acc += (prefix[j] * direction[w[j]] * suffix[j + 1]) * c;
  }
  return acc;
}

}  // namespace repsmooth
