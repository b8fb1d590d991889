#include "qseries/eta_quotient.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "qseries/products.hpp"

namespace qseries {

EtaQuotient make_eta_quotient(std::int64_t level, std::map<std::int64_t, std::int64_t> exponents,
                              std::int64_t qshift) {
  if (level < 1) throw Error("eta quotient level must be >= 1");
  EtaQuotient eq{level, {}, qshift};
  for (auto [delta, r] : exponents) {
    if (delta < 1 || level % delta != 0) {
      throw Error("divisor " + std::to_string(delta) + " does not divide level " +
                  std::to_string(level));
    }
    if (r != 0) eq.exponents[delta] = r;
  }
  return eq;
}

namespace {

class QuotientParser {
 public:
  explicit QuotientParser(std::string_view text) : text_(text) {}

  EtaQuotient parse() {
    std::int64_t level = 1;
    std::map<std::int64_t, std::int64_t> exps;
    std::int64_t qshift = 0;
    skip_space();
    if (at_end()) fail("empty eta quotient");
    while (true) {
      skip_space();
      const char c = peek();
      if (c == 'q') {
        ++pos_;
        qshift += optional_power();
      } else if (c == 'f') {
        ++pos_;
        skip_space();
        const std::int64_t delta = read_int(false);
        if (delta < 1) fail("divisor must be positive");
        exps[delta] += optional_power();
        level = std::lcm(level, delta);
      } else if (c == '1') {
        ++pos_;
      } else {
        fail(at_end() ? "expected a term" : std::string("unexpected '") + c + "'");
      }
      skip_space();
      if (at_end()) break;
      if (peek() != '*') fail(std::string("expected '*', found '") + peek() + "'");
      ++pos_;
    }
    return make_eta_quotient(level, std::move(exps), qshift);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  std::int64_t optional_power() {
    skip_space();
    if (peek() != '^') return 1;
    ++pos_;
    skip_space();
    return read_int(true);
  }

  std::int64_t read_int(bool allow_sign) {
    const std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
      skip_space();
    }
    const std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = digits;
      fail("expected an integer");
    }
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, v);
    if (ec != std::errc{}) {
      pos_ = start;
      fail("integer out of range");
    }
    return negative ? -v : v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

EtaQuotient parse_eta_quotient(std::string_view text) { return QuotientParser(text).parse(); }

std::string to_string(const EtaQuotient& eq) {
  std::string out;
  auto append = [&](const std::string& term) {
    if (!out.empty()) out += " * ";
    out += term;
  };
  if (eq.qshift == 1) append("q");
  if (eq.qshift != 0 && eq.qshift != 1) append("q^" + std::to_string(eq.qshift));
  for (auto [delta, r] : eq.exponents) append("f" + std::to_string(delta) + "^" + std::to_string(r));
  return out.empty() ? "1" : out;
}

EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b) {
  auto exps = a.exponents;
  for (auto [delta, r] : b.exponents) exps[delta] += r;
  return make_eta_quotient(std::lcm(a.level, b.level), std::move(exps), a.qshift + b.qshift);
}

LaurentSeries expand(const EtaQuotient& eq, Ring ring, std::int64_t T) {
  if (T <= eq.qshift) {
    throw Error("truncation " + std::to_string(T) + " must exceed the q-shift " +
                std::to_string(eq.qshift));
  }
  const std::int64_t len = T - eq.qshift;
  LaurentSeries acc = LaurentSeries::one(ring, len);
  for (auto [delta, r] : eq.exponents) acc = mul_pow(acc, pentagonal_series(delta, ring, len), r);
  return acc.shifted(eq.qshift);
}

LaurentSeries overpartition_gf(std::int64_t t, Ring ring, std::int64_t T) {
  if (t < 1) throw Error("color count t must be >= 1");
  return expand(make_eta_quotient(2, {{1, -2 * t}, {2, t}}), ring, T);
}

LaurentSeries colored_partition_gf(std::int64_t t, Ring ring, std::int64_t T) {
  if (t < 1) throw Error("color count t must be >= 1");
  return expand(make_eta_quotient(1, {{1, -t}}), ring, T);
}

}  // namespace qseries
