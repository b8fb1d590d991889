#include "qseries/witness.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace qseries {

namespace {

void validate_structure(const WitnessCertificate& c) {
  if (c.level_n < 1 || c.M < 1 || c.m < 1) throw Error("certificate: N, M and m must be >= 1");
  if (c.j < 0 || c.j >= c.m) throw Error("certificate: j must lie in [0, m)");
  if (std::find(c.pset.begin(), c.pset.end(), c.j) == c.pset.end()) {
    throw Error("certificate: j must belong to P");
  }
  for (auto p : c.pset) {
    if (p < 0 || p >= c.m) throw Error("certificate: P members must lie in [0, m)");
  }
  for (auto [delta, e] : c.r) {
    if (delta < 1 || c.M % delta != 0) throw Error("certificate: r keys must divide M");
  }
  if (c.poly.empty()) throw Error("certificate: empty polynomial");
  if (sgn(c.claimed_common_factor) <= 0) throw Error("certificate: common factor must be positive");
}

bool claimed_factor_divides(const WitnessCertificate& c) {
  return std::all_of(c.poly.begin(), c.poly.end(), [&](const BigInt& p) {
    return mpz_divisible_p(p.get_mpz_t(), c.claimed_common_factor.get_mpz_t()) != 0;
  });
}

}  // namespace

void validate(const WitnessCertificate& c) {
  validate_structure(c);
  if (!claimed_factor_divides(c)) {
    throw Error("certificate: common factor " + c.claimed_common_factor.get_str() +
                " does not divide every coefficient");
  }
}

CommonFactor certificate_common_factor(const WitnessCertificate& c) {
  if (c.poly.empty()) throw Error("certificate: empty polynomial");
  BigInt g = 0;
  for (const auto& p : c.poly) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.get_mpz_t());
  if (sgn(g) == 0) return {g, std::nullopt};
  return {g, two_adic_valuation(g)};
}

WitnessReport verify_witness(const WitnessCertificate& c, std::int64_t T) {
  validate_structure(c);
  const Ring ring = Ring::exact();
  const std::int64_t pre_shift = c.prefactor.qshift;
  const std::int64_t h_shift = c.hauptmodul.qshift;
  const auto degree = static_cast<std::int64_t>(c.poly.size()) - 1;

  std::int64_t lowest = pre_shift;
  for (std::int64_t i = 0; i <= degree; ++i) {
    if (sgn(c.poly[static_cast<std::size_t>(i)]) != 0) lowest = std::min(lowest, i * h_shift);
  }
  if (T <= lowest) {
    throw Error("witness: truncation " + std::to_string(T) +
                " leaves no coefficient to compare (lowest exponent " + std::to_string(lowest) +
                ")");
  }

  // left side: every extracted stream is needed through q^(T - pre_shift)
  const std::int64_t stream_len = std::max<std::int64_t>(1, T - pre_shift);
  std::int64_t input_trunc = 1;
  for (auto p : c.pset) input_trunc = std::max(input_trunc, c.m * (stream_len - 1) + p + 1);
  const auto input = expand(make_eta_quotient(c.M, c.r), ring, input_trunc);
  LaurentSeries streams = LaurentSeries::one(ring, stream_len);
  for (auto p : c.pset) {
    streams = mul(streams, extract(input, Progression(c.m, p)).truncated(stream_len));
  }
  const LaurentSeries pre = expand(c.prefactor, ring, std::max(T, pre_shift + 1));
  const LaurentSeries lhs = mul(pre, streams);

  // right side: hauptmodul^i has trunc h_trunc + (i - 1) * h_shift
  std::int64_t h_trunc = std::max(T, h_shift + 1);
  if (h_shift < 0 && degree > 1) h_trunc = T - (degree - 1) * h_shift;
  const LaurentSeries h = expand(c.hauptmodul, ring, h_trunc);
  LaurentSeries rhs = LaurentSeries::zero(ring, std::min(lowest, T - 1), T);
  if (sgn(c.poly[0]) != 0 && T > 0) rhs = rhs + LaurentSeries::monomial(ring, c.poly[0], 0, T);
  std::optional<LaurentSeries> power;
  for (std::int64_t i = 1; i <= degree; ++i) {
    power = power ? mul(*power, h) : h;
    const BigInt& coeff = c.poly[static_cast<std::size_t>(i)];
    if (sgn(coeff) == 0 || power->offset() >= T) continue;
    rhs = rhs + power->truncated(T).scaled(coeff);
  }

  const auto report = compare_series(c.id, lhs, rhs, T);
  const auto factor = certificate_common_factor(c);
  WitnessReport out{c.id, T, report.matched, report.first_mismatch, factor.gcd,
                    factor.two_adic_valuation, std::nullopt, claimed_factor_divides(c)};
  if (factor.two_adic_valuation) {
    BigInt mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), 2, static_cast<unsigned long>(*factor.two_adic_valuation));
    out.implied_modulus = mod;
  }
  return out;
}

WitnessCertificate builtin_certificate() {
  WitnessCertificate c;
  c.id = "t5-8n7";
  c.level_n = 8;
  c.M = 2;
  c.r = {{1, -10}, {2, 5}};
  c.m = 8;
  c.j = 7;
  c.pset = {7};
  c.prefactor = make_eta_quotient(8, {{1, 79}, {2, -38}, {4, 36}, {8, -72}}, -17);
  c.hauptmodul = make_eta_quotient(8, {{2, -4}, {4, 12}, {8, -8}}, -1);
  // coefficients of t^0 .. t^17
  for (const char* digits : {"0",
                             "162177965096960",
                             "12820855335682048",
                             "181969724152741888",
                             "911076328575336448",
                             "2131168862538825728",
                             "2711338639077408768",
                             "2054802074125729792",
                             "979900817664376832",
                             "302871878945472512",
                             "61243801104023552",
                             "8026570602053632",
                             "661947909931008",
                             "32519056130048",
                             "868870094848",
                             "10846240768",
                             "47761408",
                             "37760"}) {
    c.poly.emplace_back(digits);
  }
  c.claimed_common_factor = 128;
  return c;
}

// ---------------------------------------------------------------------------
// text format

namespace {

ParseError line_error(std::size_t line, const std::string& what) {
  return ParseError(line, what, ParseError::Unit::Line);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::int64_t parse_int(const std::string& s, std::size_t line) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw line_error(line, "expected an integer, found '" + s + "'");
  }
  if (used != s.size()) throw line_error(line, "expected an integer, found '" + s + "'");
  return v;
}

BigInt parse_big(const std::string& s, std::size_t line) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw line_error(line, "expected a decimal integer, found '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (seps.find(ch) != std::string::npos) {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

}  // namespace

WitnessCertificate parse_certificate(std::string_view text) {
  static const std::vector<std::string> required = {
      "id", "N", "M", "r", "m", "j", "P", "prefactor", "hauptmodul", "poly", "common_factor"};
  std::map<std::string, std::pair<std::string, std::size_t>> fields;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s.front() == '#') continue;
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw line_error(line, "expected 'key: value'");
    const std::string key = trim(s.substr(0, colon));
    const bool known = key == "AB" || std::find(required.begin(), required.end(), key) != required.end();
    if (!known) throw line_error(line, "unknown field '" + key + "'");
    if (fields.count(key)) throw line_error(line, "duplicate field '" + key + "'");
    fields[key] = {trim(s.substr(colon + 1)), line};
  }
  for (const auto& key : required) {
    if (!fields.count(key)) throw line_error(line, "missing field '" + key + "'");
  }

  WitnessCertificate c;
  auto value = [&](const std::string& key) -> const std::string& { return fields[key].first; };
  auto at = [&](const std::string& key) { return fields[key].second; };

  c.id = value("id");
  if (c.id.empty() || c.id.find_first_of(" \t") != std::string::npos) {
    throw line_error(at("id"), "id must be a single token");
  }
  c.level_n = parse_int(value("N"), at("N"));
  c.M = parse_int(value("M"), at("M"));
  for (const auto& pair : split(value("r"), ",")) {
    const auto parts = split(pair, ":");
    if (parts.size() != 2) throw line_error(at("r"), "expected divisor:exponent, found '" + pair + "'");
    c.r[parse_int(parts[0], at("r"))] += parse_int(parts[1], at("r"));
  }
  c.m = parse_int(value("m"), at("m"));
  c.j = parse_int(value("j"), at("j"));
  std::set<std::int64_t> seen;
  for (const auto& p : split(value("P"), ",")) {
    const auto v = parse_int(p, at("P"));
    if (!seen.insert(v).second) throw line_error(at("P"), "repeated member in P");
    c.pset.push_back(v);
  }
  for (const char* key : {"prefactor", "hauptmodul"}) {
    try {
      (key == std::string("prefactor") ? c.prefactor : c.hauptmodul) = parse_eta_quotient(value(key));
    } catch (const ParseError& e) {
      throw line_error(at(key), std::string(key) + ": " + e.what());
    }
  }
  if (fields.count("AB") && split(value("AB"), ", ") != std::vector<std::string>{"1"}) {
    throw line_error(at("AB"), "only AB = 1 is supported");
  }
  for (const auto& p : split(value("poly"), " \t")) c.poly.push_back(parse_big(p, at("poly")));
  c.claimed_common_factor = parse_big(value("common_factor"), at("common_factor"));
  try {
    validate(c);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw line_error(line, e.what());
  }
  return c;
}

std::string serialize_certificate(const WitnessCertificate& c) {
  std::ostringstream out;
  out << "id: " << c.id << "\n";
  out << "N: " << c.level_n << "\n";
  out << "M: " << c.M << "\n";
  out << "r: ";
  bool first = true;
  for (auto [delta, e] : c.r) {
    out << (first ? "" : ", ") << delta << ":" << e;
    first = false;
  }
  out << "\n";
  out << "m: " << c.m << "\n";
  out << "j: " << c.j << "\n";
  out << "P: ";
  for (std::size_t i = 0; i < c.pset.size(); ++i) out << (i ? ", " : "") << c.pset[i];
  out << "\n";
  out << "prefactor: " << to_string(c.prefactor) << "\n";
  out << "hauptmodul: " << to_string(c.hauptmodul) << "\n";
  out << "AB: 1\n";
  out << "poly:";
  for (const auto& p : c.poly) out << " " << p.get_str();
  out << "\n";
  out << "common_factor: " << c.claimed_common_factor.get_str() << "\n";
  return out.str();
}

WitnessCertificate load_certificate(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open certificate file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_certificate(buf.str());
}

}  // namespace qseries
