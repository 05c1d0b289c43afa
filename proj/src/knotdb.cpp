#include "ajcable/knotdb.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "ajcable/errors.hpp"

namespace ajcable {

namespace {

constexpr long kMaxAbsExponent = 1L << 19;

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    skip_ws();
    if (at_end()) throw SyntaxError("empty polynomial", pos_);
    std::vector<Term> terms;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    parse_term(sign, terms);
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
      ++pos_;
      parse_term(c == '-' ? -1 : 1, terms);
    }
    return Poly::from_terms(std::move(terms));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }

  /// Optional sign then at least one digit.
  std::string read_signed_digits(const char* what) {
    skip_ws();
    std::string digits;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      if (peek() == '-') digits.push_back('-');
      ++pos_;
      skip_ws();
    }
    if (!at_digit()) throw SyntaxError(std::string("expected ") + what, pos_);
    while (at_digit()) digits.push_back(text_[pos_++]);
    return digits;
  }

  long read_exponent() {
    const std::size_t start = pos_;
    const std::string s = read_signed_digits("exponent");
    // Anything longer than 7 digits is out of range anyway.
    if (s.size() > 8) throw SyntaxError("exponent out of range", start);
    const long e = std::stol(s);
    if (e > kMaxAbsExponent || e < -kMaxAbsExponent) throw SyntaxError("exponent out of range", start);
    return e;
  }

  void parse_term(int sign, std::vector<Term>& out) {
    skip_ws();
    const std::size_t start = pos_;
    Integer coeff = sign;
    bool have_content = false;
    if (!at_end() && (at_digit() || peek() == '+' || peek() == '-')) {
      coeff *= Integer(read_signed_digits("coefficient"));
      have_content = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || (peek() != 'M' && peek() != 'L')) throw SyntaxError("expected M or L", pos_);
      }
    }
    long e_m = 0, e_l = 0;
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c == '*' && have_content) {
        ++pos_;
        skip_ws();
        if (at_end() || (peek() != 'M' && peek() != 'L')) throw SyntaxError("expected M or L", pos_);
        continue;
      }
      if (c != 'M' && c != 'L') break;
      const std::size_t var_pos = pos_;
      ++pos_;
      long e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        e = read_exponent();
      }
      if (c == 'L') {
        if (e < 0) {
          throw NegativeLExponent("negative L exponent at byte " + std::to_string(var_pos));
        }
        e_l += e;
      } else {
        e_m += e;
      }
      if (e_l > kMaxAbsExponent || e_m > kMaxAbsExponent || e_m < -kMaxAbsExponent) {
        throw SyntaxError("exponent out of range", var_pos);
      }
      have_content = true;
    }
    if (!have_content) throw SyntaxError("expected a term", start);
    out.push_back({MonomialKey(Exponent{0, static_cast<int>(e_m), static_cast<int>(e_l)}),
                   std::move(coeff)});
  }
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Field {
  std::string_view value;
  std::size_t offset;
};

int parse_int(const Field& f, const std::string& key) {
  std::size_t i = 0;
  const std::string_view v = f.value;
  if (i < v.size() && (v[i] == '+' || v[i] == '-')) ++i;
  if (i == v.size() || v.size() > 10) throw SyntaxError("bad integer for '" + key + "'", f.offset);
  for (std::size_t j = i; j < v.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(v[j]))) {
      throw SyntaxError("bad integer for '" + key + "'", f.offset + j);
    }
  }
  return std::stoi(std::string(v));
}

bool parse_bool(const Field& f, const std::string& key) {
  if (f.value == "true") return true;
  if (f.value == "false") return false;
  throw SyntaxError("expected true or false for '" + key + "'", f.offset);
}

const std::vector<std::string> kRequired = {"name", "p", "m", "eta_plus", "eta_minus", "aprime"};
const std::vector<std::string> kOptional = {"attest_irreducible_C", "attest_AJ", "crossings"};

bool known_key(const std::string& k) {
  for (const auto* list : {&kRequired, &kOptional}) {
    for (const auto& s : *list) {
      if (s == k) return true;
    }
  }
  return false;
}

KnotRecord build_record(const std::map<std::string, Field>& fields, std::size_t block_offset) {
  for (const auto& key : kRequired) {
    if (!fields.contains(key)) throw SyntaxError("record missing key '" + key + "'", block_offset);
  }
  KnotRecord r;
  r.name = std::string(fields.at("name").value);
  if (r.name.empty()) throw SyntaxError("empty name", fields.at("name").offset);
  r.p = parse_int(fields.at("p"), "p");
  r.m = parse_int(fields.at("m"), "m");
  r.eta_plus = parse_int(fields.at("eta_plus"), "eta_plus");
  r.eta_minus = parse_int(fields.at("eta_minus"), "eta_minus");
  const Field& ap = fields.at("aprime");
  try {
    r.aprime = parse_polynomial(ap.value);
  } catch (const SyntaxError& e) {
    throw SyntaxError("aprime of '" + r.name + "': bad polynomial", ap.offset + e.offset());
  }
  if (auto it = fields.find("attest_irreducible_C"); it != fields.end()) {
    r.attest_irreducible_C = parse_bool(it->second, it->first);
  }
  if (auto it = fields.find("attest_AJ"); it != fields.end()) r.attest_AJ = parse_bool(it->second, it->first);
  if (auto it = fields.find("crossings"); it != fields.end()) r.crossings = parse_int(it->second, it->first);

  if (r.p <= 1 || r.p % 2 == 0) throw InvariantViolation(r.name, "p must be odd and > 1");
  if (r.eta_plus < 0 || r.eta_minus < 0) throw InvariantViolation(r.name, "crossing signs must be non-negative");
  if (r.crossings && *r.crossings != r.eta_plus + r.eta_minus) {
    throw InvariantViolation(r.name, "eta_plus + eta_minus must equal crossings");
  }
  if (r.aprime.is_zero()) throw InvariantViolation(r.name, "aprime must be nonzero");
  return r;
}

}  // namespace

Poly parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

Poly KnotRecord::full_apolynomial() const { return (Poly::L() - Poly(1)) * aprime; }

void KnotDatabase::add(KnotRecord r) {
  if (index_.contains(r.name)) throw DuplicateName("duplicate record '" + r.name + "'");
  index_.emplace(r.name, records_.size());
  records_.push_back(std::move(r));
}

const KnotRecord* KnotDatabase::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &records_[it->second];
}

KnotDatabase parse_db(std::string_view text) {
  KnotDatabase db;
  std::map<std::string, Field> fields;
  std::size_t block_offset = 0;
  auto flush = [&] {
    if (fields.empty()) return;
    db.add(build_record(fields, block_offset));
    fields.clear();
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    const bool blank = trim(line).empty();
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (blank) {
      flush();
    } else if (!trim(line).empty()) {
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) throw SyntaxError("expected 'key = value'", pos);
      const std::string key(trim(line.substr(0, eq)));
      if (!known_key(key)) throw SyntaxError("unknown key '" + key + "'", pos);
      if (fields.empty()) block_offset = pos;
      std::string_view raw = line.substr(eq + 1);
      const std::size_t lead = std::min(raw.find_first_not_of(" \t"), raw.size());
      const Field f{trim(raw), pos + eq + 1 + lead};
      if (!fields.emplace(key, f).second) throw SyntaxError("repeated key '" + key + "'", pos);
    }
    pos = eol + 1;
  }
  flush();

  std::map<std::pair<int, int>, std::vector<std::string>> by_notation;
  for (const auto& r : db.records()) by_notation[{r.p, r.m}].push_back(r.name);
  KnotDatabase flagged;
  for (KnotRecord r : db.records()) {
    r.suspect_duplicate_notation = by_notation[{r.p, r.m}].size() > 1;
    flagged.add(std::move(r));
  }
  return flagged;
}

KnotDatabase load_db(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_db(buf.str());
}

std::vector<RecordCheck> validate_record(const KnotRecord& r) {
  std::vector<RecordCheck> out;
  const int want = (r.p - 1) / 2;
  const int got = r.aprime.degree_L();
  out.push_back({"l_degree", got == want,
                 "deg_L(A') = " + std::to_string(got) + ", (p - 1)/2 = " + std::to_string(want)});

  int odd_power = 0;
  bool even = true;
  for (const Term& term : r.aprime.terms()) {
    if (term.key.m() % 2 != 0) {
      even = false;
      odd_power = term.key.m();
      break;
    }
  }
  out.push_back({"even_m_powers", even, even ? "all M exponents even" : "M^" + std::to_string(odd_power) + " present"});

  if (r.crossings) {
    const bool ok = *r.crossings == r.eta_plus + r.eta_minus;
    out.push_back({"crossing_count", ok,
                   std::to_string(r.eta_plus) + " + " + std::to_string(r.eta_minus) + " vs " +
                       std::to_string(*r.crossings)});
  }
  return out;
}

}  // namespace ajcable
