#include "ajcable/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "ajcable/annihilator.hpp"
#include "ajcable/cabling.hpp"
#include "ajcable/errors.hpp"
#include "ajcable/layout.hpp"
#include "ajcable/oretorus.hpp"
#include "ajcable/skein.hpp"

namespace ajcable::cli {

using Json = nlohmann::ordered_json;

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::attested:
      return "attested";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "?";
}

bool KnotReport::verified() const {
  for (const Check& c : checks) {
    if (c.status != Status::pass && c.status != Status::attested) return false;
  }
  return true;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

KnotReport verify_record(const KnotRecord& r, int cable_r) {
  KnotReport rep;
  rep.name = r.name;
  rep.p = r.p;
  rep.m = r.m;
  rep.eta_plus = r.eta_plus;
  rep.eta_minus = r.eta_minus;
  rep.suspect_duplicate_notation = r.suspect_duplicate_notation;

  for (const RecordCheck& c : validate_record(r)) {
    rep.checks.push_back({"record_" + c.name, c.pass ? Status::pass : Status::fail, c.detail});
  }

  ConditionIIReport c2;
  try {
    c2 = condition_ii_checks(r.aprime);
  } catch (const InternalInvariant&) {
    throw;
  } catch (const Error& e) {
    c2.detail = e.what();
  }
  rep.checks.push_back({"condition_ii_asymmetry", c2.symmetry ? Status::pass : Status::fail,
                        c2.symmetry ? "A'(M, L) != A'(M, -L)" : "A'(M, L) = A'(M, -L)"});
  const Status over_q = c2.q_irreducibility == Irreducibility::certified ? Status::pass
                        : c2.q_irreducibility == Irreducibility::refuted ? Status::fail
                                                                         : Status::inconclusive;
  rep.checks.push_back({"condition_ii_irreducible_Q", over_q, c2.detail});
  if (over_q == Status::fail) {
    rep.checks.push_back({"condition_ii_irreducible_C", Status::fail, "reducible over Q"});
  } else if (r.attest_irreducible_C) {
    rep.checks.push_back({"condition_ii_irreducible_C", Status::attested, "attested by the record"});
  } else {
    rep.checks.push_back({"condition_ii_irreducible_C", Status::inconclusive,
                          "no attestation; absolute irreducibility is not decided"});
  }

  try {
    const Poly detN = detN_from_apoly(r.full_apolynomial());
    if (detN.is_zero()) {
      rep.checks.push_back({"condition_iii_detN", Status::fail, "det N(-1, M) = 0"});
    } else {
      rep.detN_degree = detN.max_degree_M();
      rep.checks.push_back({"condition_iii_detN", Status::pass,
                            "det N(-1, M) != 0, " + std::to_string(detN.size()) + " terms, M^" +
                                std::to_string(detN.min_degree_M()) + "..M^" +
                                std::to_string(detN.max_degree_M())});
    }
  } catch (const InternalInvariant&) {
    throw;
  } catch (const Error& e) {
    rep.checks.push_back({"condition_iii_detN", Status::fail, e.what()});
  }

  const RWindow window = admissible_r(r.eta_plus, r.eta_minus);
  rep.admissible_r = window.describe();
  rep.admissible_bounds = window.bounds();
  if (cable_r != 0) rep.cable_apolynomial = render(cable_apolynomial(r.full_apolynomial(), cable_r));
  return rep;
}

namespace {

constexpr const char* kVerified = "Theorem hypotheses verified";
constexpr const char* kNotVerified = "Theorem hypotheses not verified";

Json to_json(const KnotReport& rep, const KnotRecord& rec, int cable_r) {
  Json k;
  k["name"] = rep.name;
  k["parameters"] = {{"p", rep.p},
                     {"m", rep.m},
                     {"eta_plus", rep.eta_plus},
                     {"eta_minus", rep.eta_minus},
                     {"attest_irreducible_C", rec.attest_irreducible_C},
                     {"attest_AJ", rec.attest_AJ},
                     {"suspect_duplicate_notation", rep.suspect_duplicate_notation}};
  Json checks = Json::array();
  for (const Check& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  k["checks"] = std::move(checks);
  k["detN_L_free_degree"] = rep.detN_degree >= 0 ? Json(rep.detN_degree) : Json(nullptr);
  k["admissible_r"] = {{"condition", rep.admissible_r}, {"bounds", rep.admissible_bounds}};
  if (cable_r != 0) k["cable_apolynomial"] = {{"r", cable_r}, {"polynomial", rep.cable_apolynomial}};
  k["verdict"] = rep.verified() ? kVerified : kNotVerified;
  return k;
}

void print_summary(std::ostream& out, const KnotReport& rep) {
  out << rep.name << " b(" << rep.p << ", " << rep.m << "): " << (rep.verified() ? kVerified : kNotVerified)
      << "\n";
  for (const Check& c : rep.checks) {
    out << "  " << std::left << std::setw(13) << to_string(c.status) << std::setw(28) << c.name << c.detail
        << "\n";
  }
  out << "  admissible r: " << rep.admissible_r << " (" << rep.admissible_bounds << ")\n";
  if (rep.suspect_duplicate_notation) {
    out << "  note: two-bridge notation b(" << rep.p << ", " << rep.m << ") is shared with another record\n";
  }
  if (!rep.cable_apolynomial.empty()) out << "  cable A-polynomial: " << rep.cable_apolynomial << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Positive integer from AJCABLE_WORKERS, default 1. Throws on garbage.
unsigned worker_count() {
  const char* raw = std::getenv("AJCABLE_WORKERS");
  if (raw == nullptr || *raw == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) {
    throw std::invalid_argument(std::string("AJCABLE_WORKERS must be a positive integer, got '") + raw + "'");
  }
  return static_cast<unsigned>(v);
}

/// Runs verify_record over the selected records with up to `workers`
/// threads; results keep input order.
std::vector<KnotReport> verify_all(const std::vector<const KnotRecord*>& records, int cable_r,
                                   unsigned workers) {
  std::vector<std::optional<KnotReport>> slots(records.size());
  std::vector<std::exception_ptr> errors(records.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      try {
        slots[i] = verify_record(*records[i], cable_r);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(records.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < n; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::vector<KnotReport> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

void check_r(int r) {
  if (r == 0) throw ZeroR("r must be nonzero");
  if (r % 2 == 0) throw EvenR("r must be odd, got " + std::to_string(r));
}

const KnotRecord& require_knot(const KnotDatabase& db, const std::string& name) {
  const KnotRecord* rec = db.find(name);
  if (rec == nullptr) throw std::invalid_argument("no record named '" + name + "'");
  return *rec;
}

/// Writes to `path`, or to `out` for "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

int cmd_verify(const std::string& db_path, const std::string& knot, const std::string& emit_path, int cable_r,
               std::ostream& out) {
  if (cable_r != 0) check_r(cable_r);
  const unsigned workers = worker_count();
  const std::string bytes = read_file(db_path);
  const KnotDatabase db = parse_db(bytes);
  std::vector<const KnotRecord*> selected;
  if (!knot.empty()) {
    selected.push_back(&require_knot(db, knot));
  } else {
    for (const KnotRecord& r : db.records()) selected.push_back(&r);
  }
  const std::vector<KnotReport> reports = verify_all(selected, cable_r, workers);

  std::size_t verified = 0;
  for (const KnotReport& rep : reports) verified += rep.verified() ? 1 : 0;

  Json doc;
  doc["tool"] = "ajcable";
  doc["version"] = kToolVersion;
  doc["fixtures"] = Json::array({{{"path", db_path}, {"fnv1a64", fnv1a_hex(bytes)}}});
  Json knots = Json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) knots.push_back(to_json(reports[i], *selected[i], cable_r));
  doc["knots"] = std::move(knots);
  doc["summary"] = {{"knots", reports.size()}, {"verified", verified}};

  if (emit_path == "-") {
    out << doc.dump(2) << "\n";
  } else {
    for (const KnotReport& rep : reports) print_summary(out, rep);
    out << "verified " << verified << " of " << reports.size() << " knot(s)\n";
    if (!emit_path.empty()) emit(emit_path, doc.dump(2) + "\n", out);
  }
  return verified == reports.size() ? kOk : kCheckFailed;
}

int cmd_cable(const std::string& db_path, const std::string& knot, int r, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  check_r(r);
  const KnotDatabase db = load_db(db_path);
  const KnotRecord& rec = require_knot(db, knot);
  if (!rec.attest_irreducible_C) {
    err << "note: irreducibility of A' over C is not attested; formula applied outside stated hypotheses\n";
  }
  if (!admissible_r(rec.eta_plus, rec.eta_minus).test(r)) {
    err << "note: r = " << r << " lies outside the admissible window; formula applied outside stated hypotheses\n";
  }
  emit(out_path, render(cable_apolynomial(rec.full_apolynomial(), r)) + "\n", out);
  return kOk;
}

int cmd_annihilator(const std::string& db_path, const std::string& knot, bool general_t, std::ostream& out) {
  const KnotDatabase db = load_db(db_path);
  const KnotRecord& rec = require_knot(db, knot);
  const CoeffFamily family = CoeffFamily::from_poly(rec.full_apolynomial());
  const TMode mode = general_t ? TMode::general : TMode::minus_one;
  const AnnihilatorResult res = solve_odd_annihilator(family, mode);
  out << rec.name << ": d = " << res.d << ", " << (general_t ? "symbolic t" : "t = -1") << "\n";
  out << "det N(-1, M) = " << render(res.detN_minus1) << "\n";
  bool ok = true;
  for (const IdentityCheck& c : res.identities) {
    out << "  " << (c.pass ? "pass" : "fail") << "  " << c.name << (c.detail.empty() ? "" : "  " + c.detail)
        << "\n";
    ok = ok && c.pass;
  }
  try {
    const CofactorDiagnostics diag = check_cofactor_identities(family, res);
    for (const IdentityCheck& c : diag.checks) {
      out << "  " << (c.pass ? "pass" : "fail") << "  " << c.name << "  " << c.detail << "\n";
    }
  } catch (const IdentityFailure& e) {
    out << "  fail  " << e.identity() << "  " << e.what() << "\n";
    ok = false;
  }
  if (res.detN_vanishes_at_minus1) {
    out << "  note: det N(-1, M) vanishes\n";
    ok = false;
  }
  out << "beta = " << render(res.beta) << "\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_range(int eta_plus, int eta_minus, std::optional<long long> test, std::ostream& out) {
  if (eta_plus < 0 || eta_minus < 0) throw std::invalid_argument("crossing counts must be >= 0");
  const RWindow window = admissible_r(eta_plus, eta_minus);
  if (test) {
    out << (window.test(*test) ? "true" : "false") << "\n";
  } else {
    out << window.describe() << "\n" << window.bounds() << "\n";
  }
  return kOk;
}

int cmd_selftest(std::ostream& out) {
  bool ok = true;
  for (const SuiteResult& s : run_selftest()) {
    out << (s.pass ? "pass" : "FAIL") << "  " << s.name << "  " << s.detail << "\n";
    ok = ok && s.pass;
  }
  return ok ? kOk : kCheckFailed;
}

Poly random_m_poly(std::mt19937_64& rng, int max_terms, int max_m_degree) {
  std::uniform_int_distribution<int> coeff(-3, 3), deg(0, max_m_degree), count(1, max_terms);
  Poly p;
  const int n = count(rng);
  for (int k = 0; k < n; ++k) p += Poly::monomial(coeff(rng), 0, deg(rng), 0);
  return p;
}

SuiteResult resultant_suite() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> ldeg(1, 6);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int d = ldeg(rng);
    std::vector<Poly> coeffs;
    for (int i = 0; i <= d; ++i) coeffs.push_back(random_m_poly(rng, 3, 3));
    while (coeffs.back().is_zero()) coeffs.back() = random_m_poly(rng, 3, 3);
    const Poly P = from_l_coefficients(coeffs);
    const Poly closed = resultant_quadratic(P);
    const Poly sylvester = sylvester_resultant(coeffs, {-Poly::L(), Poly(0), Poly(1)});
    if (!unit_equal(closed, sylvester)) {
      return {"resultant_oracle", false, "mismatch for P = " + render(P)};
    }
    ++checked;
  }
  return {"resultant_oracle", true, std::to_string(checked) + " random polynomials of L-degree <= 6"};
}

SuiteResult determinant_suite() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(1, 6);
  std::bernoulli_distribution sparse(0.3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(size(rng));
    PolyMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (!sparse(rng)) m(r, c) = random_m_poly(rng, 2, 2) * Poly::monomial(1, trial % 3, 0, 0);
      }
    }
    if (det_bareiss(m) != det_cofactor(m)) {
      return {"determinant_cross_check", false, "Bareiss and cofactor disagree at size " + std::to_string(n)};
    }
  }
  return {"determinant_cross_check", true, "40 random polynomial matrices up to 6 x 6"};
}

SuiteResult layout_suite() {
  const auto mismatches = compare_layouts(reference_d3_layouts(), built_d3_layouts());
  if (mismatches.empty()) return {"d3_layout", true, "D, N, A_1..A_3, B_1..B_3 match"};
  std::string detail;
  for (const LayoutMismatch& m : mismatches) {
    if (!detail.empty()) detail += "; ";
    detail += m.matrix + "[" + std::to_string(m.row + 1) + "," + std::to_string(m.col + 1) + "] reference " +
              m.expected + ", built " + m.actual;
  }
  return {"d3_layout", false, detail};
}

SuiteResult figure_eight_suite() {
  const SequenceOracle jones = figure_eight_sequence();
  const auto op = find_minimal_recurrence(jones, 3, 32);
  if (!op) return {"figure_eight_end_to_end", false, "no recurrence found with d <= 3"};
  const Poly L = Poly::L(), M2 = Poly::monomial(1, 0, 2, 0), M4 = Poly::monomial(1, 0, 4, 0);
  const Poly aprime = M4 * L * L +
                      (-Poly::monomial(1, 0, 8, 0) + Poly::monomial(1, 0, 6, 0) + M4 * Poly(2) + M2 - Poly(1)) * L +
                      M4;
  if (!m_essentially_equal(epsilon(*op), (L - Poly(1)) * aprime)) {
    return {"figure_eight_end_to_end", false, "t = -1 image is not (L - 1) A'"};
  }
  const AnnihilatorResult res = solve_odd_annihilator(CoeffFamily::from_poly(op->to_poly()));
  if (!annihilates(res.beta, jones.odd_subsequence(), 1, 4)) {
    return {"figure_eight_end_to_end", false, "beta does not annihilate J(2n + 1)"};
  }
  return {"figure_eight_end_to_end", true,
          "recurrence of order " + std::to_string(op->degree()) + ", beta of order " +
              std::to_string(res.beta.degree()) + " annihilates J(2n + 1), n = 1..4"};
}

}  // namespace

std::vector<SuiteResult> run_selftest() {
  return {resultant_suite(), determinant_suite(), layout_suite(), figure_eight_suite()};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks the hypotheses of the (r, 2)-cable AJ criterion for two-bridge knots", "ajcable"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string db_path, knot, emit_path, out_path = "-";
  int r = 0, cable_r = 0, eta_plus = 0, eta_minus = 0;
  long long test_r = 0;
  bool general_t = false;

  auto* verify = app.add_subcommand("verify", "Check theorem hypotheses for each record");
  verify->add_option("--db", db_path, "Knot database file")->required();
  verify->add_option("--knot", knot, "Restrict to one record");
  verify->add_option("--emit", emit_path, "Write the JSON report to PATH, or '-' for standard output");
  verify->add_option("--cable-r", cable_r, "Also render the A-polynomial of the (r, 2)-cable");

  auto* cable = app.add_subcommand("cable-apoly", "Render the A-polynomial of the (r, 2)-cable");
  cable->add_option("--db", db_path, "Knot database file")->required();
  cable->add_option("--knot", knot, "Record name")->required();
  cable->add_option("-r", r, "Odd cabling parameter")->required();
  cable->add_option("--out", out_path, "Output path, '-' for standard output");

  auto* annih = app.add_subcommand("annihilator", "Solve for the odd-subsequence annihilator");
  annih->add_option("--db", db_path, "Knot database file")->required();
  annih->add_option("--knot", knot, "Record name")->required();
  annih->add_flag("--general-t", general_t, "Keep t symbolic instead of t = -1");

  auto* range = app.add_subcommand("range", "Admissible window for r");
  range->add_option("--eta-plus", eta_plus, "Positive crossings")->required();
  range->add_option("--eta-minus", eta_minus, "Negative crossings")->required();
  auto* test_opt = range->add_option("--test", test_r, "Test one value of r");

  auto* selftest = app.add_subcommand("selftest", "Run the bundled property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return cmd_verify(db_path, knot, emit_path, cable_r, out);
    if (*cable) return cmd_cable(db_path, knot, r, out_path, out, err);
    if (*annih) return cmd_annihilator(db_path, knot, general_t, out);
    if (*range) {
      return cmd_range(eta_plus, eta_minus, *test_opt ? std::optional<long long>(test_r) : std::nullopt, out);
    }
    if (*selftest) return cmd_selftest(out);
  } catch (const SingularSystem& e) {
    err << "singular system: " << e.what() << "\n";
    return kInternal;
  } catch (const InternalInvariant& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInternal;
  } catch (const IdentityFailure& e) {
    err << "identity failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ajcable::cli
