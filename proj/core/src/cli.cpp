#include "lefschetz/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "lefschetz/arith.hpp"
#include "lefschetz/lemma_suite.hpp"

namespace lefschetz {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::optional<std::int64_t> to_int(const std::string& s) {
  std::int64_t v = 0;
  const char* b = s.data();
  const char* e = b + s.size();
  if (b != e && *b == '+') ++b;
  const auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e) return std::nullopt;
  return v;
}

struct Entry {
  int line;
  std::string value;
};

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {"space", "p", "q_degree", "curve", "alpha", "beta", "point_P",
                                             "sign", "k", "sheaf_rank", "sheaf_n", "u", "m_range"};
  return keys;
}

class Reader {
 public:
  explicit Reader(std::map<std::string, Entry> entries) : e_(std::move(entries)) {}

  bool has(const std::string& key) const { return e_.count(key) != 0; }
  int line(const std::string& key) const { return has(key) ? e_.at(key).line : 0; }

  const std::string& require(const std::string& key, const std::string& space) const {
    if (!has(key)) throw ParseError(0, key, "required for space " + space);
    return e_.at(key).value;
  }

  std::int64_t integer(const std::string& key, std::int64_t fallback) const {
    if (!has(key)) return fallback;
    const auto v = to_int(e_.at(key).value);
    if (!v) throw ParseError(line(key), key, "expected an integer, got '" + e_.at(key).value + "'");
    return *v;
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const { throw ParseError(line(key), key, what); }

 private:
  std::map<std::string, Entry> e_;
};

FieldElement field_value(const FiniteField& f, const std::string& text, const Reader& r, const std::string& key) {
  const auto v = to_int(text);
  if (!v) r.fail(key, "expected a field element, got '" + text + "'");
  if (*v < 0) {
    if (f.degree() != 1) r.fail(key, "negative values are only allowed over a prime field");
    return f.from_int(*v);
  }
  if (static_cast<std::uint64_t>(*v) >= f.size()) r.fail(key, "element index " + text + " out of range for " + f.name());
  return f.element(static_cast<std::uint64_t>(*v));
}

Space parse_space(const Reader& r) {
  const std::string s = r.require("space", "(any)");
  if (s == "affine_line") return Space::AffineLine;
  if (s == "open_elliptic") return Space::OpenElliptic;
  if (s == "proper_elliptic") return Space::ProperElliptic;
  r.fail("space", "unknown space '" + s + "'");
}

}  // namespace

std::vector<int> parse_m_range(const std::string& text) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const auto a = to_int(trim(text.substr(0, dots)));
    const auto b = to_int(trim(text.substr(dots + 2)));
    if (!a || !b || *a > *b) throw DomainError("bad range '" + text + "'");
    for (auto m = *a; m <= *b; ++m) out.push_back(static_cast<int>(m));
  } else {
    for (const auto& part : split(text, ',')) {
      const auto v = to_int(part);
      if (!v) throw DomainError("bad range '" + text + "'");
      out.push_back(static_cast<int>(*v));
    }
  }
  if (out.empty()) throw DomainError("empty range");
  for (int m : out) {
    if (m < 1) throw DomainError("twists start at 1");
  }
  return out;
}

Scenario parse_scenario(const std::string& text, const std::string& name) {
  std::map<std::string, Entry> entries;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "", "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    if (!known_keys().count(key)) throw ParseError(lineno, key, "unknown key");
    if (entries.count(key)) throw ParseError(lineno, key, "duplicate key");
    entries[key] = {lineno, trim(line.substr(eq + 1))};
  }
  const Reader r(std::move(entries));
  Scenario s;
  s.name = name;
  s.space = parse_space(r);
  const std::string space_name = to_string(s.space);

  const std::int64_t p = r.integer("p", 0);
  if (!r.has("p")) r.require("p", space_name);
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)) || p > 65521) r.fail("p", "p must be a prime below 2^16");
  const std::int64_t d = r.integer("q_degree", 1);
  if (d < 1 || d > kMaxDegree) r.fail("q_degree", "degree out of range");
  FiniteField f;
  try {
    f = build_field(static_cast<std::uint32_t>(p), static_cast<int>(d));
  } catch (const Error& e) {
    r.fail("q_degree", e.what());
  }

  if (s.space == Space::AffineLine) {
    for (const char* k : {"curve", "point_P", "sign", "k"}) {
      if (r.has(k)) r.fail(k, "not used by the affine line");
    }
    const FieldElement alpha = field_value(f, r.require("alpha", space_name), r, "alpha");
    const FieldElement beta = field_value(f, r.require("beta", space_name), r, "beta");
    if (alpha.is_zero()) r.fail("alpha", "alpha must be nonzero");
    s.corr = Correspondence::affine(alpha, beta);
  } else {
    for (const char* k : {"alpha", "beta"}) {
      if (r.has(k)) r.fail(k, "not used by elliptic spaces");
    }
    const auto coeffs = words(r.require("curve", space_name));
    if (coeffs.size() != 3) r.fail("curve", "expected three coefficients c2 c1 c0");
    EllipticCurve e;
    try {
      e = EllipticCurve(f, field_value(f, coeffs[2], r, "curve"), field_value(f, coeffs[1], r, "curve"),
                        field_value(f, coeffs[0], r, "curve"));
    } catch (const ParseError&) {
      throw;
    } catch (const DomainError& ex) {
      r.fail("curve", ex.what());
    }
    EllipticEndomorphism g;
    const auto pt = words(r.require("point_P", space_name));
    if (pt.size() == 1 && pt[0] == "O") {
      g.translation = CurvePoint::at_infinity();
    } else if (pt.size() == 2) {
      g.translation = CurvePoint::affine(field_value(f, pt[0], r, "point_P"), field_value(f, pt[1], r, "point_P"));
      if (!e.contains(g.translation)) r.fail("point_P", "point is not on the curve");
    } else {
      r.fail("point_P", "expected 'O' or 'x y'");
    }
    const std::int64_t sign = r.integer("sign", 1);
    if (sign != 1 && sign != -1) r.fail("sign", "sign must be 1 or -1");
    const std::int64_t k = r.integer("k", 1);
    if (k < 1 || k > 1000000) r.fail("k", "k must be a positive integer");
    g.sign = static_cast<int>(sign);
    g.k = static_cast<int>(k);
    s.corr = Correspondence::elliptic(e, g);
  }

  const std::int64_t rank = r.integer("sheaf_rank", 1);
  if (rank < 1 || rank > 64) r.fail("sheaf_rank", "rank out of range");
  const std::int64_t n = r.integer("sheaf_n", 1);
  if (n < 1 || !checked_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(n), std::uint64_t{1} << 62)) {
    r.fail("sheaf_n", "p^n out of range");
  }
  if (s.space != Space::AffineLine && n != 1) r.fail("sheaf_n", "curve scenarios use n = 1");
  s.sheaf = SheafDatum::identity(p, static_cast<int>(n), static_cast<int>(rank));
  if (r.has("u")) {
    const auto rows = split(r.require("u", space_name), ';');
    if (rows.size() != static_cast<std::size_t>(rank)) r.fail("u", "expected " + std::to_string(rank) + " rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto entries_i = words(rows[i]);
      if (entries_i.size() != static_cast<std::size_t>(rank)) r.fail("u", "row " + std::to_string(i + 1) + " has the wrong length");
      for (std::size_t j = 0; j < entries_i.size(); ++j) {
        const auto v = to_int(entries_i[j]);
        if (!v) r.fail("u", "expected an integer, got '" + entries_i[j] + "'");
        s.sheaf.u.set(i, j, *v);
      }
    }
  }

  try {
    s.m_range = parse_m_range(r.require("m_range", space_name));
  } catch (const DomainError& ex) {
    r.fail("m_range", ex.what());
  }
  s.validate();
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), std::filesystem::path(path).stem().string());
}

std::optional<Command> parse_command(const std::string& name) {
  static const std::map<std::string, Command> table = {
      {"verify", Command::Verify},       {"woods-hole", Command::WoodsHole}, {"fix-count", Command::FixCount},
      {"hasse-witt", Command::HasseWitt}, {"lemma5", Command::PropertySuite},       {"zp-demo", Command::ZpDemo}};
  const auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

namespace {

std::string summary(std::size_t passed, std::size_t total) {
  return (passed == total ? "OK " : "FAIL ") + std::to_string(passed) + "/" + std::to_string(total);
}

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  const auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << " | ";
      os << std::setw(static_cast<int>(width[c])) << row[c];
    }
    os << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return os.str();
}

struct Section {
  std::string text;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string diagnostics;
};

Section verify_section(const Scenario& s, const RunOptions& o) {
  VerifyOptions vo;
  vo.budget = o.budget;
  vo.rhs_u_scale = o.rhs_u_scale;
  const VerificationReport rep = verify(s, vo);
  Section out;
  out.text = format_report(rep);
  out.passed = rep.passed();
  out.total = rep.rows.size();
  if (!rep.all_ok()) out.diagnostics = rep.diagnostics();
  return out;
}

const EllipticMap& elliptic_or_throw(const Scenario& s) {
  if (s.corr.is_affine()) throw DomainError("command needs an elliptic scenario");
  return s.corr.elliptic_map();
}

Section woods_hole_section(const Scenario& s) {
  const EllipticMap& em = elliptic_or_throw(s);
  std::vector<std::vector<std::string>> rows;
  Section out;
  for (int m : s.m_range) {
    const WoodsHoleResult w = woods_hole_verify(em.curve, em.g, m);
    rows.push_back({std::to_string(m), std::to_string(w.coherent), std::to_string(w.fix_mod_p), std::to_string(w.fix_count),
                    w.ok ? "OK" : "FAIL"});
    out.passed += w.ok ? 1 : 0;
    ++out.total;
  }
  out.text = "scenario " + s.name + " (mod " + std::to_string(em.curve.p()) + ")\n" +
             table({"m", "1 - tr", "fix mod p", "fix_count", "verdict"}, rows) + summary(out.passed, out.total) + "\n";
  return out;
}

Section fix_count_section(const Scenario& s, const RunOptions& o) {
  std::vector<std::vector<std::string>> rows;
  Section out;
  for (int m : s.m_range) {
    const std::int64_t closed = fix_count(s.corr, m);
    const FixedPointSet set = brute_force_fixed_points(s.corr, m, o.budget);
    const bool ok = set.complete && set.count == closed;
    rows.push_back({std::to_string(m), std::to_string(closed), set.complete ? std::to_string(set.count) : "-", set.method,
                    ok ? "OK" : "FAIL"});
    out.passed += ok ? 1 : 0;
    ++out.total;
  }
  out.text = "scenario " + s.name + "\n" + table({"m", "fix_count", "oracle", "method", "verdict"}, rows) +
             summary(out.passed, out.total) + "\n";
  return out;
}

Section hasse_witt_section(const Scenario& s) {
  const EllipticMap& em = elliptic_or_throw(s);
  const auto p = static_cast<std::int64_t>(em.curve.p());
  const FieldElement a = hasse_invariant(em.curve);
  const std::int64_t t = trace_t(em.curve);
  // The norm of a down to F_p is t mod p.
  const FieldElement na = rel_norm(a, 1);
  const std::int64_t an = static_cast<std::int64_t>(na.index());
  const std::int64_t tp = mod_floor(t, p);
  Section out;
  out.total = 1;
  const bool ok = an == tp;
  out.passed = ok ? 1 : 0;
  out.text = "scenario " + s.name + "\n" +
             table({"curve", "a", "t", "t mod p", "verdict"},
                   {{em.curve.to_string(), a.to_string(), std::to_string(t), std::to_string(tp), ok ? "OK" : "FAIL"}}) +
             summary(out.passed, out.total) + "\n";
  return out;
}

int run_scenarios(Command command, const std::vector<std::string>& paths, const RunOptions& o, std::ostream& out,
                  std::ostream& err) {
  if (paths.empty()) {
    err << "no scenario files given\n";
    return 2;
  }
  std::vector<std::future<Section>> jobs;
  for (const auto& path : paths) {
    jobs.push_back(std::async(std::launch::async, [&, path] {
      Scenario s = load_scenario(path);
      if (o.m_override) s.m_range = *o.m_override;
      switch (command) {
        case Command::Verify: return verify_section(s, o);
        case Command::WoodsHole: return woods_hole_section(s);
        case Command::FixCount: return fix_count_section(s, o);
        case Command::HasseWitt: return hasse_witt_section(s);
        default: throw DomainError("not a scenario command");
      }
    }));
  }
  std::size_t passed = 0;
  std::size_t total = 0;
  bool broken = false;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    try {
      const Section sec = jobs[i].get();
      out << sec.text;
      if (!sec.diagnostics.empty()) err << sec.diagnostics << '\n';
      passed += sec.passed;
      total += sec.total;
    } catch (const Error& e) {
      err << paths[i] << ": " << e.what() << '\n';
      out << "scenario " << paths[i] << "\nERROR\n";
      broken = true;
    }
  }
  if (paths.size() > 1) out << "total " << summary(passed, total) << '\n';
  if (broken) return 2;
  return passed == total ? 0 : 1;
}

int run_property_suite(const RunOptions& o, std::ostream& out, std::ostream& err) {
  const auto results = run_lemma_suite(default_lemma_configs(), o.per_config, o.seed, 3, o.threads);
  std::vector<std::vector<std::string>> rows;
  std::size_t passed = 0;
  for (const auto& r : results) {
    const bool ok = r.failures == 0;
    passed += ok ? 1 : 0;
    rows.push_back({std::to_string(r.config.p), std::to_string(r.config.n), std::to_string(r.config.D),
                    std::to_string(r.modules), std::to_string(r.structured), std::to_string(r.replaced),
                    std::to_string(r.surjective_mod_p), std::to_string(r.surjectivity_skipped),
                    std::to_string(r.max_extension), std::to_string(r.max_threshold), std::to_string(r.failures),
                    ok ? "OK" : "FAIL"});
    for (const auto& d : r.failure_details) err << d << '\n';
  }
  out << "seed " << o.seed << ", " << o.per_config << " modules per configuration\n";
  out << table({"p", "n", "D", "modules", "structured", "replaced", "surj mod p", "surj skipped", "max ext", "max N",
                "failures", "verdict"},
               rows);
  out << summary(passed, results.size()) << '\n';
  return passed == results.size() ? 0 : 1;
}

int run_zp_demo(const RunOptions& o, std::ostream& out) {
  const std::vector<std::uint64_t> qs = o.q_values.empty() ? std::vector<std::uint64_t>{2, 9} : o.q_values;
  const std::vector<int> ms = o.m_override ? *o.m_override : std::vector<int>{1, 2, 3};
  std::size_t passed = 0;
  std::size_t total = 0;
  for (std::uint64_t q : qs) {
    const auto rows = zp_counterexample(q, ms);
    out << format_zp_table(q, rows);
    for (const auto& r : rows) {
      bool ok = !r.equal_in_zp;
      for (const auto& [n, eq] : r.congruences) ok = ok && (eq == (n <= r.valuation));
      passed += ok ? 1 : 0;
      ++total;
    }
  }
  out << summary(passed, total) << '\n';
  return passed == total ? 0 : 1;
}

}  // namespace

std::string format_report(const VerificationReport& report) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : report.rows) {
    rows.push_back({std::to_string(r.m), std::to_string(r.lhs), std::to_string(r.rhs), std::to_string(r.fix_count),
                    r.ok() ? "OK" : "FAIL"});
  }
  return "scenario " + report.scenario + " (mod " + std::to_string(report.modulus) + ")\n" +
         table({"m", "lhs", "rhs", "fix_count", "verdict"}, rows) + summary(report.passed(), report.rows.size()) + "\n";
}

std::string format_zp_table(std::uint64_t q, const std::vector<ZpRow>& rows) {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : rows) {
    std::string cong;
    for (const auto& [n, eq] : r.congruences) {
      if (!cong.empty()) cong += ' ';
      cong += std::to_string(n) + (eq ? ":=" : ":!=");
    }
    out.push_back({std::to_string(r.m), std::to_string(r.lhs), std::to_string(r.rhs), std::to_string(r.valuation), cong,
                   r.equal_in_zp ? "equal" : "differ"});
  }
  return "q = " + std::to_string(q) + "\n" + table({"m", "lhs", "rhs", "v_p(rhs)", "mod p^n", "in Z_p"}, out);
}

int run(Command command, const std::vector<std::string>& paths, const RunOptions& options, std::ostream& out,
        std::ostream& err) {
  try {
    switch (command) {
      case Command::PropertySuite: return run_property_suite(options, out, err);
      case Command::ZpDemo: return run_zp_demo(options, out);
      default: return run_scenarios(command, paths, options, out, err);
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 2;
  }
}

}  // namespace lefschetz
