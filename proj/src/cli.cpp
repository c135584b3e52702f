#include "hesstop/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "hesstop/errors.hpp"
#include "hesstop/parallel.hpp"
#include "hesstop/serialize.hpp"

namespace hesstop::cli {

namespace {

constexpr const char* kGrammar =
    "polynomial grammar:\n"
    "  poly := term (('+'|'-') term)*\n"
    "  term := [coef] ['*'] [x-part] ['*'] [y-part]\n"
    "  coef := integer | integer '/' integer ; x-part := 'x' ['^' integer] ; likewise y\n"
    "families: P:m (Re (x+iy)^m), Q:k ((x^2+y^2)^k), f:m,k (P^m Q^{2k})\n";

// Input problems (bad polynomial text, bad family shortcut) are usage errors.
class UsageError : public Error {
 public:
  using Error::Error;
};

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad integer in " + what + ": '" + s + "'");
  }
}

struct PolyInputs {
  std::vector<std::string> polys;
  std::vector<std::string> families;

  std::vector<HomoPoly> resolve() const {
    std::vector<HomoPoly> out;
    for (const auto& t : polys) {
      try {
        out.push_back(parse_poly(t));
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
    }
    for (const auto& f : families) out.push_back(parse_family(f));
    return out;
  }

  HomoPoly single() const {
    auto v = resolve();
    if (v.size() != 1) throw UsageError("expected exactly one of --poly / --family");
    return v.front();
  }

  std::pair<HomoPoly, HomoPoly> pair() const {
    auto v = resolve();
    if (v.size() != 2) throw UsageError("expected two polynomials P and Q (--poly/--family given twice)");
    return {v[0], v[1]};
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << content;
}

Branch parse_branch(const std::string& s) {
  if (s == "plus") return Branch::Plus;
  if (s == "minus") return Branch::Minus;
  throw UsageError("branch must be 'plus' or 'minus'");
}

void print_cert_text(std::ostream& out, const std::string& label, const SignCertificate& c) {
  out << label << ": " << to_string(c.verdict);
  if (c.semidefinite != Semidefinite::None) out << " (" << to_string(c.semidefinite) << ")";
  out << " [" << c.method << "]";
  if (c.witness) out << " witness (" << c.witness->x << ", " << c.witness->y << ") -> " << c.witness->value;
  out << '\n';
}

int cmd_classify(const Config& cfg, const PolyInputs& in, std::ostream& out) {
  const HomoPoly f = in.single();
  if (f.degree() < 2) throw UsageError("classify needs degree >= 2");
  const Classification hyp = is_hyperbolic(f);
  const Classification ell = is_elliptic(f);
  const std::string label = hyp.holds ? "hyperbolic" : ell.holds ? "elliptic" : "neither";
  const HomoPoly disc = discriminant(second_fundamental_form(f));
  if (cfg.format == OutputFormat::Json) {
    out << Json{{"poly", f.to_string()}, {"classification", label}, {"discriminant", disc.to_string()},
                {"certificate", to_json(hyp.certificate)}}
               .dump(2)
        << '\n';
  } else {
    out << label << '\n';
    out << "discriminant: " << disc << '\n';
    print_cert_text(out, "certificate", hyp.certificate);
  }
  return kOk;
}

int cmd_index(const Config& cfg, const PolyInputs& in, int samples, const std::string& branch, const std::string& trace,
              std::ostream& out, std::ostream& err) {
  const HomoPoly f = in.single();
  if (f.degree() < 2) throw UsageError("index needs degree >= 2");
  IndexOptions opt;
  opt.n_initial = samples;
  opt.branch = parse_branch(branch);
  IndexResult r;
  try {
    r = index_at_origin(second_fundamental_form(f), opt);
  } catch (const NotHyperbolicHere& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const RefinementLimit& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  if (!trace.empty()) {
    std::ostringstream csv;
    csv << std::setprecision(17) << "phi,theta,doubled\n";
    for (const auto& s : r.trace.samples) csv << s.phi << ',' << s.theta << ',' << s.doubled << '\n';
    write_file(trace, csv.str());
  }
  if (cfg.format == OutputFormat::Json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << "index: " << r.index.to_string() << '\n'
        << "residual: " << r.index.residual << '\n'
        << "samples_used: " << r.samples_used << '\n';
  }
  return kOk;
}

int cmd_census(const Config& cfg, int n, bool certify, std::ostream& out, std::ostream& err) {
  std::vector<CensusRow> rows;
  try {
    rows = enumerate(n);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  std::vector<std::optional<RowCertificate>> certs(rows.size());
  std::vector<std::string> failures(rows.size());
  if (certify) {
    parallel_for(rows.size(), [&](std::size_t i) {
      try {
        certs[i] = certify_row(rows[i]);
      } catch (const CertificationFailed& e) {
        failures[i] = e.what();
      }
    });
  }
  bool ok = true;
  for (const auto& f : failures) ok = ok && f.empty();
  if (cfg.format == OutputFormat::Json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Json j = to_json(rows[i]);
      if (certify) {
        j["certified"] = failures[i].empty();
        if (certs[i]) j["measured_index"] = certs[i]->index_f.index.to_string();
        if (!failures[i].empty()) j["failure"] = failures[i];
      }
      arr.push_back(j);
    }
    out << Json{{"n", n}, {"lower_bound", rows.front().lower_bound}, {"rows", arr}}.dump(2) << '\n';
  } else {
    out << "n\tk\tm\tindex\tlower_bound";
    if (certify) out << "\tcertified\tmeasured";
    out << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      out << r.n << '\t' << r.k << '\t' << r.m << '\t' << r.predicted_index().to_string() << '\t' << r.lower_bound;
      if (certify) {
        out << '\t' << (failures[i].empty() ? "yes" : "NO") << '\t'
            << (certs[i] ? certs[i]->index_f.index.to_string() : "-");
      }
      out << '\n';
    }
  }
  for (const auto& f : failures)
    if (!f.empty()) err << f << '\n';
  return ok ? kOk : kVerificationFailed;
}

int cmd_identities(const Config& cfg, int m_max, int k_max, std::ostream& out) {
  if (m_max < 2 || k_max < 1) throw UsageError("--m-max must be >= 2 and --k-max >= 1");
  const auto rows = verify_identities(m_max, k_max);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.all_passed();
  if (cfg.format == OutputFormat::Json) {
    out << Json{{"m_max", m_max}, {"k_max", k_max}, {"passed", ok}, {"identities", to_json(rows)}}.dump(2) << '\n';
  } else {
    for (const auto& r : rows) {
      out << (r.all_passed() ? "PASS" : "FAIL") << "  " << r.name << "  m=" << r.ms.front() << ".." << r.ms.back();
      if (!r.all_passed()) {
        out << "  failing m:";
        for (std::size_t i = 0; i < r.ms.size(); ++i)
          if (!r.passed[i]) out << ' ' << r.ms[i];
      }
      out << '\n';
    }
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_verify_ineq(const Config& cfg, const PolyInputs& in, std::ostream& out) {
  const auto [p, q] = in.pair();
  if (p.degree() < 2 || q.degree() < 1) throw UsageError("verify-ineq needs deg P >= 2 and deg Q >= 1");
  const InequalityCertificate c = verify_inequality_one(p, q);
  if (cfg.format == OutputFormat::Json) {
    out << Json{{"P", p.to_string()}, {"Q", q.to_string()}, {"bracket", c.bracket.to_string()}, {"holds", c.holds},
                {"certificate", to_json(c.certificate)}}
               .dump(2)
        << '\n';
  } else {
    out << (c.holds ? "holds" : "fails") << '\n' << "bracket: " << c.bracket << '\n';
    print_cert_text(out, "certificate", c.certificate);
  }
  return c.holds ? kOk : kVerificationFailed;
}

int cmd_certify(const Config& cfg, const PolyInputs& in, std::ostream& out, std::ostream& err) {
  const auto [p, q] = in.pair();
  IsotopyCertificate cert;
  try {
    cert = isotopy_certify(p, q);
  } catch (const PreconditionFailed& e) {
    if (cfg.format == OutputFormat::Json) {
      out << Json{{"valid", false}, {"failed_hypothesis", e.hypothesis()}, {"error", e.what()}}.dump(2) << '\n';
    }
    err << e.what() << '\n';
    return kVerificationFailed;
  }
  std::optional<std::pair<IndexResult, IndexResult>> idx;
  if (cert.valid()) {
    idx.emplace(index_at_origin(second_fundamental_form(p * q)), index_at_origin(second_fundamental_form(p)));
  }
  const bool ok = cert.valid() && idx && idx->first.index == idx->second.index;
  if (cfg.format == OutputFormat::Json) {
    Json j = to_json(cert);
    if (idx) j["index"] = {{"PQ", idx->first.index.to_string()}, {"P", idx->second.index.to_string()}};
    out << j.dump(2) << '\n';
  } else {
    out << (ok ? "certified" : "NOT certified") << '\n';
    for (const auto& h : cert.hypotheses) out << "  [" << (h.satisfied ? "ok" : "--") << "] " << h.name << '\n';
    for (const auto& c : cert.conditions) out << "  [" << (c.satisfied ? "ok" : "--") << "] " << c.name << '\n';
    for (const auto& leg : cert.legs) {
      out << "  leg " << to_string(leg.kind) << " (" << leg.branch << "): " << (leg.valid() ? "ok" : "FAILED") << '\n';
    }
    if (idx) out << "  index: i0(II_PQ) = " << idx->first.index.to_string() << ", i0(II_P) = " << idx->second.index.to_string() << '\n';
    out << "  conclusion: " << cert.conclusion << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_foliate(const Config& cfg, const PolyInputs& in, int seeds, const std::string& branch, const std::string& svg,
                const std::string& csv, std::ostream& out, std::ostream& err) {
  const HomoPoly f = in.single();
  if (f.degree() < 2) throw UsageError("foliate needs degree >= 2");
  if (seeds < 1) throw UsageError("--seeds must be positive");
  const QuadForm w = second_fundamental_form(f);
  FoliationOptions opt;
  opt.seeds = seeds;
  SeparatrixReport rays;
  CurveSet curves;
  try {
    rays = count_separatrices(w);
    if (!svg.empty() || !csv.empty()) curves = trace_foliation(w, parse_branch(branch), opt);
  } catch (const NotHyperbolicHere& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  if (!svg.empty()) write_file(svg, curves_to_svg(curves));
  if (!csv.empty()) write_file(csv, curves_to_csv(curves));
  if (cfg.format == OutputFormat::Json) {
    Json j = to_json(rays);
    j["poly"] = f.to_string();
    if (!svg.empty() || !csv.empty()) j["curves"] = curves.curves.size();
    out << j.dump(2) << '\n';
  } else {
    out << "separatrices: " << rays.count() << " rays per foliation (" << rays.union_count()
        << " radial rays over both branches)\n";
    out << "sectors: " << rays.count() << '\n';
    if (!svg.empty()) out << "svg: " << svg << '\n';
    if (!csv.empty()) out << "csv: " << csv << '\n';
  }
  return kOk;
}

}  // namespace

HomoPoly parse_family(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon + 1 >= text.size()) throw UsageError("family text must be P:m, Q:k or f:m,k");
  const std::string kind = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);
  try {
    if (kind == "P") return family_P(parse_int(args, text));
    if (kind == "Q") return family_Q(parse_int(args, text));
    if (kind == "f") {
      const auto comma = args.find(',');
      if (comma == std::string::npos) throw UsageError("family f needs m,k");
      return family_f(parse_int(args.substr(0, comma), text), parse_int(args.substr(comma + 1), text));
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family '" + kind + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hesstop: exact certification of hyperbolic homogeneous polynomials", "hesstop"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  Config cfg;
  bool json = false;
  app.add_flag("-v,--verbose", cfg.verbose, "Verbose diagnostics");

  PolyInputs in;
  auto add_poly_opts = [&](CLI::App* sub, bool two) {
    auto* p = sub->add_option("--poly", in.polys, two ? "Polynomial text (give P then Q)" : "Polynomial text");
    auto* f = sub->add_option("--family", in.families, "Family shortcut P:m, Q:k or f:m,k");
    if (!two) {
      p->expected(1);
      f->expected(1);
      p->excludes(f);
    }
    sub->add_flag("--json", json, "JSON output");
  };

  auto* classify = app.add_subcommand("classify", "Hyperbolic / elliptic classification with certificate");
  add_poly_opts(classify, false);

  int samples = 1024;
  std::string branch = "plus";
  std::string trace;
  auto* index = app.add_subcommand("index", "Index at the origin of the asymptotic line field");
  add_poly_opts(index, false);
  index->add_option("--samples", samples, "Initial circle samples (>= 64)")->check(CLI::Range(64, 1 << 24));
  index->add_option("--branch", branch, "Asymptotic branch: plus or minus");
  index->add_option("--trace", trace, "Write the direction trace as CSV");

  int n = 0;
  bool certify = false;
  auto* census = app.add_subcommand("census", "Component-separating family of degree n");
  census->add_option("--n", n, "Degree (>= 3)")->required();
  census->add_flag("--certify", certify, "Run every certificate and measure indexes");
  census->add_flag("--json", json, "JSON output");

  int m_max = 20;
  int k_max = 3;
  auto* ident = app.add_subcommand("verify-identities", "Binomial identities and the bracket closed form");
  ident->add_option("--m-max", m_max, "Largest m checked");
  ident->add_option("--k-max", k_max, "Largest k for the bracket closed form");
  ident->add_flag("--json", json, "JSON output");

  auto* ineq = app.add_subcommand("verify-ineq", "Certify bracket(P, Q) <= 0");
  add_poly_opts(ineq, true);

  auto* cert = app.add_subcommand("certify", "Certify that II_PQ and II_P are hyperbolic isotopic");
  add_poly_opts(cert, true);

  int seeds = 24;
  std::string svg, csv;
  std::string fol_branch = "plus";
  auto* foliate = app.add_subcommand("foliate", "Separatrices and traced leaves of the asymptotic foliation");
  add_poly_opts(foliate, false);
  foliate->add_option("--seeds", seeds, "Seed points on the unit circle");
  foliate->add_option("--svg", svg, "Write leaves as SVG");
  foliate->add_option("--csv", csv, "Write leaves as CSV (curve_id,x,y)");
  foliate->add_option("--branch", fol_branch, "Asymptotic branch: plus or minus");

  std::vector<std::string> argv_storage{"hesstop"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }
  cfg.format = json ? OutputFormat::Json : OutputFormat::Text;
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (cfg.subcommand == "classify") return cmd_classify(cfg, in, out);
    if (cfg.subcommand == "index") return cmd_index(cfg, in, samples, branch, trace, out, err);
    if (cfg.subcommand == "census") return cmd_census(cfg, n, certify, out, err);
    if (cfg.subcommand == "verify-identities") return cmd_identities(cfg, m_max, k_max, out);
    if (cfg.subcommand == "verify-ineq") return cmd_verify_ineq(cfg, in, out);
    if (cfg.subcommand == "certify") return cmd_certify(cfg, in, out, err);
    if (cfg.subcommand == "foliate") return cmd_foliate(cfg, in, seeds, fol_branch, svg, csv, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kGrammar;
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsageError;
}

}  // namespace hesstop::cli
