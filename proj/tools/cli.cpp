#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lssd/catalog.hpp"
#include "lssd/feasibility.hpp"
#include "lssd/geometry.hpp"
#include "lssd/hadamard.hpp"
#include "lssd/io.hpp"
#include "lssd/linked_system.hpp"
#include "lssd/quadratic_forms.hpp"
#include "lssd/scheme.hpp"

namespace lssd {
namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw io_error("cannot open '" + path + "' for writing");
  o << content;
  o.flush();
  if (!o) throw io_error("short write to '" + path + "'");
}

Int parse_int(const std::string& text, const char* what) {
  std::string t = text;
  if (!t.empty() && t[0] == '-') t = t.substr(1);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) {
        return std::isdigit(c);
      }))
    throw std::invalid_argument(std::string(what) + ": '" + text +
                                "' is not an integer");
  return Int(text);
}

std::string rstr(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  std::string s = n.str();
  if (d != 1) s += "/" + d.str();
  return s;
}

json jint(const Int& x) {
  if (x <= std::numeric_limits<long long>::max() &&
      x >= std::numeric_limits<long long>::min())
    return static_cast<long long>(x);
  return x.str();
}

json jmat(const RatMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rstr(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_cells(std::ostream& out,
                 const std::vector<std::vector<std::string>>& cells) {
  if (cells.empty()) return;
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j)
      width[j] = std::max(width[j], row[j].size());
  for (const auto& row : cells) {
    out << " ";
    for (std::size_t j = 0; j < row.size(); ++j)
      out << " " << std::setw(static_cast<int>(width[j])) << row[j];
    out << "\n";
  }
}

void print_rat_table(std::ostream& out, const char* name, const RatMat& m) {
  out << name << " =\n";
  std::vector<std::vector<std::string>> cells(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      cells[i].push_back(rstr(m(i, j)));
  print_cells(out, cells);
}

DesignParams mu_heavy(const DesignParams& p) {
  MuNu mn = mu_nu(p);
  return mn.mu > mn.nu ? p : complement_params(p);
}

std::string triple_str(const DesignParams& p) {
  return "(" + p.v.str() + ", " + p.k.str() + ", " + p.lambda.str() + ")";
}

std::string system_str(const DesignParams& p, int w) {
  return "(" + p.v.str() + ", " + p.k.str() + ", " + p.lambda.str() + "; " +
         std::to_string(w) + ")";
}

const char* branch_name(Branch b) {
  return b == Branch::Minus ? "minus" : "plus";
}

void print_params_facts(std::ostream& out, const DesignParams& p) {
  out << "s = " << (p.s ? p.s->str() : "-");
  try {
    MuNu mn = mu_nu(p);
    out << ", mu = " << mn.mu << ", nu = " << mn.nu << ", " << branch_name(mn.branch)
        << " branch";
    LssdClass c = classify(p);
    out << ", "
        << (c.heaviness == Heaviness::MuHeavy ? "mu-heavy" : "nu-heavy")
        << ", "
        << (c.outlook == Outlook::Optimistic ? "optimistic" : "pessimistic");
  } catch (const design_error& e) {
    out << " (" << e.what() << ")";
  }
  out << "\n";
}

void add_params_json(json& doc, const DesignParams& p, int w) {
  doc["v"] = jint(p.v);
  doc["k"] = jint(p.k);
  doc["lambda"] = jint(p.lambda);
  if (w > 0) doc["w"] = w;
  if (p.s)
    doc["s"] = jint(*p.s);
  else
    doc["s"] = nullptr;
  try {
    MuNu mn = mu_nu(p);
    doc["mu"] = jint(mn.mu);
    doc["nu"] = jint(mn.nu);
    doc["branch"] = branch_name(mn.branch);
    LssdClass c = classify(p);
    doc["heaviness"] =
        c.heaviness == Heaviness::MuHeavy ? "mu-heavy" : "nu-heavy";
    doc["outlook"] =
        c.outlook == Outlook::Optimistic ? "optimistic" : "pessimistic";
  } catch (const design_error&) {
  }
}

void describe_system(std::ostream& out, const LssdGraph& g,
                     const LssdReport& rep) {
  out << "LSSD" << system_str(g.params, g.w) << ": "
      << (rep.ok() ? "verified" : "NOT verified") << "\n";
  out << "axiom i (fiber partition): " << (rep.axiom_i_ok ? "ok" : "FAIL")
      << "; axiom ii (symmetric designs): "
      << (rep.axiom_ii_ok ? "ok" : "FAIL")
      << "; axiom iii (linking): " << (rep.axiom_iii_ok ? "ok" : "FAIL")
      << "\n";
  if (rep.observed_mu && rep.observed_nu)
    out << "observed mu = " << *rep.observed_mu << ", nu = "
        << *rep.observed_nu << "\n";
  print_params_facts(out, g.params);
  for (const AxiomFailure& f : rep.failures) {
    out << "  axiom " << f.axiom << " failure";
    if (f.fibers[2] != 0)
      out << " at fibers (" << f.fibers[0] << ", " << f.fibers[1] << ", "
          << f.fibers[2] << ")";
    else if (f.fibers[0] != 0)
      out << " at fibers (" << f.fibers[0] << ", " << f.fibers[1] << ")";
    out << ": " << f.detail << "\n";
  }
  if (!rep.note.empty()) out << "note: " << rep.note << "\n";
}

json system_json(const LssdGraph& g, const LssdReport& rep) {
  json doc;
  add_params_json(doc, g.params, g.w);
  doc["axiom_i"] = rep.axiom_i_ok;
  doc["axiom_ii"] = rep.axiom_ii_ok;
  doc["axiom_iii"] = rep.axiom_iii_ok;
  if (rep.observed_mu) doc["observed_mu"] = jint(*rep.observed_mu);
  if (rep.observed_nu) doc["observed_nu"] = jint(*rep.observed_nu);
  doc["verified"] = rep.ok();
  if (!rep.failures.empty()) {
    json fails = json::array();
    for (const AxiomFailure& f : rep.failures) {
      json jf;
      jf["axiom"] = f.axiom;
      jf["fibers"] = {f.fibers[0], f.fibers[1], f.fibers[2]};
      jf["vertices"] = {f.vertices[0], f.vertices[1]};
      jf["detail"] = f.detail;
      fails.push_back(std::move(jf));
    }
    doc["failures"] = std::move(fails);
  }
  if (!rep.note.empty()) doc["note"] = rep.note;
  return doc;
}

struct Emitter {
  std::ostream& out;
  bool json_mode = false;

  void done(const json& doc, const std::string& human) const {
    if (json_mode)
      out << doc.dump(2) << "\n";
    else
      out << human;
  }
};

// Shared tail of every construct subcommand: verify, report, optionally
// write the graph document.
int finish_construct(const Emitter& em, const char* kind, json extra,
                     const LssdGraph& g, const std::string& out_path,
                     std::string human_head) {
  LssdReport rep = verify_lssd(g);

  std::ostringstream hs;
  hs << human_head;
  describe_system(hs, g, rep);

  json doc;
  doc["command"] = "construct";
  doc["kind"] = kind;
  for (auto& [key, value] : extra.items()) doc[key] = value;
  json sys = system_json(g, rep);
  for (auto& [key, value] : sys.items()) doc[key] = value;

  if (!out_path.empty()) {
    json meta;
    meta["construction"] = kind;
    for (auto& [key, value] : extra.items()) meta[key] = value;
    write_file(out_path, lssd_to_json(g, meta.dump()));
    hs << "wrote " << out_path << "\n";
    doc["artifact"] = out_path;
  }
  em.done(doc, hs.str());
  return rep.ok() ? 0 : 1;
}

std::string verdict_phrase(FamilyVerdict v) {
  switch (v) {
    case FamilyVerdict::AlwaysPass:
      return "every member passes";
    case FamilyVerdict::PassIffMEquals1:
      return "passes exactly when m = 1";
    case FamilyVerdict::NeverPass:
      return "no member passes";
    case FamilyVerdict::Mixed:
      return "mixed";
  }
  return "mixed";
}

std::string verdict_token(FamilyVerdict v) {
  switch (v) {
    case FamilyVerdict::AlwaysPass:
      return "always-pass";
    case FamilyVerdict::PassIffMEquals1:
      return "iff-m-1";
    case FamilyVerdict::NeverPass:
      return "never-pass";
    case FamilyVerdict::Mixed:
      return "mixed";
  }
  return "mixed";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "linked systems of symmetric designs: construct, verify, screen, "
      "bound, and convert"};
  app.name("lssdtool");
  app.require_subcommand(1);

  Emitter em{out};
  app.add_flag("--json", em.json_mode, "machine-readable report on stdout");

  int rc = 0;
  std::string out_path;

  // ---- construct ----
  CLI::App* con = app.add_subcommand("construct", "build a linked system");
  con->require_subcommand(1);

  CLI::App* ck = con->add_subcommand(
      "kerdock", "Cameron-Seidel system from a Kerdock set of quadratic "
                 "forms on GF(2)^n");
  int kd_n = 0, kd_w = 0;
  bool kd_catalog = false;
  long long kd_budget = 2'000'000;
  ck->add_option("--n", kd_n, "GF(2) dimension (even)")->required();
  ck->add_option("--w", kd_w, "number of forms (default 2^(n-1))");
  ck->add_flag("--paper-family", kd_catalog,
               "use the catalogued n = 4 family instead of searching");
  ck->add_option("--budget", kd_budget, "search node budget");
  ck->add_option("--out", out_path, "write the graph document here");
  ck->callback([&] {
    if (kd_n < 2) throw std::invalid_argument("--n must be at least 2");
    if (kd_catalog && kd_n != 4)
      throw std::invalid_argument("the catalogued family has n = 4");
    int target = kd_w > 0 ? kd_w : (1 << (kd_n - 1));
    KerdockFamily fam = kd_catalog
                            ? kerdock_catalog_n4()
                            : search_kerdock_family(kd_n, target, kd_budget);
    if (target < static_cast<int>(fam.forms.size()))
      fam.forms.resize(static_cast<std::size_t>(target));
    LssdGraph g = cameron_seidel_lssd(fam);
    json extra;
    extra["n"] = kd_n;
    extra["forms"] = static_cast<int>(fam.forms.size());
    std::ostringstream head;
    head << "Kerdock set on GF(2)^" << kd_n << ": " << fam.forms.size()
         << " quadratic forms, pairwise difference nonsingular\n";
    rc = finish_construct(em, "kerdock", extra, g, out_path, head.str());
  });

  CLI::App* cb = con->add_subcommand(
      "beth-wocjan",
      "unbiased Hadamard matrices from an orthogonal array and a Hadamard "
      "seed, then the linked system they carry");
  std::string bw_oa, bw_h;
  cb->add_option("--oa", bw_oa,
                 "orthogonal array file (default: the order-4 MOLS array)");
  cb->add_option("--hadamard", bw_h,
                 "seed Hadamard file (default: the regular order-4 matrix)");
  cb->add_option("--out", out_path, "write the graph document here");
  cb->callback([&] {
    OrthArray o = bw_oa.empty() ? catalog_oa16() : oa_from_text(read_file(bw_oa));
    Hadamard h = bw_h.empty() ? catalog_h4() : hadamard_from_text(read_file(bw_h));
    UnbiasedHadamardSet s = beth_wocjan_unbiased_set(o, h);
    LssdGraph g = lssd_from_unbiased_hadamards(s);
    json extra;
    extra["order"] = s.order;
    extra["matrices"] = static_cast<int>(s.matrices.size());
    extra["regular"] = s.regular;
    std::ostringstream head;
    head << "Beth-Wocjan: OA(" << o.rows() << ", " << o.cols
         << ") with a Hadamard seed of order " << h.n << " -> "
         << s.matrices.size() << " pairwise unbiased Hadamard matrices of order "
         << s.order << "\n";
    if (HadamardProps hp = hadamard_props(s.matrices[0]); hp.row_sum)
      head << "regular, row sum " << *hp.row_sum << "\n";
    if (!s.note.empty()) head << "note: " << s.note << "\n";
    rc = finish_construct(em, "beth-wocjan", extra, g, out_path, head.str());
  });

  CLI::App* cd = con->add_subcommand(
      "degenerate", "the (v, 1, 0) system whose blocks are identity matrices");
  long long dg_v = 0;
  int dg_w = 0;
  cd->add_option("--v", dg_v, "fiber size")->required();
  cd->add_option("--w", dg_w, "number of fibers")->required();
  cd->add_option("--out", out_path, "write the graph document here");
  cd->callback([&] {
    LssdGraph g = degenerate_lssd(Int(dg_v), dg_w);
    json extra;
    rc = finish_construct(em, "degenerate", extra, g, out_path, "");
  });

  CLI::App* cf = con->add_subcommand(
      "from-hadamards",
      "linked system carried by pairwise unbiased regular Hadamard matrices");
  std::vector<std::string> fh_files;
  cf->add_option("files", fh_files, "Hadamard text files")
      ->required()
      ->expected(-1);
  cf->add_option("--out", out_path, "write the graph document here");
  cf->callback([&] {
    UnbiasedHadamardSet s;
    for (const std::string& f : fh_files)
      s.matrices.push_back(hadamard_from_text(read_file(f)));
    s.order = s.matrices[0].n;
    s.regular = true;
    for (const Hadamard& h : s.matrices) {
      if (h.n != s.order)
        throw design_error("Hadamard orders differ: " + std::to_string(h.n) +
                           " vs " + std::to_string(s.order));
      if (!hadamard_props(h).is_regular) s.regular = false;
    }
    LssdGraph g = lssd_from_unbiased_hadamards(s);
    json extra;
    extra["order"] = s.order;
    extra["matrices"] = static_cast<int>(s.matrices.size());
    std::ostringstream head;
    head << "read " << s.matrices.size() << " Hadamard matrices of order "
         << s.order << "\n";
    rc = finish_construct(em, "from-hadamards", extra, g, out_path,
                          head.str());
  });

  // ---- verify ----
  CLI::App* vf = app.add_subcommand(
      "verify", "check the three axioms of a graph document exactly");
  std::string vf_file;
  bool vf_scheme = false;
  vf->add_option("file", vf_file, "graph document (JSON)")->required();
  vf->add_flag("--scheme", vf_scheme,
               "also verify the induced 3-class association scheme and print "
               "its tables");
  vf->callback([&] {
    LssdGraph g = lssd_from_json(read_file(vf_file));
    LssdReport rep = verify_lssd(g);

    std::ostringstream hs;
    describe_system(hs, g, rep);
    json doc;
    doc["command"] = "verify";
    doc["file"] = vf_file;
    json sys = system_json(g, rep);
    for (auto& [key, value] : sys.items()) doc[key] = value;
    rc = rep.ok() ? 0 : 1;

    if (vf_scheme) {
      SchemeReport sr = verify_scheme(g);
      hs << "scheme: algebra " << (sr.algebra_ok ? "ok" : "FAIL")
         << ", Q-polynomial " << (sr.q_poly_ok ? "ok" : "FAIL")
         << ", Q-antipodal "
         << (!sr.q_antipodal_checked
                 ? "skipped (w = 2)"
                 : (sr.q_antipodal_ok ? "ok" : "FAIL"))
         << "\n";
      if (!sr.detail.empty()) hs << "scheme detail: " << sr.detail << "\n";
      json js;
      js["constructed"] = sr.constructed;
      js["algebra"] = sr.algebra_ok;
      js["q_polynomial"] = sr.q_poly_ok;
      js["q_antipodal_checked"] = sr.q_antipodal_checked;
      js["q_antipodal"] = sr.q_antipodal_ok;
      if (!sr.detail.empty()) js["detail"] = sr.detail;
      try {
        SchemeTables t = scheme_tables(mu_heavy(g.params), g.w);
        print_rat_table(hs, "P", t.P);
        print_rat_table(hs, "Q", t.Q);
        print_rat_table(hs, "Krein L1*", t.Lstar1);
        print_rat_table(hs, "Krein L3*", t.Lstar3);
        hs << "multiplicities: " << t.m[0] << ", " << t.m[1] << ", " << t.m[2]
           << ", " << t.m[3] << "\n";
        js["P"] = jmat(t.P);
        js["Q"] = jmat(t.Q);
        js["krein_l1"] = jmat(t.Lstar1);
        js["krein_l3"] = jmat(t.Lstar3);
        js["multiplicities"] = {jint(t.m[0]), jint(t.m[1]), jint(t.m[2]),
                                jint(t.m[3])};
      } catch (const scheme_error& e) {
        hs << "tables unavailable: " << e.what() << "\n";
        js["tables_unavailable"] = e.what();
      }
      doc["scheme"] = std::move(js);
      if (!sr.ok()) rc = 1;
    }
    em.done(doc, hs.str());
  });

  // ---- verify-oa ----
  CLI::App* vo = app.add_subcommand(
      "verify-oa", "check the orthogonal-array condition of an array file");
  std::string vo_file;
  vo->add_option("file", vo_file, "orthogonal array (text)")->required();
  vo->callback([&] {
    OrthArray o = oa_from_text(read_file(vo_file));
    bool ok = oa_pairs_ok(o);
    std::ostringstream hs;
    hs << "orthogonal array over symbols 1.." << o.n << ": " << o.rows()
       << " rows, " << o.cols << " columns\n"
       << "every ordered symbol pair once per column pair: "
       << (ok ? "ok" : "FAIL") << "\n";
    json doc;
    doc["command"] = "verify-oa";
    doc["file"] = vo_file;
    doc["n"] = o.n;
    doc["columns"] = o.cols;
    doc["valid"] = ok;
    em.done(doc, hs.str());
    rc = ok ? 0 : 1;
  });

  // ---- screen ----
  CLI::App* sc = app.add_subcommand(
      "screen", "integrality screen for one parameter triple or a catalogued "
                "design family");
  std::vector<std::string> sc_params;
  int sc_family = 0;
  std::string sc_range;
  CLI::Option* opt_params =
      sc->add_option("--params", sc_params, "v,k,lambda")->delimiter(',');
  CLI::Option* opt_family =
      sc->add_option("--family", sc_family, "family id 1..21");
  sc->add_option("--range", sc_range,
                 "primary index range A..B (with --family)")
      ->needs(opt_family);
  opt_params->excludes(opt_family);
  sc->callback([&] {
    std::ostringstream hs;
    json doc;
    doc["command"] = "screen";
    if (!sc_params.empty()) {
      if (sc_params.size() != 3)
        throw CLI::ValidationError("--params", "expected v,k,lambda");
      Int v = parse_int(sc_params[0], "v");
      Int k = parse_int(sc_params[1], "k");
      Int l = parse_int(sc_params[2], "lambda");
      ScreenVerdict sv = integrality_screen(v, k, l);
      hs << "integrality screen for (" << v << ", " << k << ", " << l
         << ")\n";
      hs << "s integral: " << (sv.s_integral ? "yes" : "no")
         << "; nu branches integral: plus "
         << (sv.nu_plus_integral ? "yes" : "no") << ", minus "
         << (sv.nu_minus_integral ? "yes" : "no") << "\n";
      hs << "gcd(k, v) = " << sv.gcd_k_v << "; gcd(s, v) = ";
      if (sv.s_integral)
        hs << sv.gcd_s_v;
      else
        hs << "-";
      hs << "; v composite: " << (sv.v_composite ? "yes" : "no") << "\n";
      if (sv.degenerate) hs << "degenerate (k = 1 or k = v-1)\n";
      if (sv.branch) hs << "branch: " << branch_name(*sv.branch) << "\n";
      if (sv.feasible)
        hs << "feasible for linking on more than two fibers\n";
      else
        hs << "infeasible: " << join(sv.notes, ", ") << "\n";
      doc["v"] = jint(v);
      doc["k"] = jint(k);
      doc["lambda"] = jint(l);
      doc["s_integral"] = sv.s_integral;
      doc["nu_plus_integral"] = sv.nu_plus_integral;
      doc["nu_minus_integral"] = sv.nu_minus_integral;
      doc["gcd_k_v"] = jint(sv.gcd_k_v);
      if (sv.s_integral) doc["gcd_s_v"] = jint(sv.gcd_s_v);
      doc["v_composite"] = sv.v_composite;
      doc["degenerate"] = sv.degenerate;
      if (sv.branch) doc["branch"] = branch_name(*sv.branch);
      doc["feasible"] = sv.feasible;
      doc["notes"] = sv.notes;
      rc = sv.feasible ? 0 : 1;
    } else if (sc_family > 0) {
      std::vector<FamilySpec> range;
      if (sc_range.empty()) {
        range = default_family_range(sc_family);
      } else {
        auto dots = sc_range.find("..");
        if (dots == std::string::npos)
          throw CLI::ValidationError("--range", "expected A..B");
        Int lo = parse_int(sc_range.substr(0, dots), "range start");
        Int hi = parse_int(sc_range.substr(dots + 2), "range end");
        range = family_range(sc_family, lo, hi);
      }
      FamilyScreen fs = screen_family(sc_family, range);
      hs << "family " << sc_family << " (" << family_name(sc_family) << "), "
         << fs.rows.size() << " members\n";
      json jrows = json::array();
      for (const FamilyRow& r : fs.rows) {
        hs << " ";
        json jr;
        json jidx;
        for (const auto& [name, value] : r.spec.idx) {
          hs << " " << name << "=" << value;
          jidx[name] = jint(value);
        }
        jr["indices"] = std::move(jidx);
        hs << ": ";
        if (r.result.rejected) {
          hs << "rejected (" << r.result.reason << ")";
          jr["rejected"] = true;
          jr["reason"] = r.result.reason;
        } else {
          hs << "(" << r.result.v << ", " << r.result.k << ", "
             << r.result.lambda << ") " << (r.pass ? "pass" : "fail");
          jr["rejected"] = false;
          jr["v"] = jint(r.result.v);
          jr["k"] = jint(r.result.k);
          jr["lambda"] = jint(r.result.lambda);
          if (r.screen && !r.screen->notes.empty())
            hs << " [" << join(r.screen->notes, ", ") << "]";
          if (r.screen) jr["notes"] = r.screen->notes;
        }
        jr["pass"] = r.pass;
        hs << "\n";
        jrows.push_back(std::move(jr));
      }
      hs << "verdict: " << verdict_phrase(fs.verdict) << "\n";
      doc["family"] = sc_family;
      doc["name"] = family_name(sc_family);
      doc["rows"] = std::move(jrows);
      doc["verdict"] = verdict_token(fs.verdict);
      rc = fs.verdict == FamilyVerdict::AlwaysPass ? 0 : 1;
    } else {
      throw CLI::RequiredError("screen: one of --params / --family");
    }
    em.done(doc, hs.str());
  });

  // ---- bounds ----
  CLI::App* bd = app.add_subcommand(
      "bounds", "upper bounds on the number of linkable fibers");
  std::vector<std::string> bd_params;
  int bd_w = 0;
  bool bd_q111_zero = false;
  bd->add_option("--params", bd_params, "v,k,lambda")
      ->delimiter(',')
      ->required();
  bd->add_option("--w", bd_w, "test this fiber count against every bound");
  bd->add_flag("--q111-zero", bd_q111_zero,
               "assume q_{1,1}^1 = 0 for the absolute bound");
  bd->callback([&] {
    if (bd_params.size() != 3)
      throw CLI::ValidationError("--params", "expected v,k,lambda");
    DesignParams p = validate_params(parse_int(bd_params[0], "v"),
                                     parse_int(bd_params[1], "k"),
                                     parse_int(bd_params[2], "lambda"));
    BoundsReport b = bounds(p, bd_q111_zero);

    std::ostringstream hs;
    hs << "fiber bounds for " << triple_str(p) << "\n";
    print_params_facts(hs, p);
    hs << "Noda: (w - 1) * " << b.noda_lhs_coeff << " <= " << b.noda_rhs;
    if (b.noda_w_max)
      hs << "  =>  w <= " << *b.noda_w_max;
    else
      hs << "  (no constraint: coefficient is not positive)";
    hs << "\n";
    if (b.krein_w_max)
      hs << "Krein: w <= " << rstr(*b.krein_w_max) << "\n";
    else
      hs << "Krein: not applicable (2k <= v)\n";
    hs << "absolute: w <= " << b.absolute_w_max
       << (bd_q111_zero ? "  (q_{1,1}^1 = 0)" : "  (q_{1,1}^1 > 0 assumed)")
       << "\n";
    if (b.menon_w_max)
      hs << "Menon: w <= " << *b.menon_w_max << "\n";

    json doc;
    doc["command"] = "bounds";
    add_params_json(doc, p, 0);
    doc["noda_coefficient"] = jint(b.noda_lhs_coeff);
    doc["noda_rhs"] = jint(b.noda_rhs);
    doc["noda_w_max"] = b.noda_w_max ? jint(*b.noda_w_max) : json();
    doc["krein_w_max"] = b.krein_w_max ? json(rstr(*b.krein_w_max)) : json();
    doc["absolute_w_max"] = jint(b.absolute_w_max);
    doc["q111_assumed_zero"] = bd_q111_zero;
    doc["menon_w_max"] = b.menon_w_max ? jint(*b.menon_w_max) : json();

    if (bd_w > 0) {
      if (bd_w < 2) throw std::invalid_argument("--w must be at least 2");
      Int W(bd_w);
      std::vector<std::string> violated;
      doc["tested_w"] = bd_w;
      try {
        KreinTables kt = krein_parameters(mu_heavy(p), bd_w);
        bool q0 = kt.q(1, 1, 1) == 0;
        hs << "test w = " << bd_w << ": q_{1,1}^1 = " << rstr(kt.q(1, 1, 1))
           << "\n";
        doc["q111"] = rstr(kt.q(1, 1, 1));
        BoundsReport bt = bounds(p, q0);
        if (!bt.noda_holds(W)) violated.push_back("Noda");
        if (bt.krein_w_max && Rat(W) > *bt.krein_w_max)
          violated.push_back("Krein");
        if (W > bt.absolute_w_max) violated.push_back("absolute");
        if (bt.menon_w_max && W > *bt.menon_w_max)
          violated.push_back("Menon");
      } catch (const krein_violation& kv) {
        violated.push_back("Krein (q_{" + std::to_string(kv.i) + "," +
                           std::to_string(kv.j) + "}^" +
                           std::to_string(kv.k) + " < 0)");
      }
      if (violated.empty()) {
        hs << "w = " << bd_w << " satisfies every applicable bound\n";
        rc = 0;
      } else {
        hs << "w = " << bd_w << " violates: " << join(violated, ", ")
           << "\n";
        rc = 1;
      }
      doc["violated"] = violated;
      doc["w_feasible"] = violated.empty();
    }
    em.done(doc, hs.str());
  });

  // ---- derive ----
  CLI::App* dv = app.add_subcommand(
      "derive", "equivalent geometric structures of a verified system");
  dv->require_subcommand(1);

  CLI::App* dl = dv->add_subcommand(
      "lines", "equiangular line system spanned by the first t fibers");
  std::string dl_file;
  int dl_t = 0;
  dl->add_option("file", dl_file, "graph document (JSON)")->required();
  dl->add_option("--t", dl_t, "number of fibers to use")->required();
  dl->add_option("--out", out_path, "write the scaled Gram matrix here");
  dl->callback([&] {
    LssdGraph g = lssd_from_json(read_file(dl_file));
    auto [gram, co] = equiangular_gram(g, dl_t);
    Int diag = gram.entries(0, 0);
    Rat off = Rat(gram.scale) * co.c;

    std::ostringstream hs;
    hs << "equiangular lines from LSSD" << system_str(g.params, g.w)
       << ", t = " << dl_t << "\n";
    hs << gram.dim << " lines spanning a space of rank " << gram.claimed_rank
       << ", common inner product " << rstr(co.c) << "\n";
    hs << "scale D = " << gram.scale << ": diagonal " << diag
       << ", off-diagonal +-" << rstr(off) << "\n";
    hs << "weights: alpha = " << rstr(co.alpha) << ", beta = " << rstr(co.beta)
       << ", gamma = " << rstr(co.gamma) << "\n";

    json doc;
    doc["command"] = "derive";
    doc["kind"] = "lines";
    doc["t"] = dl_t;
    doc["lines"] = static_cast<long long>(gram.dim);
    doc["rank"] = jint(gram.claimed_rank);
    doc["scale"] = jint(gram.scale);
    doc["diagonal"] = jint(diag);
    doc["cosine"] = rstr(co.c);
    doc["alpha"] = rstr(co.alpha);
    doc["beta"] = rstr(co.beta);
    doc["gamma"] = rstr(co.gamma);
    if (!out_path.empty()) {
      write_file(out_path, gram_to_json(gram));
      hs << "wrote " << out_path << "\n";
      doc["artifact"] = out_path;
    }
    em.done(doc, hs.str());
    rc = 0;
  });

  CLI::App* dm = dv->add_subcommand(
      "mub-gram", "Gram matrix of the candidate unbiased bases, w(E0 + E1)");
  std::string dm_file;
  dm->add_option("file", dm_file, "graph document (JSON)")->required();
  dm->add_option("--out", out_path, "write the scaled Gram matrix here");
  dm->callback([&] {
    LssdGraph g = lssd_from_json(read_file(dm_file));
    MubGram m = mub_gram(g);
    std::ostringstream hs;
    hs << "unbiased-bases Gram from LSSD" << system_str(g.params, g.w)
       << "\n";
    hs << "dimension " << m.gram.dim << ", scale D = " << m.gram.scale
       << ", rank " << m.gram.claimed_rank << "\n";
    hs << "cross inner products: " << rstr(m.beta1) << " and "
       << rstr(m.beta2) << "\n";
    hs << "mutually unbiased real bases: " << (m.is_mub ? "yes" : "no")
       << "\n";
    json doc;
    doc["command"] = "derive";
    doc["kind"] = "mub-gram";
    doc["dim"] = static_cast<long long>(m.gram.dim);
    doc["rank"] = jint(m.gram.claimed_rank);
    doc["scale"] = jint(m.gram.scale);
    doc["beta1"] = rstr(m.beta1);
    doc["beta2"] = rstr(m.beta2);
    doc["is_mub"] = m.is_mub;
    if (!out_path.empty()) {
      write_file(out_path, gram_to_json(m.gram));
      hs << "wrote " << out_path << "\n";
      doc["artifact"] = out_path;
    }
    em.done(doc, hs.str());
    rc = 0;
  });

  CLI::App* dh = dv->add_subcommand(
      "hadamards",
      "pairwise unbiased regular Hadamard matrices of a Menon-type system");
  std::string dh_file, dh_dir;
  dh->add_option("file", dh_file, "graph document (JSON)")->required();
  dh->add_option("--out", dh_dir, "directory for the Hadamard text files")
      ->required();
  dh->callback([&] {
    LssdGraph g = lssd_from_json(read_file(dh_file));
    UnbiasedHadamardSet s = hadamards_from_lssd(g);
    std::filesystem::create_directories(dh_dir);
    std::ostringstream hs;
    hs << "regular unbiased Hadamard matrices from LSSD"
       << system_str(g.params, g.w) << "\n";
    HadamardProps hp = hadamard_props(s.matrices[0]);
    hs << "order " << s.order << ", count " << s.matrices.size();
    if (hp.row_sum) hs << ", row sum " << *hp.row_sum;
    hs << "\n";
    json files = json::array();
    for (std::size_t i = 0; i < s.matrices.size(); ++i) {
      std::filesystem::path fp =
          std::filesystem::path(dh_dir) /
          ("hadamard_" + std::to_string(i + 2) + ".txt");
      write_file(fp.string(), hadamard_to_text(s.matrices[i]));
      hs << "wrote " << fp.string() << "\n";
      files.push_back(fp.string());
    }
    if (!s.note.empty()) hs << "note: " << s.note << "\n";
    json doc;
    doc["command"] = "derive";
    doc["kind"] = "hadamards";
    doc["order"] = s.order;
    doc["count"] = static_cast<long long>(s.matrices.size());
    if (hp.row_sum) doc["row_sum"] = *hp.row_sum;
    doc["files"] = std::move(files);
    em.done(doc, hs.str());
    rc = 0;
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const io_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed document: " << e.what() << "\n";
    return 2;
  } catch (const design_error& e) {
    err << "design violation: " << e.what() << "\n";
    return 1;
  } catch (const scheme_error& e) {
    err << "scheme violation: " << e.what() << "\n";
    return 1;
  } catch (const construction_integrity_error& e) {
    err << "construction integrity: " << e.what() << "\n";
    return 1;
  } catch (const kerdock_bound_error& e) {
    err << "Kerdock bound: " << e.what() << "\n";
    return 1;
  } catch (const kerdock_budget_error& e) {
    err << "search budget exhausted: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace lssd
