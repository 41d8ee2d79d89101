#include "fixture.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hocx;
using namespace hocx::cli;

namespace {

struct Table {
  std::string title;
  std::vector<HomologyReport> rows;
};

// Everything a command produces; rendered as text or JSON at the end.
struct Outcome {
  std::string command, kind, name;
  std::vector<Report> reports;
  std::vector<Table> tables;
  json verdict;  // galois only
  bool ok() const {
    for (const Report& r : reports)
      if (!r.ok()) return false;
    return true;
  }
};

json report_json(const Report& r) {
  json items = json::array();
  for (const CheckItem& it : r.items) {
    json i{{"name", it.name}, {"status", it.pass ? "pass" : "fail"}};
    if (!it.pass && !it.witness.empty()) i["witness"] = it.witness;
    items.push_back(i);
  }
  return json{{"title", r.title}, {"ok", r.ok()}, {"failed", r.failed()}, {"items", items}};
}

std::string render(const Outcome& o, const std::string& format) {
  if (format == "json") {
    json j{{"command", o.command}, {"kind", o.kind}, {"name", o.name}, {"ok", o.ok()}};
    if (!o.verdict.is_null()) j["verdict"] = o.verdict;
    json reps = json::array();
    for (const Report& r : o.reports) reps.push_back(report_json(r));
    j["reports"] = reps;
    json tabs = json::array();
    for (const Table& t : o.tables) {
      json rows = json::array();
      for (const HomologyReport& h : t.rows) rows.push_back(json::parse(h.json()));
      tabs.push_back(json{{"title", t.title}, {"engines", rows}});
    }
    j["homology"] = tabs;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << o.command << " " << o.kind << " " << o.name << "\n";
  if (!o.verdict.is_null()) os << "verdict: " << o.verdict.dump() << "\n";
  for (const Report& r : o.reports) os << r.str();
  for (const Table& t : o.tables) os << t.title << "\n" << homology_table(t.rows);
  os << (o.ok() ? "ok" : "FAILED") << "\n";
  return os.str();
}

Theta doc_theta(const json& doc, const FiniteGroupoid& g) {
  return load_theta(doc.contains("theta") ? doc.at("theta") : json("id"), g, "/theta");
}

std::vector<HomologyReport> engines(const std::string& method, const std::function<HomologyReport()>& lambda,
                                    const std::function<HomologyReport()>& bicomplex) {
  std::vector<HomologyReport> out;
  if (method != "bicomplex") out.push_back(lambda());
  if (method != "lambda") out.push_back(bicomplex());
  return out;
}

// Both engines must agree when both ran.
Report agreement(const std::string& title, const std::vector<HomologyReport>& rows) {
  Report r;
  r.title = title;
  if (rows.size() == 2) {
    std::ostringstream w;
    w << rows[0].json() << " vs " << rows[1].json();
    r.add("engines agree", rows[0].dims == rows[1].dims, w.str());
  }
  return r;
}

HopfGaloisCoextension load_hopf_galois(const json& doc, std::size_t top) {
  HopfCoextensionInput in = load_hopf_coextension(doc);
  return hopf_coextension(in.h, in.c, top);
}

Outcome cmd_check(const json& doc, const std::string& kind) {
  Outcome o{"check", kind, "", {}, {}, {}};
  if (kind == "groupoid") {
    FiniteGroupoid g = load_groupoid(doc.at("groupoid"), "/groupoid");
    o.name = g.name;
    o.reports.push_back(check_groupoid(g));
    if (o.ok()) {
      Theta th = doc_theta(doc, g);
      o.reports.push_back(check_cyclic(g, th));
      if (o.ok()) o.reports.push_back(verify_cyclic(nerve_cyclic_module(g, th, 3)));
    }
  } else if (kind == "coalgebra") {
    Coalgebra c = load_coalgebra(doc.at("coalgebra"), "/coalgebra");
    o.name = "dim " + std::to_string(c.dim());
    o.reports.push_back(check_coalgebra(c));
  } else if (kind == "xhopf") {
    AnyXHopf x = load_xhopf(doc.at("xhopf"), "/xhopf");
    o.name = x.name;
    if (x.left) {
      o.reports.push_back(check_left_bicoalgebroid(x.left->base));
      o.reports.push_back(lemma_suite_left(*x.left));
    } else {
      o.reports.push_back(check_right_bicoalgebroid(x.right->base));
      o.reports.push_back(lemma_suite_right(*x.right));
    }
  } else if (kind == "sayd") {
    AnySayd s = load_sayd(doc.at("sayd"), "/sayd");
    o.name = s.name;
    o.reports.push_back(s.lr ? check_sayd_lr(*s.lr) : check_sayd_rl(*s.rl));
  } else if (kind == "coextension") {
    CoextensionInput in = load_coextension(doc);
    o.name = in.x.name;
    o.reports.push_back(check_comodule_coalgebra(in.x.k));
    o.reports.push_back(can_lemma_suite(in.x));
    if (in.x.galois) {
      o.reports.push_back(kappa(in.x).report);
      o.reports.push_back(sayd_functor(in.x, in.m).report);
    }
  } else {
    HopfGaloisCoextension h = load_hopf_galois(doc, 2);
    o.name = h.x.name;
    o.reports.push_back(h.report);
  }
  return o;
}

Outcome cmd_hc(const json& doc, const std::string& kind, std::size_t n, const std::string& method) {
  Outcome o{"hc", kind, "", {}, {}, {}};
  if (kind == "groupoid") {
    FiniteGroupoid g = load_groupoid(doc.at("groupoid"), "/groupoid");
    o.name = g.name;
    CyclicObject x = nerve_cyclic_module(g, doc_theta(doc, g), n + 1);
    auto rows = engines(method, [&] { return lambda_hc(x, n); }, [&] { return bicomplex_hc(x, n); });
    o.reports.push_back(agreement("HC_n of the nerve", rows));
    o.tables.push_back({"HC_n of the nerve", rows});
  } else if (kind == "coextension") {
    CoextensionInput in = load_coextension(doc);
    o.name = in.x.name;
    CocyclicObject x = build_comodule_coalgebra_cocyclic(in.x.k, in.m, n + 1);
    auto rows = engines(method, [&] { return lambda_hcc(x, n); }, [&] { return bicomplex_hcc(x, n); });
    o.reports.push_back(agreement("HC^n(T, M)", rows));
    o.tables.push_back({"HC^n(T, M)", rows});
  } else if (kind == "hopf_coextension") {
    HopfGaloisCoextension h = load_hopf_galois(doc, n + 1);
    o.name = h.x.name;
    auto a = engines(method, [&] { return lambda_hcc(h.cocyclic, n); }, [&] { return bicomplex_hcc(h.cocyclic, n); });
    auto b = engines(method, [&] { return lambda_hcc(h.dual, n); }, [&] { return bicomplex_hcc(h.dual, n); });
    Report r = agreement("HC^n(C, C^D) and HC^n(H, M~)", a);
    r.merge(agreement("", b), "dual ");
    std::ostringstream w;
    w << a[0].json() << " vs " << b[0].json();
    r.add("both sides agree", a[0].dims == b[0].dims, w.str());
    o.reports.push_back(r);
    o.tables.push_back({"HC^n(C, C^D)", a});
    o.tables.push_back({"HC^n(H, M~)", b});
  } else {
    throw ParseError("/kind", "hc needs a groupoid, coextension or hopf_coextension");
  }
  return o;
}

Outcome cmd_iso(const json& doc, const std::string& kind, std::size_t n) {
  Outcome o{"iso", kind, "", {}, {}, {}};
  if (kind == "groupoid") {
    FiniteGroupoid g = load_groupoid(doc.at("groupoid"), "/groupoid");
    o.name = g.name;
    ComparisonIso ci = comparison_iso(g, doc_theta(doc, g), n);
    if (doc.contains("corrupt_map_degree")) {
      // flip the sign of one entry of the forward map
      std::size_t d = doc.at("corrupt_map_degree").get<std::size_t>();
      if (d >= ci.forward.size()) throw ParseError("/corrupt_map_degree", "degree out of range");
      std::vector<Matrix> maps = ci.forward;
      Matrix& m = maps[d];
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.col(j).empty()) {
          auto [r, v] = *m.col(j).begin();
          m.set(r, j, -v);
          break;
        }
      o.reports.push_back(iso_check(ci.coefficients, ci.nerve, maps));
    } else {
      o.reports.push_back(ci.report);
    }
  } else if (kind == "coextension") {
    CoextensionInput in = load_coextension(doc);
    o.name = in.x.name;
    o.reports.push_back(omega_iso(in.x, in.m, n).report);
  } else if (kind == "hopf_coextension") {
    HopfGaloisCoextension h = load_hopf_galois(doc, n);
    o.name = h.x.name;
    o.reports.push_back(h.omega.report);
  } else {
    throw ParseError("/kind", "iso needs a groupoid, coextension or hopf_coextension");
  }
  return o;
}

Outcome cmd_galois(const json& doc, const std::string& kind, std::size_t omega_degree) {
  Outcome o{"galois", kind, "", {}, {}, {}};
  if (kind == "coextension") {
    CoextensionInput in = load_coextension(doc);
    o.name = in.x.name;
    o.verdict = json{{"galois", in.x.galois},
                     {"rank", in.x.can_rank},
                     {"dom_dim", in.x.can_dom.space.dim()},
                     {"cod_dim", in.x.can_cod.space.dim()}};
    if (!in.x.galois) return o;
    o.reports.push_back(can_lemma_suite(in.x));
    o.reports.push_back(kappa(in.x).report);
    o.reports.push_back(sayd_functor(in.x, in.m).report);
    o.reports.push_back(omega_iso(in.x, in.m, omega_degree).report);
  } else if (kind == "hopf_coextension") {
    HopfCoextensionInput in = load_hopf_coextension(doc);
    o.name = in.c.name;
    try {
      HopfGaloisCoextension h = hopf_coextension(in.h, in.c, omega_degree);
      o.verdict = json{{"galois", true},
                       {"rank", h.x.can_rank},
                       {"dom_dim", h.x.can_dom.space.dim()},
                       {"cod_dim", h.x.can_cod.space.dim()}};
      o.reports.push_back(h.report);
    } catch (const NotGalois& e) {
      o.verdict = json{{"galois", false}, {"rank", e.rank}, {"dom_dim", e.dom_dim}, {"cod_dim", e.cod_dim}};
    }
  } else {
    throw ParseError("/kind", "galois needs a coextension or hopf_coextension");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hocx: exact checks and cyclic homology for x-Hopf coalgebras"};
  app.require_subcommand(1);
  std::string file, format = "text", out, method = "both";
  std::size_t max_degree = 3, omega_degree = 2;

  auto common = [&](CLI::App* c) {
    c->add_option("file", file, "JSON input")->required();
    c->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    c->add_option("--out", out, "write the result here instead of stdout");
  };
  CLI::App* check = app.add_subcommand("check", "verify the structure described by the file");
  common(check);
  CLI::App* hc = app.add_subcommand("hc", "cyclic (co)homology dimensions");
  common(hc);
  hc->add_option("--max-degree", max_degree);
  hc->add_option("--method", method)->check(CLI::IsMember({"lambda", "bicomplex", "both"}));
  CLI::App* iso = app.add_subcommand("iso", "comparison isomorphisms");
  common(iso);
  iso->add_option("--max-degree", max_degree);
  CLI::App* gal = app.add_subcommand("galois", "canonical map, kappa and the induced SAYD module");
  common(gal);
  gal->add_option("--omega-degree", omega_degree);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  Outcome o;
  try {
    json doc = read_file(file);
    std::string kind = kind_of(doc);
    if (check->parsed()) o = cmd_check(doc, kind);
    else if (hc->parsed()) o = cmd_hc(doc, kind, max_degree, method);
    else if (iso->parsed()) o = cmd_iso(doc, kind, max_degree);
    else o = cmd_galois(doc, kind, omega_degree);
  } catch (const ParseError& e) {
    std::cerr << "ParseError at " << e.what() << "\n";
    return 2;
  } catch (const UnknownBuiltin& e) {
    std::cerr << "UnknownBuiltin: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // library errors (bad tables, failing identities) are failures, not usage errors
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::string text = render(o, format);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    f << text;
  }
  return o.ok() ? 0 : 1;
}
