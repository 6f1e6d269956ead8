#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "leray/checks.hpp"
#include "leray/flat_spectral.hpp"
#include "leray/helly.hpp"
#include "leray/io.hpp"
#include "leray/leray.hpp"

using namespace leray;
using nlohmann::json;

namespace {

struct Options {
  std::string field = "gf2";
  std::string format = "json";
  std::string out;
};

// A report is kept in all three shapes; the format flag picks one.
struct Report {
  json data;
  std::string text;
  std::string csv;
  int exit_code = 0;
};

void emit(const Options& o, const Report& r) {
  std::string body;
  if (o.format == "json") body = r.data.dump() + "\n";
  else if (o.format == "text") body = r.text;
  else body = r.csv;
  if (o.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write " + o.out);
    f << body;
  }
}

std::string betti_text(const BettiVector& b) {
  std::ostringstream s;
  s << "field " << b.field().name() << "\n";
  if (b.is_zero()) s << "all reduced Betti numbers vanish\n";
  for (int d : b.support()) s << "h_" << d << " = " << b[d] << "\n";
  return s.str();
}

std::string betti_csv(const BettiVector& b) {
  std::string s = "degree,rank\n";
  for (int d = -1; d <= b.top_degree(); ++d) s += std::to_string(d) + "," + std::to_string(b[d]) + "\n";
  return s;
}

Report leray_report(const LerayResult& r, const char* key) {
  Report rep{io::leray_to_json(r, key), {}, {}};
  rep.text = "L = " + std::to_string(r.value) + "\n";
  rep.csv = std::string("L,") + key + ",degree\n" + std::to_string(r.value) + ",";
  if (r.witness) {
    rep.text += std::string("witness ") + key + " = " + r.witness->subset.str() + " in degree " +
                std::to_string(r.witness->degree) + "\n";
    rep.csv += io::join_vertices(r.witness->subset) + "," + std::to_string(r.witness->degree);
  } else {
    rep.csv += ",";
  }
  rep.csv += "\n";
  return rep;
}

Report complex_report(const SimplicialComplex& x) {
  return {io::complex_to_json(x), io::complex_to_text(x), io::complex_to_text(x)};
}

std::string witness_text(const Witness& w, const char* method) {
  return std::string(method) + ": sigma = " + w.sigma.str() + ", rank " + std::to_string(w.rank_value) +
         " <= bound " + std::to_string(w.bound) + "\n";
}

std::string witness_csv_row(const Witness& w, const char* method) {
  return std::string(method) + "," + io::join_vertices(w.sigma) + "," + std::to_string(w.rank_value) + "," +
         std::to_string(w.bound) + "\n";
}

HellyInstance load_instance(const std::string& path, const Options& o, bool field_given) {
  auto t = io::parse_instance(io::read_file(path));
  FieldSpec field = FieldSpec::parse(o.field);
  if (!field_given && t.field) field = *t.field;
  return HellyInstance(std::move(t.x), std::move(t.y), std::move(t.m), field);
}

Report e1_report(const E1Page& page, const EulerCheck& chk) {
  Report r{io::e1_to_json(page), {}, "p,q,dim\n"};
  r.data["euler"] = {{"page", chk.page}, {"union", chk.target}, {"ok", chk.ok}};
  std::ostringstream s;
  s << "rank " << page.rank << "\n";
  for (const auto& e : page.entries) {
    s << "E1[" << e.p << "," << e.q << "] = " << e.dim << "\n";
    r.csv += std::to_string(e.p) + "," + std::to_string(e.q) + "," + std::to_string(e.dim) + "\n";
  }
  s << "euler: page " << chk.page << ", union " << chk.target << (chk.ok ? " (ok)" : " (MISMATCH)") << "\n";
  r.text = s.str();
  if (!chk.ok) r.exit_code = 3;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leray numbers, matroid flat families and topological Helly checks"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", opt.field, "gf<p> or q")->capture_default_str();
    sub->add_option("--format", opt.format, "json, text or csv")
        ->check(CLI::IsMember({"json", "text", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", opt.out, "write the report to a file");
  };

  std::string input, input2, mode = "both", blocks, matroid_path, constant_path, instance_path, check;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  unsigned threads = 0;
  bool use_link = false;

  auto* homology = app.add_subcommand("homology", "reduced Betti numbers of a complex");
  homology->add_option("complex", input)->required();
  auto* leray_cmd = app.add_subcommand("leray", "Leray number with a witness subset");
  leray_cmd->add_option("complex", input)->required();
  auto* rleray = app.add_subcommand("rleray", "relative Leray number L_Y(X)");
  rleray->add_option("X", input)->required();
  rleray->add_option("Y", input2)->required();
  rleray->add_flag("--link", use_link, "measure on links instead of deletions");
  auto* dual_cmd = app.add_subcommand("dual", "Alexander dual of a complex");
  dual_cmd->add_option("complex", input)->required();
  auto* minfo = app.add_subcommand("matroid-info", "rank, flats and dual of a matroid");
  minfo->add_option("matroid", input)->required();
  auto* e1 = app.add_subcommand("e1-page", "E1 page of an intersection family over the flats");
  e1->add_option("--matroid", matroid_path, "matroid for a constant family");
  e1->add_option("--constant", constant_path, "complex used for every flat");
  e1->add_option("--instance", instance_path, "instance whose dualized Z_K family is used");
  auto* fbetti = app.add_subcommand("flat-betti", "homology of the proper positive-rank flats");
  fbetti->add_option("matroid", input)->required();
  auto* vrtch = app.add_subcommand("verify-rtch", "find sigma in X with rank(V - sigma) <= L_Y(X)");
  vrtch->add_option("instance", input)->required();
  vrtch->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "constructive", "both"}))->capture_default_str();
  auto* vcol = app.add_subcommand("verify-colorful", "colorful Helly check for a partition into blocks");
  vcol->add_option("complex", input)->required();
  vcol->add_option("--blocks", blocks, "e.g. \"[1 2][3 4]\"")->required();
  auto* hnum = app.add_subcommand("helly-number", "Helly number and nerve Leray bound of a set family");
  hnum->add_option("family", input)->required();
  auto* suite = app.add_subcommand("random-suite", "run a seeded randomized check");
  suite->add_option("--seed", seed)->capture_default_str();
  suite->add_option("--count", count)->capture_default_str();
  suite->add_option("--threads", threads, "0 = hardware concurrency");
  std::vector<std::string> names;
  for (const auto& [k, v] : checks::registry()) names.push_back(k);
  suite->add_option("--check", check)->required()->check(CLI::IsMember(names));

  for (auto* s : app.get_subcommands({})) add_common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    const auto chosen = app.get_subcommands();
    const bool field_given =
        std::any_of(chosen.begin(), chosen.end(), [](CLI::App* s) { return s->count("--field") > 0; });
    const FieldSpec field = FieldSpec::parse(opt.field);
    Report rep;

    if (*homology) {
      const auto b = reduced_betti(io::parse_complex(io::read_file(input)), field);
      rep = {io::betti_to_json(b), betti_text(b), betti_csv(b)};
    } else if (*leray_cmd) {
      rep = leray_report(leray_number(io::parse_complex(io::read_file(input)), field), "S");
    } else if (*rleray) {
      const auto x = io::parse_complex(io::read_file(input));
      const auto y = io::parse_complex(io::read_file(input2));
      rep = leray_report(use_link ? link_leray(x, y, field) : relative_leray(x, y, field), "sigma");
    } else if (*dual_cmd) {
      rep = complex_report(alexander_dual(io::parse_complex(io::read_file(input))));
    } else if (*minfo) {
      const auto m = io::parse_matroid(io::read_file(input));
      const auto lattice = flat_lattice(m);
      json flats = json::array();
      for (const auto& k : lattice.all) flats.push_back({{"flat", io::to_json(k)}, {"rank", m.rank(k)}});
      const auto d = dual(m);
      rep.data = {{"ground", io::to_json(m.ground())},
                  {"rank", m.rank()},
                  {"flats", flats},
                  {"dual", io::matroid_to_json(d)}};
      std::ostringstream t;
      t << "ground " << m.ground() << ", rank " << m.rank() << "\n";
      rep.csv = "flat,rank\n";
      for (const auto& k : lattice.all) {
        t << "flat " << k << " rank " << m.rank(k) << "\n";
        rep.csv += io::join_vertices(k) + "," + std::to_string(m.rank(k)) + "\n";
      }
      t << "dual rank " << d.rank() << "\n" << io::matroid_to_text(d);
      rep.text = t.str();
    } else if (*e1) {
      if (!instance_path.empty()) {
        const auto inst = load_instance(instance_path, opt, field_given);
        if (inst.x().is_full_simplex()) throw InputError("e1-page: X is the full simplex, so X^∨ is void");
        const ZkConstruction zc(inst.x());
        const auto fam = dualized_zk_family(zc, inst.matroid());
        const auto page = e1_page(fam, inst.field());
        rep = e1_report(page, euler_check(page, fam, inst.field()));
      } else {
        if (matroid_path.empty() || constant_path.empty())
          throw InputError("e1-page needs --instance, or both --matroid and --constant");
        const auto m = io::parse_matroid(io::read_file(matroid_path));
        const auto t = io::parse_complex(io::read_file(constant_path));
        const auto fam = FlatFamily::build(m, FamilyMode::intersection, [&](const VertexSet&) { return t; });
        const auto page = e1_page(fam, field);
        rep = e1_report(page, euler_check(page, fam, field));
      }
    } else if (*fbetti) {
      const auto b = flat_order_betti(io::parse_matroid(io::read_file(input)), field);
      rep = {io::betti_to_json(b), betti_text(b), betti_csv(b)};
    } else if (*vrtch) {
      const auto inst = load_instance(input, opt, field_given);
      rep.data = {{"field", inst.field().name()}};
      rep.csv = "method,sigma,rank,bound\n";
      if (mode != "constructive") {
        const auto w = verify_rtch_exhaustive(inst);
        rep.data["exhaustive"] = io::witness_to_json(w, "exhaustive", {});
        rep.text += witness_text(w, "exhaustive");
        rep.csv += witness_csv_row(w, "exhaustive");
      }
      if (mode != "exhaustive") {
        const auto c = rtch_constructive(inst);
        rep.data["constructive"] = io::witness_to_json(c.witness, "constructive", c.checks);
        rep.text += witness_text(c.witness, "constructive");
        for (const auto& s : c.checks) rep.text += "  checked: " + s + "\n";
        rep.csv += witness_csv_row(c.witness, "constructive");
      }
      if (mode != "both") rep.data = rep.data[mode];
    } else if (*vcol) {
      const auto x = io::parse_complex(io::read_file(input));
      const auto bl = io::parse_blocks(blocks, 0);
      const int i = verify_colorful(x, bl, field);
      const int l = leray_number(x, field).value;
      rep.data = {{"block", i}, {"set", io::to_json(bl[i - 1])}, {"L", l}};
      rep.text = "block " + std::to_string(i) + " = " + bl[i - 1].str() + " is a face (L = " + std::to_string(l) + ")\n";
      rep.csv = "block,L\n" + std::to_string(i) + "," + std::to_string(l) + "\n";
    } else if (*hnum) {
      const auto f = io::parse_set_family(io::read_file(input));
      const int h = helly_number(f);
      const int l = leray_number(nerve(f), field).value;
      rep.data = {{"helly", h}, {"nerve_leray", l}, {"bound_holds", h <= l + 1}};
      rep.text = "h = " + std::to_string(h) + ", L(nerve) = " + std::to_string(l) + "\n";
      rep.csv = "helly,nerve_leray\n" + std::to_string(h) + "," + std::to_string(l) + "\n";
      if (h > l + 1) rep.exit_code = 3;
    } else if (*suite) {
      const auto out = checks::run_suite(checks::registry().at(check), seed, count, threads);
      std::size_t passed = 0;
      json failures = json::array();
      rep.csv = "index,passed,detail\n";
      for (const auto& o : out) {
        passed += o.passed;
        if (!o.passed) failures.push_back({{"index", o.index}, {"detail", o.detail}});
        rep.csv += std::to_string(o.index) + "," + (o.passed ? "1" : "0") + ",\"" + o.detail + "\"\n";
      }
      rep.data = {{"check", check}, {"seed", seed}, {"count", count}, {"passed", passed}, {"failures", failures}};
      rep.text = check + ": " + std::to_string(passed) + "/" + std::to_string(count) + " passed\n";
      for (const auto& f : failures) rep.text += "  #" + f["index"].dump() + ": " + f["detail"].get<std::string>() + "\n";
      if (passed != count) rep.exit_code = 3;
    }
    emit(opt, rep);
    return rep.exit_code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
