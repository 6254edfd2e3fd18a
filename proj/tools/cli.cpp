#include "cli.hpp"

#include "sc2/corpus.hpp"
#include "sc2/cyclic.hpp"
#include "sc2/decide.hpp"
#include "sc2/io.hpp"
#include "sc2/obstructions.hpp"
#include "sc2/realize.hpp"
#include "sc2/regular_rep.hpp"
#include "sc2/splitting.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <thread>

namespace sc2::cli {

namespace {

int exit_for(Status s) {
  switch (s) {
    case Status::Embeddable: return kAffirmative;
    case Status::NotEmbeddable: return kNegative;
    case Status::Inconclusive: break;
  }
  return kInconclusive;
}

int affirm(bool b) { return b ? kAffirmative : kNegative; }

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> parse_dims(const std::string& s) {
  std::vector<int> d;
  for (const auto& x : split_list(s)) {
    try {
      d.push_back(std::stoi(x));
    } catch (const std::exception&) {
      throw InputError("bad dimension '" + x + "'");
    }
  }
  if (d.size() != 3 || std::any_of(d.begin(), d.end(), [](int x) { return x < 1 || x > 12; }))
    throw InputError("--dims expects three integers in 1..12, e.g. 4,2,1");
  return d;
}

AnMode parse_mode(const std::string& s) {
  if (s == "adjusted") return AnMode::Adjusted;
  if (s == "literal") return AnMode::Literal;
  if (s == "unidentified") return AnMode::Unidentified;
  throw InputError("unknown --mode '" + s + "' (adjusted|literal|unidentified)");
}

Field parse_field_flag(const std::string& s) {
  if (s == "Q") return Field::rationals();
  if (s == "F2") return Field::prime(2);
  if (s == "F3") return Field::prime(3);
  if (s.size() > 1 && s[0] == 'F') {
    int p = 0;
    try {
      p = std::stoi(s.substr(1));
    } catch (const std::exception&) {
    }
    bool prime = p >= 2;
    for (int d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (prime) return Field::prime(p);
  }
  throw InputError("unknown field '" + s + "' (Q or F<p>)");
}

std::vector<LazyStep> parse_lazy_order(const std::string& s) {
  std::vector<LazyStep> order;
  for (const auto& item : split_list(s)) {
    auto at = item.rfind('@');
    if (at == std::string::npos || at == 0 || at + 1 == item.size())
      throw InputError("lazy steps are written edge@vertex, got '" + item + "'");
    order.push_back({item.substr(0, at), item.substr(at + 1)});
  }
  return order;
}

void emit(std::ostream& out, const Json& j, const std::string& path) {
  if (path.empty())
    out << j.dump(2) << '\n';
  else
    write_json_file(path, j);
}

struct ScanRow {
  std::string a, b;
  Status status = Status::Inconclusive;
  std::string reason;
};

std::vector<ScanRow> scan_grid_pairs(const Complex2& grid, const std::vector<std::pair<std::string, std::string>>& pairs,
                                     unsigned jobs) {
  DecideOptions opts;
  opts.simply_connected_asserted = true;
  std::vector<ScanRow> rows(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < pairs.size();) {
      Verdict v = decide_embeddability(identify_edge_pair(grid, pairs[i].first, pairs[i].second), opts);
      rows[i] = {pairs[i].first, pairs[i].second, v.status, v.reason};
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Embeddability of 2-complexes in 3-space via dual matroids over F_3", "sc2"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  std::string output;
  app.add_option("--jobs,-j", jobs, "Worker threads for scans")->check(CLI::Range(1u, 256u));
  app.add_option("--output,-o", output, "Write the JSON report to this file instead of stdout");

  // dual-matroid
  auto* dm = app.add_subcommand("dual-matroid", "Dual matroid of a complex");
  std::string dm_file, dm_field = "F3";
  dm->add_option("FILE", dm_file)->required();
  dm->add_option("--field", dm_field, "Q or F<p> (default F3)");

  // link
  auto* lk = app.add_subcommand("link", "Link graph at a vertex and its dual matroid");
  std::string lk_file, lk_vertex;
  lk->add_option("FILE", lk_file)->required();
  lk->add_option("--vertex", lk_vertex)->required();

  // split
  auto* sp = app.add_subcommand("split", "Vertical, edge, full or lazy splitting");
  std::string sp_file, sp_lazy;
  bool sp_vertical = false, sp_edge = false, sp_full = false, sp_all_lazy = false;
  sp->add_option("FILE", sp_file)->required();
  auto* g_vertical = sp->add_flag("--vertical", sp_vertical);
  auto* g_edge = sp->add_flag("--edge", sp_edge);
  auto* g_full = sp->add_flag("--full", sp_full);
  auto* g_lazy = sp->add_option("--lazy", sp_lazy, "Comma-separated edge@vertex steps");
  auto* g_all = sp->add_flag("--all-lazy", sp_all_lazy, "Every lazy edge split complex up to isomorphism");
  g_vertical->excludes(g_edge, g_full, g_lazy, g_all);
  g_edge->excludes(g_full, g_lazy, g_all);
  g_full->excludes(g_lazy, g_all);
  g_lazy->excludes(g_all);

  // check
  auto* ck = app.add_subcommand("check", "Test one property of a complex");
  std::string ck_file, ck_what, ck_cert;
  ck->add_option("FILE", ck_file)->required();
  ck->add_option("--what", ck_what)
      ->required()
      ->check(CLI::IsMember({"local", "nullhomologous", "g3c", "locally-connected", "certificate"}));
  ck->add_option("--certificate", ck_cert, "Certificate JSON for --what certificate");

  // embed
  auto* em = app.add_subcommand("embed", "Decide embeddability");
  std::string em_file, em_dir;
  bool em_sc = false, em_whitney = false;
  em->add_option("FILE", em_file)->required();
  em->add_flag("--assert-simply-connected", em_sc, "Caller asserts the complex is simply connected");
  em->add_flag("--whitney", em_whitney, "Only the Whitney-type decision on the split complex");
  em->add_option("--certificate-dir", em_dir, "Write rotation, dual graph and certificate files here");

  // gen
  auto* gn = app.add_subcommand("gen", "Generate a corpus complex");
  std::string gn_name, gn_mode = "adjusted", gn_dims = "4,2,1", gn_pair;
  int gn_n = 4;
  std::uint32_t gn_seed = 1;
  gn->add_option("NAME", gn_name)
      ->required()
      ->check(CLI::IsMember({"an", "grid", "cone-k5", "cone", "tetrahedron", "octahedron", "appendix-a", "two-hub",
                             "two-wheels", "torus", "random"}));
  gn->add_option("--n", gn_n, "Family parameter")->check(CLI::Range(3, 12));
  gn->add_option("--mode", gn_mode, "adjusted|literal|unidentified (an)");
  gn->add_option("--dims", gn_dims, "a,b,c (grid)");
  gn->add_option("--pair", gn_pair, "e1,e2: identify two grid edges");
  gn->add_option("--seed", gn_seed, "Seed (random)");

  // verify
  auto* vf = app.add_subcommand("verify", "Exhaustive fact checks");
  std::string vf_what;
  int vf_n = 5;
  vf->add_option("WHAT", vf_what)->required()->check(CLI::IsMember({"an", "cyclic"}));
  vf->add_option("--n", vf_n)->required()->check(CLI::Range(3, 9));

  // regular-rep
  auto* rr = app.add_subcommand("regular-rep", "Regular representation and total unimodularity");
  std::string rr_file;
  rr->add_option("MATRIX", rr_file)->required();

  // realize
  auto* rz = app.add_subcommand("realize", "Graph realizations of a matroid");
  std::string rz_file;
  bool rz_all = false;
  rz->add_option("MATROID", rz_file)->required();
  rz->add_flag("--all", rz_all, "Enumerate all realizations");

  // scan
  auto* sc = app.add_subcommand("scan", "Edge-pair identification scan of a grid complex");
  std::string sc_dims = "4,2,1";
  sc->add_option("--dims", sc_dims, "a,b,c");

  std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    if (*dm) {
      Complex2 c = complex_from_json(read_json_file(dm_file));
      emit(out, to_json(dual_matroid(c, parse_field_flag(dm_field))), output);
      return kAffirmative;
    }
    if (*lk) {
      Complex2 c = complex_from_json(read_json_file(lk_file));
      int v = c.vertex_index(lk_vertex);
      Json j = to_json(link_graph(c, v), c);
      j["dual_matroid"] = to_json(link_dual_matroid(c, v));
      emit(out, j, output);
      return kAffirmative;
    }
    if (*sp) {
      Complex2 c = complex_from_json(read_json_file(sp_file));
      if (sp_all_lazy) {
        Json list = Json::array();
        for (const auto& r : all_lazy_edge_splits(c)) list.push_back(to_json(r));
        Json j{{"format", kFormat}, {"lazy_split_complexes", list}};
        emit(out, j, output);
        return kAffirmative;
      }
      if (!sp_lazy.empty()) {
        std::vector<LazyStep> used;
        SplitResult r = lazy_edge_split(c, parse_lazy_order(sp_lazy), &used);
        Json j = to_json(r);
        Json steps = Json::array();
        for (const auto& s : used) steps.push_back(s.edge + "@" + s.vertex);
        j["steps"] = steps;
        emit(out, j, output);
        return kAffirmative;
      }
      SplitResult r = sp_vertical ? vertical_split(c) : sp_edge ? edge_split_complex(c) : split_complex(c);
      emit(out, to_json(r), output);
      return kAffirmative;
    }
    if (*ck) {
      Complex2 c = complex_from_json(read_json_file(ck_file));
      Json j{{"format", kFormat}, {"property", ck_what}};
      bool holds = false;
      if (ck_what == "local") {
        auto r = is_local(c);
        holds = r.local;
        j["failing_vertices"] = r.failing_vertices;
      } else if (ck_what == "nullhomologous") {
        auto r = homology_check(c);
        holds = r.nullhomologous;
        j["h1_free_rank"] = r.h1_free_rank;
        Json t = Json::array();
        for (const auto& x : r.h1_torsion) t.push_back(x.str());
        j["h1_torsion"] = t;
      } else if (ck_what == "g3c") {
        Matroid m = dual_matroid(c);
        std::optional<Multigraph> g;
        if (m.size() > 16) {
          auto rs = realize_graph(m, RealizeMode::First);
          if (!rs.empty()) g = rs.front().graph;
        }
        holds = (m.size() <= 16 || g) && globally_3connected(m, g ? &*g : nullptr);
      } else if (ck_what == "locally-connected") {
        auto r = local_connectivity_profile(c);
        holds = r.locally_connected;
        j["locally_2connected"] = r.locally_2connected;
        j["locally_3connected"] = r.locally_3connected;
        Json bad = Json::array();
        for (const auto& v : r.vertices)
          if (!v.connected) bad.push_back(v.vertex);
        j["disconnected_links"] = bad;
      } else {
        if (ck_cert.empty()) throw InputError("--what certificate needs --certificate FILE");
        Json cj = read_json_file(ck_cert);
        if (cj.contains("certificate")) cj = cj["certificate"];
        auto r = check_certificate(c, certificate_from_json(cj));
        holds = r.valid;
        if (!r.valid) j["failure"] = r.failure;
      }
      j["holds"] = holds;
      emit(out, j, output);
      return affirm(holds);
    }
    if (*em) {
      Complex2 c = complex_from_json(read_json_file(em_file));
      DecideOptions opts;
      opts.simply_connected_asserted = em_sc;
      Verdict v = em_whitney ? decide_whitney(c, opts) : decide_embeddability(c, opts);
      Json j = to_json(v);
      if (!em_dir.empty() && v.certificate) {
        std::filesystem::create_directories(em_dir);
        const std::filesystem::path dir(em_dir);
        write_json_file((dir / "rotation.json").string(), to_json(v.certificate->complex, v.certificate->rotation));
        write_json_file((dir / "dual_graph.json").string(), dual_graph_to_json(v.certificate->dual_graph));
        write_json_file((dir / "certificate.json").string(), j["certificate"]);
        j["certificate_files"] = {(dir / "rotation.json").string(), (dir / "dual_graph.json").string(),
                                  (dir / "certificate.json").string()};
      }
      emit(out, j, output);
      return exit_for(v.status);
    }
    if (*gn) {
      Complex2 c;
      if (gn_name == "an") {
        c = generate_An(gn_n, parse_mode(gn_mode));
      } else if (gn_name == "grid") {
        auto d = parse_dims(gn_dims);
        c = grid_complex(d[0], d[1], d[2]);
        if (!gn_pair.empty()) {
          auto p = split_list(gn_pair);
          if (p.size() != 2) throw InputError("--pair expects e1,e2");
          c = identify_edge_pair(c, p[0], p[1]);
        }
      } else if (gn_name == "cone-k5") {
        c = cone_over_complete_graph(5);
      } else if (gn_name == "cone") {
        c = cone_over_complete_graph(gn_n);
      } else if (gn_name == "tetrahedron") {
        c = tetrahedron();
      } else if (gn_name == "octahedron") {
        c = octahedron();
      } else if (gn_name == "appendix-a" || gn_name == "two-hub") {
        c = two_hub_complex();
      } else if (gn_name == "two-wheels") {
        c = two_wheels_complex();
      } else if (gn_name == "torus") {
        c = torus();
      } else {
        c = random_complex(gn_seed);
      }
      emit(out, to_json(c), output);
      return kAffirmative;
    }
    if (*vf) {
      if (vf_what == "an") {
        if (vf_n > 8) throw InputError("verify an supports 3 <= n <= 8");
        AnFactsReport r = verify_An_facts(vf_n);
        emit(out, to_json(r), output);
        return affirm(r.all_pass);
      }
      Json j{{"format", kFormat}, {"n", vf_n}};
      bool ok = true;
      auto record = [&](const char* name, LemmaCheck r) {
        j[name] = {{"cases", r.cases}, {"failures", r.failures}};
        ok = ok && r.failures == 0;
      };
      record("interval_lemma", verify_interval_lemma(vf_n));
      record("improving_lemma", verify_improving_lemma(vf_n));
      j["all_pass"] = ok;
      emit(out, j, output);
      return affirm(ok);
    }
    if (*rr) {
      IntegerMatrix a = matrix_from_json(read_json_file(rr_file));
      RegularityReport r = is_regular_representation(a);
      Json j{{"format", kFormat}, {"regular", r.regular}, {"spans_integer_lattice", spans_integer_lattice(a)},
             {"hadamard_bound", hadamard_bound(a).str()}};
      if (!r.regular) j["failure"] = r.failure;
      j["totally_unimodular"] = is_totally_unimodular(a);
      if (r.regular) {
        if (r.matroid) j["matroid"] = to_json(*r.matroid);
        Json cv = Json::array();
        for (const auto& row : cocircuit_vectors(a)) {
          Json x = Json::array();
          for (const auto& e : row) x.push_back(e.str());
          cv.push_back(x);
        }
        j["cocircuit_vectors"] = cv;
      }
      emit(out, j, output);
      return affirm(r.regular);
    }
    if (*rz) {
      Matroid m = matroid_from_json(read_json_file(rz_file));
      auto rs = realize_graph(m, rz_all ? RealizeMode::All : RealizeMode::First);
      Json list = Json::array();
      for (const auto& r : rs) {
        Json g = graph_to_json(r.graph);
        g["components"] = r.components;
        list.push_back(g);
      }
      Json j{{"format", kFormat}, {"graphic", !rs.empty()}, {"realizations", list}};
      emit(out, j, output);
      return affirm(!rs.empty());
    }
    if (*sc) {
      auto d = parse_dims(sc_dims);
      Complex2 grid = grid_complex(d[0], d[1], d[2]);
      DecideOptions opts;
      opts.simply_connected_asserted = true;
      Verdict base = decide_embeddability(grid, opts);
      EdgePairScan pairs = grid_edge_pairs(grid);
      auto rows = scan_grid_pairs(grid, pairs.pairs, jobs);
      Json all = Json::array(), negative = Json::array(), skipped = Json::array();
      for (const auto& r : rows) {
        all.push_back({{"pair", {r.a, r.b}}, {"status", to_string(r.status)}, {"reason", r.reason}});
        if (r.status == Status::NotEmbeddable) negative.push_back({r.a, r.b});
      }
      for (const auto& [a, b] : pairs.skipped) skipped.push_back({a, b});
      Json j{{"format", kFormat}, {"dims", d}, {"unidentified", to_string(base.status)}, {"pairs", all},
             {"not_embeddable", negative}, {"skipped", skipped}};
      emit(out, j, output);
      return affirm(base.status == Status::Embeddable && !negative.empty());
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const SizeGuardError& e) {
    err << "input too large: " << e.what() << '\n';
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
  err << app.help();
  return kInputError;
}

}  // namespace sc2::cli
