// Command-line front end: batch verification of the sieving triples,
// face enumeration, orbit reports, bijection images, evaluation tables,
// the exceptional reference table and Catalan residues.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "csl/cspcheck.hpp"
#include "csl/exceptional_ref.hpp"
#include "csl/polygons.hpp"
#include "csl/rootsys.hpp"

namespace {

using namespace csl;

struct CommonArgs {
  std::string family;
  int s = 1;
  int n = 0;
  int k = 0;
  std::string format = "text";
  std::string out;
  int threads = static_cast<int>(std::thread::hardware_concurrency());
};

bool is_exceptional(const std::string& f) {
  return f == "E6" || f == "E7" || f == "E8" || f == "F4" || f == "H3" ||
         f == "H4";
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open output file: " + out);
    os << text;
  }
}

int run_verify(const CommonArgs& a) {
  CSPReport rep;
  if (is_exceptional(a.family)) {
    RootComplex rc(a.family, 0, a.s);
    const int rank = rc.root_system().rank;
    if (a.k != rank)
      throw std::runtime_error(
          "exceptional verification needs k = rank (facets); use `orbits` "
          "for lower faces");
    rep = verify_facets_catalan(a.family, rank, a.s, a.threads);
  } else {
    ComplexType t(family_from_string(a.family), a.n, a.s);
    rep = verify_polygon(t, a.k, a.threads);
  }
  emit(a.format == "json" ? rep.to_json() : rep.to_text(), a.out);
  return rep.pass ? 0 : 1;
}

int run_enumerate(const CommonArgs& a) {
  std::ostringstream os;
  const Family fam = family_from_string(a.family);
  switch (fam) {
    case Family::A: {
      PolygonA model(a.s, a.n);
      for (const Face& f : model.faces(a.k, a.threads))
        os << model.serialize(f) << "\n";
      break;
    }
    case Family::B: {
      PolygonB model(a.s, a.n);
      for (const Face& f : model.faces(a.k, a.threads))
        os << model.serialize(f) << "\n";
      break;
    }
    case Family::D: {
      PolygonD model(a.s, a.n);
      for (const Face& f : model.faces(a.k, a.threads))
        os << model.serialize(f) << "\n";
      break;
    }
    case Family::I2: {
      I2Model model(a.s, a.n);
      for (const Face& f : model.faces(a.k, a.threads))
        os << model.serialize(f) << "\n";
      break;
    }
  }
  emit(os.str(), a.out);
  return 0;
}

std::map<long long, long long> orbit_map(const CyclicComplex& cx,
                                         const std::vector<Face>& faces) {
  return cx.orbit_structure(faces);
}

int run_orbits(const CommonArgs& a) {
  std::map<long long, long long> hist;
  if (is_exceptional(a.family)) {
    RootComplex rc(a.family, 0, a.s);
    hist = rc.orbit_structure(a.k, a.threads);
  } else {
    const Family fam = family_from_string(a.family);
    switch (fam) {
      case Family::A: {
        PolygonA m(a.s, a.n);
        hist = orbit_map(m.complex(), m.faces(a.k, a.threads));
        break;
      }
      case Family::B: {
        PolygonB m(a.s, a.n);
        hist = orbit_map(m.complex(), m.faces(a.k, a.threads));
        break;
      }
      case Family::D: {
        PolygonD m(a.s, a.n);
        hist = orbit_map(m.complex(), m.faces(a.k, a.threads));
        break;
      }
      case Family::I2: {
        I2Model m(a.s, a.n);
        hist = orbit_map(m.complex(), m.faces(a.k, a.threads));
        break;
      }
    }
  }
  std::ostringstream os;
  if (a.format == "json") {
    os << "[";
    bool first = true;
    for (auto it = hist.rbegin(); it != hist.rend(); ++it) {
      if (!first) os << ",";
      os << "{\"size\":" << it->first << ",\"count\":" << it->second << "}";
      first = false;
    }
    os << "]";
  } else {
    bool first = true;
    for (auto it = hist.rbegin(); it != hist.rend(); ++it) {
      if (!first) os << ", ";
      os << it->first << "(" << it->second << ")";
      first = false;
    }
  }
  emit(os.str(), a.out);
  return 0;
}

std::string image_text(const BijectionImage& img) {
  std::ostringstream os;
  os << "mu=(";
  for (size_t i = 0; i < img.mu.size(); ++i)
    os << (i ? "," : "") << img.mu[i];
  os << ") nu=(";
  for (size_t i = 0; i < img.nu.size(); ++i)
    os << (i ? "," : "") << img.nu[i];
  os << ")";
  return os.str();
}

int run_bijection(const CommonArgs& a, int d, const std::string& dclass,
                  int index) {
  std::ostringstream os;
  bool all_ok = true;
  int row = 0;
  const Family fam = family_from_string(a.family);
  if (fam == Family::A) {
    PolygonA model(a.s, a.n);
    for (const DissectionA& x : fixed_a(a.s, a.n, a.k, d)) {
      if (index >= 0 && row++ != index) continue;
      BijectionImage img = bijection_a(x, a.s, a.n, d);
      const bool ok = bijection_a_inverse(img, a.s, a.n, d) == x;
      all_ok = all_ok && ok;
      os << model.serialize(model.face_of(x)) << "  " << image_text(img)
         << "  roundtrip=" << (ok ? "ok" : "FAIL") << "\n";
    }
  } else if (fam == Family::B) {
    PolygonB model(a.s, a.n);
    const int t = d;
    for (const FaceB& x : fixed_b(a.s, a.n, a.k, 2 * t)) {
      if (index >= 0 && row++ != index) continue;
      BijectionImage img = bijection_b(x, a.s, a.n, t);
      const bool ok = bijection_b_inverse(img, a.s, a.n, t) == x;
      all_ok = all_ok && ok;
      os << model.serialize(model.face_of(x)) << "  " << image_text(img)
         << "  roundtrip=" << (ok ? "ok" : "FAIL") << "\n";
    }
  } else if (fam == Family::D) {
    PolygonD model(a.s, a.n);
    const int t = d;
    const int want = dclass == "t0" ? 0 : 1;
    for (const FaceD& x : fixed_d(a.s, a.n, a.k, 2 * t)) {
      if (t_class(x) != want) continue;
      if (index >= 0 && row++ != index) continue;
      BijectionImage img = want == 0 ? bijection_d_t0(x, a.s, a.n, t)
                                     : bijection_d_t1(x, a.s, a.n, t);
      const FaceD back = want == 0 ? bijection_d_t0_inverse(img, a.s, a.n, t)
                                   : bijection_d_t1_inverse(img, a.s, a.n, t);
      const bool ok = back == x;
      all_ok = all_ok && ok;
      os << model.serialize(model.face_of(x)) << "  " << image_text(img)
         << "  roundtrip=" << (ok ? "ok" : "FAIL") << "\n";
    }
  } else {
    throw std::runtime_error("bijections exist for families A, B, D");
  }
  emit(os.str(), a.out);
  return all_ok ? 0 : 1;
}

int run_evaluate(const CommonArgs& a) {
  ComplexType t(family_from_string(a.family), a.n, a.s);
  const QPolynomial xq = face_poly(t, a.k);
  const int N = t.group_order();
  std::ostringstream os;
  for (int d = 1; d <= N; ++d) {
    if (N % d != 0) continue;
    os << "d=" << d << " X(w_d)="
       << eval_at_primitive_root(xq, RootOfUnitySpec(d)).str() << " closed="
       << closed_form_eval(t, a.k, RootOfUnitySpec(d)).str() << "\n";
  }
  emit(os.str(), a.out);
  return 0;
}

int run_table13(const std::string& type, int max_k, bool full,
                const CommonArgs& a) {
  const auto& ref = exceptional_orbit_reference();
  auto it = ref.find(type);
  if (it == ref.end()) throw std::runtime_error("unknown table type: " + type);
  RootComplex rc(type, 0, 1);
  const int rank = rc.root_system().rank;
  int upto = rank;
  if (type == "E8" && !full) upto = std::min(rank, max_k);
  std::ostringstream os;
  bool all_ok = true;
  for (int k = 1; k <= upto; ++k) {
    auto hist = rc.orbit_structure(k, a.threads);
    std::vector<OrbitCount> got;
    for (auto h = hist.rbegin(); h != hist.rend(); ++h)
      got.push_back({h->first, h->second});
    const std::vector<OrbitCount>& want = it->second[k - 1];
    const bool ok = got.size() == want.size() &&
                    std::equal(got.begin(), got.end(), want.begin(),
                               [](const OrbitCount& x, const OrbitCount& y) {
                                 return x == y;
                               });
    all_ok = all_ok && ok;
    os << type << " k=" << k << ": ";
    for (size_t i = 0; i < got.size(); ++i)
      os << (i ? ", " : "") << got[i].size << "(" << got[i].count << ")";
    os << "  [" << (ok ? "pass" : "FAIL") << "]\n";
  }
  emit(os.str(), a.out);
  return all_ok ? 0 : 1;
}

int run_catalan(const std::string& type, int n, int s, const CommonArgs& a) {
  CoxeterDatum datum;
  if (type == "A" || type == "B" || type == "D" || type == "I2")
    datum = coxeter_datum(type, n);
  else
    datum = coxeter_datum(type);
  const QPolynomial cat = q_catalan(datum, s);
  const int N = s * datum.h + 2;
  std::ostringstream os;
  os << "Cat^(" << s << ")(" << type;
  if (type == "A" || type == "B" || type == "D")
    os << n;
  else if (type == "I2")
    os << "(" << n << ")";
  os << ", q) mod q^" << N << "-1: ";
  const std::vector<Int> res = cat.residues_mod_qn_minus_1(N);
  for (size_t i = 0; i < res.size(); ++i)
    os << (i ? "," : "") << res[i].str();
  os << "\n";
  emit(os.str(), a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized cluster complex sieving laboratory"};
  app.require_subcommand(1);
  CommonArgs a;

  auto add_common = [&](CLI::App* cmd, bool family, bool k) {
    if (family)
      cmd->add_option("--family", a.family, "A, B, D, I2 or E6..H4")
          ->required();
    cmd->add_option("--s", a.s, "Fuss parameter");
    cmd->add_option("--n,--a", a.n, "rank parameter (a for I2)");
    if (k) cmd->add_option("--k", a.k, "face size");
    cmd->add_option("--format", a.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", a.out, "output path (default stdout)");
    cmd->add_option("--threads", a.threads, "worker threads");
  };

  auto* verify = app.add_subcommand("verify", "check one sieving triple");
  add_common(verify, true, true);

  auto* enumerate = app.add_subcommand("enumerate", "list the k-faces");
  add_common(enumerate, true, true);

  auto* orbits = app.add_subcommand("orbits", "orbit structure of the k-faces");
  add_common(orbits, true, true);

  auto* bijection =
      app.add_subcommand("bijection", "images of the fixed faces");
  add_common(bijection, true, true);
  int bij_d = 2;
  std::string bij_class = "t1";
  int bij_index = -1;
  bijection->add_option("--d,--t", bij_d,
                        "rotation order (d for A, t for B and D)");
  bijection->add_option("--class", bij_class, "t0 or t1 (type D)")
      ->check(CLI::IsMember({"t0", "t1"}));
  bijection->add_option("--index", bij_index, "single face index");

  auto* evaluate =
      app.add_subcommand("evaluate", "face polynomial at the roots of unity");
  add_common(evaluate, true, true);

  auto* table13 = app.add_subcommand("table13", "exceptional orbit table");
  std::string tb_type;
  int tb_maxk = 6;
  bool tb_full = false;
  table13->add_option("--type", tb_type, "E6, E7, E8, F4, H3 or H4")
      ->required();
  table13->add_option("--max-k", tb_maxk, "E8 row cutoff (default 6)");
  table13->add_flag("--full", tb_full, "include the long E8 rows");
  add_common(table13, false, false);

  auto* catalan = app.add_subcommand("catalan", "Catalan residues");
  std::string cat_type;
  catalan->add_option("--type", cat_type, "A, B, D, I2 or E6..H4")->required();
  add_common(catalan, false, false);

  CLI11_PARSE(app, argc, argv);
  try {
    if (verify->parsed()) return run_verify(a);
    if (enumerate->parsed()) return run_enumerate(a);
    if (orbits->parsed()) return run_orbits(a);
    if (bijection->parsed()) return run_bijection(a, bij_d, bij_class, bij_index);
    if (evaluate->parsed()) return run_evaluate(a);
    if (table13->parsed()) return run_table13(tb_type, tb_maxk, tb_full, a);
    if (catalan->parsed()) return run_catalan(cat_type, a.n, a.s, a);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
