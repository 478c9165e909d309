#include "csl/cspcheck.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "csl/polygons.hpp"
#include "csl/rootsys.hpp"

namespace csl {

using nlohmann::json;

bool CSPReport::operator==(const CSPReport& o) const {
  return family == o.family && s == o.s && n_or_a == o.n_or_a && k == o.k &&
         group_order == o.group_order && checks == o.checks &&
         residues == o.residues && orbits == o.orbits &&
         residues_match_orbits == o.residues_match_orbits && pass == o.pass;
}

CSPInstance::CSPInstance(std::string fam, int s_, int n_, int k_,
                         const CyclicComplex* cx, std::vector<Face> fs,
                         QPolynomial poly, std::function<Int(int)> closed)
    : family(std::move(fam)),
      s(s_),
      n_or_a(n_),
      k(k_),
      complex(cx),
      faces(std::move(fs)),
      xq(std::move(poly)),
      closed_form(std::move(closed)) {
  if (complex == nullptr) throw std::invalid_argument("instance needs an action");
  if (xq.value_at_one() != Int(faces.size()))
    throw std::invalid_argument("X(1) does not equal |X|");
}

CSPReport verify(const CSPInstance& inst) {
  CSPReport rep;
  rep.family = inst.family;
  rep.s = inst.s;
  rep.n_or_a = inst.n_or_a;
  rep.k = inst.k;
  const int N = inst.complex->group_order();
  rep.group_order = N;
  rep.pass = true;

  for (int d = 1; d <= N; ++d) {
    if (N % d != 0) continue;
    DivisorCheck chk;
    chk.d = d;
    chk.rhs = Int(inst.complex->fixed_faces(inst.faces, d).size());
    try {
      chk.lhs = eval_at_primitive_root(inst.xq, RootOfUnitySpec(d));
    } catch (const NonConstantRemainder&) {
      chk.lhs = -1;
      chk.pass = false;
      rep.pass = false;
      rep.checks.push_back(std::move(chk));
      continue;
    }
    if (inst.closed_form) chk.lhs_closed = inst.closed_form(d);
    chk.pass = chk.lhs == chk.rhs &&
               (!chk.lhs_closed || *chk.lhs_closed == chk.lhs);
    rep.pass = rep.pass && chk.pass;
    rep.checks.push_back(std::move(chk));
  }

  rep.residues = inst.xq.residues_mod_qn_minus_1(N);
  auto hist = inst.complex->orbit_structure(inst.faces);
  for (auto it = hist.rbegin(); it != hist.rend(); ++it)
    rep.orbits.push_back({it->first, it->second});

  // Residue interpretation: a_k counts the orbits whose stabilizer order
  // divides k (a_0 counts all of them).
  rep.residues_match_orbits = true;
  for (int r = 0; r < N; ++r) {
    Int expect = 0;
    for (const OrbitCount& oc : rep.orbits) {
      const long long stab = N / oc.size;
      if (r % stab == 0) expect += oc.count;
    }
    if (expect != rep.residues[r]) rep.residues_match_orbits = false;
  }
  rep.pass = rep.pass && rep.residues_match_orbits;
  return rep;
}

namespace {

json report_to_json(const CSPReport& r) {
  json j;
  j["family"] = r.family;
  j["s"] = r.s;
  j["n_or_a"] = r.n_or_a;
  j["k"] = r.k;
  j["group_order"] = r.group_order;
  j["checks"] = json::array();
  for (const DivisorCheck& c : r.checks) {
    json jc;
    jc["d"] = c.d;
    jc["lhs"] = c.lhs.str();
    jc["lhs_closed"] = c.lhs_closed ? json(c.lhs_closed->str()) : json(nullptr);
    jc["rhs"] = c.rhs.str();
    jc["pass"] = c.pass;
    j["checks"].push_back(std::move(jc));
  }
  j["residues"] = json::array();
  for (const Int& a : r.residues) j["residues"].push_back(a.str());
  j["orbits"] = json::array();
  for (const OrbitCount& oc : r.orbits)
    j["orbits"].push_back({{"size", oc.size}, {"count", oc.count}});
  j["residues_match_orbits"] = r.residues_match_orbits;
  j["pass"] = r.pass;
  return j;
}

}  // namespace

std::string CSPReport::to_json() const { return report_to_json(*this).dump(2); }

CSPReport CSPReport::from_json(const std::string& text) {
  const json j = json::parse(text);
  CSPReport r;
  r.family = j.at("family").get<std::string>();
  r.s = j.at("s").get<int>();
  r.n_or_a = j.at("n_or_a").get<int>();
  r.k = j.at("k").get<int>();
  r.group_order = j.at("group_order").get<int>();
  for (const json& jc : j.at("checks")) {
    DivisorCheck c;
    c.d = jc.at("d").get<int>();
    c.lhs = Int(jc.at("lhs").get<std::string>());
    if (!jc.at("lhs_closed").is_null())
      c.lhs_closed = Int(jc.at("lhs_closed").get<std::string>());
    c.rhs = Int(jc.at("rhs").get<std::string>());
    c.pass = jc.at("pass").get<bool>();
    r.checks.push_back(std::move(c));
  }
  for (const json& ja : j.at("residues"))
    r.residues.push_back(Int(ja.get<std::string>()));
  for (const json& jo : j.at("orbits"))
    r.orbits.push_back(
        {jo.at("size").get<long long>(), jo.at("count").get<long long>()});
  r.residues_match_orbits = j.at("residues_match_orbits").get<bool>();
  r.pass = j.at("pass").get<bool>();
  return r;
}

std::string CSPReport::orbit_text() const {
  std::ostringstream os;
  for (size_t i = 0; i < orbits.size(); ++i) {
    if (i) os << ", ";
    os << orbits[i].size << "(" << orbits[i].count << ")";
  }
  return os.str();
}

std::string CSPReport::to_text() const {
  std::ostringstream os;
  os << family << " s=" << s << " "
     << (family == "I2" ? "a=" : "n=") << n_or_a << " k=" << k
     << " group=Z" << group_order << "\n";
  os << "  d | X(w_d) | closed | fixed | ok\n";
  for (const DivisorCheck& c : checks) {
    os << "  " << c.d << " | " << c.lhs.str() << " | "
       << (c.lhs_closed ? c.lhs_closed->str() : std::string("-")) << " | "
       << c.rhs.str() << " | " << (c.pass ? "yes" : "NO") << "\n";
  }
  os << "  residues mod q^" << group_order << "-1: ";
  for (size_t i = 0; i < residues.size(); ++i)
    os << (i ? "," : "") << residues[i].str();
  os << "\n  orbits: " << orbit_text() << "\n";
  os << "  residue/orbit interpretation: "
     << (residues_match_orbits ? "yes" : "NO") << "\n";
  os << "  verdict: " << (pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

CSPReport verify_polygon(const ComplexType& t, int k, int threads) {
  auto closed = [t, k](int d) {
    return closed_form_eval(t, k, RootOfUnitySpec(d));
  };
  switch (t.family) {
    case Family::A: {
      PolygonA model(t.s, t.n);
      CSPInstance inst(family_name(t.family), t.s, t.n, k, &model.complex(),
                       model.faces(k, threads), face_poly(t, k), closed);
      return verify(inst);
    }
    case Family::B: {
      PolygonB model(t.s, t.n);
      CSPInstance inst(family_name(t.family), t.s, t.n, k, &model.complex(),
                       model.faces(k, threads), face_poly(t, k), closed);
      return verify(inst);
    }
    case Family::D: {
      PolygonD model(t.s, t.n);
      CSPInstance inst(family_name(t.family), t.s, t.n, k, &model.complex(),
                       model.faces(k, threads), face_poly(t, k), closed);
      return verify(inst);
    }
    case Family::I2: {
      I2Model model(t.s, t.n);
      CSPInstance inst(family_name(t.family), t.s, t.n, k, &model.complex(),
                       model.faces(k, threads), face_poly(t, k), closed);
      return verify(inst);
    }
  }
  throw std::logic_error("bad family");
}

CSPReport verify_facets_catalan(const std::string& type, int rank_or_param,
                                int s, int threads) {
  if (type == "A" || type == "B" || type == "D" || type == "I2") {
    // Polygon models; for A the catalan polynomial of rank n-1 equals the
    // top face polynomial of the (sn+2)-gon model.
    const Family fam = family_from_string(type);
    const ComplexType t(fam, rank_or_param, s);
    const int k = t.max_k();
    CSPReport rep = verify_polygon(t, k, threads);
    // The facet polynomial must agree with Cat^(s).
    const std::string datum_type = type == "I2" ? "I2" : type;
    const int datum_rank =
        fam == Family::A ? rank_or_param - 1 : rank_or_param;
    const QPolynomial cat = q_catalan(coxeter_datum(datum_type, datum_rank), s);
    if (!(cat == face_poly(t, k)))
      throw std::logic_error("facet polynomial differs from Cat^(s)");
    return rep;
  }
  if (s != 1)
    throw std::invalid_argument(
        "exceptional types are verified for s = 1 only");
  RootComplex rc(type, 0, 1);
  const int rank = rc.root_system().rank;
  CSPInstance inst(type, 1, rank, rank, &rc.complex(),
                   rc.faces(rank, threads),
                   q_catalan(rc.root_system().datum, 1));
  return verify(inst);
}

}  // namespace csl
