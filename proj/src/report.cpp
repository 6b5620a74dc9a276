#include "reeslab/report.hpp"

#include <sstream>

#include "json.hpp"
#include "reeslab/errors.hpp"

namespace reeslab {

using json = nlohmann::ordered_json;

namespace {

json index_list(const std::vector<Index>& v) {
  json a = json::array();
  for (const Index& i : v) a.push_back({i.alpha, i.n});
  return a;
}

std::vector<Index> parse_index_list(const json& a) {
  std::vector<Index> v;
  for (const json& e : a) v.push_back({e.at(0).get<int64_t>(), e.at(1).get<int64_t>()});
  return v;
}

json terms_json(const Terms& t) {
  json a = json::array();
  for (const auto& [at, c] : t) a.push_back({at.alpha, at.n, to_string(c)});
  return a;
}

Terms parse_terms(const json& a) {
  Terms t;
  for (const json& e : a) t.emplace(Index{e.at(0).get<int64_t>(), e.at(1).get<int64_t>()}, parse_rat(e.at(2).get<std::string>()));
  return t;
}

json opt_rat(const std::optional<Rat>& q) { return q ? json(to_string(*q)) : json(nullptr); }

json triangle_json(const NormalizedTriangle& t, const PeriodData& pd) {
  json v = json::array();
  for (const Point& p : t.vertices) v.push_back({to_string(p.x), to_string(p.y)});
  return json{{"vertices", v},
              {"x1", to_string(t.x1)},
              {"x2", to_string(t.x2)},
              {"W", to_string(t.W)},
              {"ubar", to_string(t.ubar)},
              {"sbar", opt_rat(t.sbar)},
              {"tbar", opt_rat(t.tbar)},
              {"s2", t.s2},
              {"s3", t.s3},
              {"t", t.t},
              {"t3", t.t3},
              {"u2", t.u2},
              {"u", t.u},
              {"sigma", pd.sigma},
              {"theta", pd.theta},
              {"theta_prime", pd.theta_prime}};
}

json cohom_json(const CohomReport& r) {
  return json{{"m", r.m},
              {"l", r.l},
              {"char", r.characteristic},
              {"overlaps", index_list(r.overlaps)},
              {"gaps", index_list(r.gaps)},
              {"rank", r.rank},
              {"h0", r.h0},
              {"h1", r.h1},
              {"chi", r.chi},
              {"chi_independent", r.chi_independent},
              {"consistent", r.consistent},
              {"pivot_gaps", index_list(r.pivot_gaps)},
              {"policy", policy_name(r.policy)},
              {"slack", r.slack}};
}

OverlapPolicy parse_policy(const std::string& s) {
  if (s == "A") return OverlapPolicy::A;
  if (s == "B") return OverlapPolicy::B;
  throw ParseError("unknown policy '" + s + "'");
}

CohomReport parse_cohom(const json& j) {
  CohomReport r;
  r.m = j.at("m").get<int64_t>();
  r.l = j.at("l").get<int64_t>();
  r.characteristic = j.at("char").get<uint64_t>();
  r.overlaps = parse_index_list(j.at("overlaps"));
  r.gaps = parse_index_list(j.at("gaps"));
  r.rank = j.at("rank").get<int64_t>();
  r.h0 = j.at("h0").get<int64_t>();
  r.h1 = j.at("h1").get<int64_t>();
  r.chi = j.at("chi").get<int64_t>();
  r.chi_independent = j.at("chi_independent").get<int64_t>();
  r.consistent = j.at("consistent").get<bool>();
  r.pivot_gaps = parse_index_list(j.at("pivot_gaps"));
  r.policy = parse_policy(j.at("policy").get<std::string>());
  r.slack = j.at("slack").get<int64_t>();
  return r;
}

json factor_json(const FactorizationOutcome& f) {
  return json{{"m", f.m},
              {"char", f.characteristic},
              {"success", f.success},
              {"obstruction_level", f.obstruction_level},
              {"obstruction", terms_json(f.obstruction)},
              {"branches_explored", f.branches_explored},
              {"unit_a", f.unit_a ? terms_json(f.unit_a->terms()) : json(nullptr)},
              {"unit_b", f.unit_b ? terms_json(f.unit_b->terms()) : json(nullptr)}};
}

FactorizationOutcome parse_factor(const json& j, const NormalizedTriangle& tri) {
  FactorizationOutcome f;
  f.m = j.at("m").get<int64_t>();
  f.characteristic = j.at("char").get<uint64_t>();
  f.success = j.at("success").get<bool>();
  f.obstruction_level = j.at("obstruction_level").get<int64_t>();
  f.obstruction = parse_terms(j.at("obstruction"));
  f.branches_explored = j.at("branches_explored").get<int64_t>();
  const AlgebraContext ctx{tri.u2, tri.u, Field(f.characteristic), f.m * tri.u};
  if (!j.at("unit_a").is_null()) f.unit_a = Element(ctx, parse_terms(j.at("unit_a")));
  if (!j.at("unit_b").is_null()) f.unit_b = Element(ctx, parse_terms(j.at("unit_b")));
  return f;
}

json verdict_json(const Verdict& v) {
  json witness = nullptr;
  if (v.witness) {
    const Witness& w = *v.witness;
    if (w.kind == "A4")
      witness = json{{"kind", w.kind}, {"m", w.m}};
    else
      witness = json{{"kind", w.kind}, {"r", w.r}, {"j", w.j}, {"h0", w.h0}};
  }
  json emu = nullptr;
  if (v.emu)
    emu = json{{"holds", v.emu->holds},
               {"column_counts", v.emu->column_counts},
               {"sorted", v.emu->sorted},
               {"b2", v.b2 ? json(*v.b2) : json(nullptr)}};
  json probes = json::array();
  for (const Probe& p : v.probes) {
    if (auto* c = std::get_if<CohomProbe>(&p)) {
      json j{{"type", "cohomology"}, {"r", c->r}, {"j", c->j}};
      j.update(cohom_json(c->report));
      probes.push_back(j);
    } else {
      json j{{"type", "factorization"}};
      j.update(factor_json(std::get<FactorizationOutcome>(p)));
      probes.push_back(j);
    }
  }
  const SearchBounds& b = v.bounds;
  return json{{"triangle", triangle_json(v.triangle, v.period)},
              {"char", v.characteristic},
              {"verdict", status_name(v.status)},
              {"witness", witness},
              {"emu", emu},
              {"probes", probes},
              {"bounds",
               {{"r_max", b.r_max},
                {"j_max", b.j_max},
                {"m_max", b.m_max},
                {"branch_budget", b.branch_budget},
                {"slack", b.slack},
                {"policy", policy_name(b.policy)}}},
              {"note", v.note},
              {"version", kVersion}};
}

}  // namespace

std::string to_json(const Verdict& v) { return verdict_json(v).dump(2) + "\n"; }
std::string to_json(const CohomReport& r) { return cohom_json(r).dump(2) + "\n"; }
std::string to_json(const FactorizationOutcome& f) { return factor_json(f).dump(2) + "\n"; }

Verdict verdict_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    Verdict v;
    const json& t = j.at("triangle");
    std::array<Point, 3> verts;
    for (int i = 0; i < 3; ++i)
      verts[i] = Point{parse_rat(t.at("vertices").at(i).at(0).get<std::string>()),
                       parse_rat(t.at("vertices").at(i).at(1).get<std::string>())};
    v.triangle = normalize_triangle(verts);
    v.period = period_data(v.triangle);
    v.characteristic = j.at("char").get<uint64_t>();
    v.status = parse_status(j.at("verdict").get<std::string>());
    if (const json& w = j.at("witness"); !w.is_null()) {
      Witness wt;
      wt.kind = w.at("kind").get<std::string>();
      if (wt.kind == "A4") {
        wt.m = w.at("m").get<int64_t>();
      } else {
        wt.r = w.at("r").get<int64_t>();
        wt.j = w.at("j").get<int64_t>();
        wt.h0 = w.at("h0").get<int64_t>();
      }
      v.witness = wt;
    }
    if (const json& e = j.at("emu"); !e.is_null()) {
      EmuResult er;
      er.holds = e.at("holds").get<bool>();
      er.column_counts = e.at("column_counts").get<std::vector<int64_t>>();
      er.sorted = e.at("sorted").get<std::vector<int64_t>>();
      v.emu = er;
      if (!e.at("b2").is_null()) v.b2 = e.at("b2").get<bool>();
    }
    for (const json& p : j.at("probes")) {
      const std::string type = p.at("type").get<std::string>();
      if (type == "cohomology")
        v.probes.push_back(CohomProbe{p.at("r").get<int64_t>(), p.at("j").get<int64_t>(), parse_cohom(p)});
      else if (type == "factorization")
        v.probes.push_back(parse_factor(p, v.triangle));
      else
        throw ParseError("unknown probe type '" + type + "'");
    }
    const json& b = j.at("bounds");
    v.bounds.r_max = b.at("r_max").get<int64_t>();
    v.bounds.j_max = b.at("j_max").get<int64_t>();
    v.bounds.m_max = b.at("m_max").get<int64_t>();
    v.bounds.branch_budget = b.at("branch_budget").get<int64_t>();
    v.bounds.slack = b.at("slack").get<int64_t>();
    v.bounds.policy = parse_policy(b.at("policy").get<std::string>());
    v.note = j.at("note").get<std::string>();
    return v;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string points(const std::vector<Index>& v) {
  std::string s;
  for (const Index& i : v) s += (s.empty() ? "" : " ") + ("(" + std::to_string(i.alpha) + "," + std::to_string(i.n) + ")");
  return s.empty() ? "-" : s;
}

}  // namespace

std::string to_text(const CohomReport& r) {
  std::ostringstream o;
  o << "window [" << r.m << "," << r.l << ") char " << r.characteristic << " policy " << policy_name(r.policy)
    << " slack " << r.slack << "\n"
    << "  overlaps " << r.overlaps.size() << "  gaps " << r.gaps.size() << "  rank " << r.rank << "\n"
    << "  h0 " << r.h0 << "  h1 " << r.h1 << "  chi " << r.chi << " (level sum " << r.chi_independent << ")\n"
    << "  pivot gaps " << points(r.pivot_gaps) << "\n";
  return o.str();
}

std::string to_text(const FactorizationOutcome& f) {
  std::ostringstream o;
  o << "xi^" << f.m << " char " << f.characteristic << ": " << (f.success ? "factors" : "no factorization")
    << " (branches " << f.branches_explored << ")\n";
  if (!f.success && f.obstruction_level >= 0) {
    o << "  obstruction at level " << f.obstruction_level << ":";
    for (const auto& [at, c] : f.obstruction) o << " " << to_string(c) << "*x(" << at.alpha << "," << at.n << ")";
    o << "\n";
  }
  if (f.unit_a) o << "  unit_a terms " << f.unit_a->terms().size() << "  unit_b terms " << f.unit_b->terms().size() << "\n";
  return o.str();
}

std::string to_text(const Verdict& v) {
  std::ostringstream o;
  o << "triangle W=" << to_string(v.triangle.W) << " ubar=" << to_string(v.triangle.ubar) << " sigma=" << v.period.sigma
    << " theta=" << v.period.theta << " theta'=" << v.period.theta_prime << "\n";
  o << "char " << v.characteristic << ": " << status_name(v.status);
  if (v.witness) {
    const Witness& w = *v.witness;
    if (w.kind == "A4")
      o << " [A4 m=" << w.m << "]";
    else
      o << " [" << w.kind << " r=" << w.r << " j=" << w.j << " h0=" << w.h0 << "]";
  }
  o << "\n";
  if (v.emu) {
    o << "EMU " << (v.emu->holds ? "holds" : "fails") << ", column counts";
    for (int64_t c : v.emu->column_counts) o << " " << c;
    if (v.b2) o << "; unit factorization at m=1 " << (*v.b2 ? "succeeds" : "fails");
    o << "\n";
  }
  for (const Probe& p : v.probes) {
    if (auto* c = std::get_if<CohomProbe>(&p))
      o << "probe r=" << c->r << " j=" << c->j << ": h0=" << c->report.h0 << " h1=" << c->report.h1
        << " rank=" << c->report.rank << " on [" << c->report.m << "," << c->report.l << ")\n";
    else {
      const auto& f = std::get<FactorizationOutcome>(p);
      o << "probe m=" << f.m << ": " << (f.success ? "factors" : "obstructed at level " + std::to_string(f.obstruction_level))
        << "\n";
    }
  }
  if (!v.note.empty()) o << v.note << "\n";
  return o.str();
}

std::string scan_table(const std::vector<ScanRow>& rows) {
  std::ostringstream o;
  o << "g\tverdict\twitness\n";
  for (const ScanRow& r : rows) {
    o << to_string(r.g) << "\t";
    if (!r.verdict) {
      o << "ERROR\t" << r.error << "\n";
      continue;
    }
    o << status_name(r.verdict->status) << "\t";
    if (const auto& w = r.verdict->witness)
      o << w->kind << (w->kind == "A4" ? " m=" + std::to_string(w->m) : " r=" + std::to_string(w->r) + " j=" + std::to_string(w->j));
    else
      o << "-";
    o << "\n";
  }
  return o.str();
}

}  // namespace reeslab
