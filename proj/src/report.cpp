#include "extri/report.hpp"

#include <cstdio>
#include <sstream>

namespace extri::report {

namespace {

Json label_list(const Context& ctx, const Subcat& s) {
  Json out = Json::array();
  for (int m : s.members()) out.push_back(ctx.label(m));
  return out;
}

Json multiset_json(const Context& ctx, const Multiset& m) {
  Json out = Json::object();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) out[ctx.label(static_cast<int>(i))] = m[i];
  return out;
}

Json dimension_json(int d) { return d == kUnbounded ? Json("unbounded") : Json(d); }

std::string dimension_text(int d) { return d == kUnbounded ? "unbounded" : std::to_string(d); }

const char* mark(bool pass) { return pass ? "pass" : "FAIL"; }

std::string ambient_labels(const Ambient& amb, const std::vector<int>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + amb.object(idx[i]).label;
  return s + "}";
}

}  // namespace

std::string hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json context_header(const Context& ctx) {
  Json j;
  j["context_id"] = hex(ctx.id_hash());
  j["algebra_hash"] = hex(ctx.ambient().algebra()->hash());
  j["kind"] = ctx.kind_name();
  j["ambient"] = ctx.ambient().name();
  j["field"] = ctx.ambient().algebra()->p();
  j["objects"] = ctx.size();
  return j;
}

std::string labels(const Context& ctx, const Subcat& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members().size(); ++i) out += (i ? ", " : "") + ctx.label(s.members()[i]);
  return out + "}";
}

std::string multiset_text(const Context& ctx, const Multiset& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (m[i] > 1) out += std::to_string(m[i]) + "*";
    out += ctx.label(static_cast<int>(i));
  }
  return out.empty() ? "0" : out;
}

// ---- objects ----------------------------------------------------------------

Json objects(const Context& ctx) {
  Subcat proj(ctx.size(), ctx.projectives()), inj(ctx.size(), ctx.injectives());
  Json rows = Json::array();
  for (int i = 0; i < static_cast<int>(ctx.size()); ++i) {
    const auto& o = ctx.ambient().object(ctx.ambient_index(i));
    Json r;
    r["label"] = o.label;
    r["aliases"] = o.aliases;
    r["dims"] = o.module.dims;
    r["projective"] = proj.contains(i);
    r["injective"] = inj.contains(i);
    rows.push_back(std::move(r));
  }
  Json j;
  j["objects"] = std::move(rows);
  j["enough_projectives"] = ctx.enough_projectives();
  j["enough_injectives"] = ctx.enough_injectives();
  return j;
}

std::string objects_text(const Context& ctx) {
  Subcat proj(ctx.size(), ctx.projectives()), inj(ctx.size(), ctx.injectives());
  std::ostringstream os;
  for (int i = 0; i < static_cast<int>(ctx.size()); ++i) {
    const auto& o = ctx.ambient().object(ctx.ambient_index(i));
    std::string dims;
    for (std::size_t k = 0; k < o.module.dims.size(); ++k) dims += (k ? "," : "") + std::to_string(o.module.dims[k]);
    std::string marks = std::string(proj.contains(i) ? "P" : "-") + (inj.contains(i) ? "I" : "-");
    os << marks << "  " << o.label;
    for (std::size_t pad = o.label.size(); pad < 10; ++pad) os << ' ';
    os << " [" << dims << "]";
    if (!o.aliases.empty()) {
      os << "  aka";
      for (const auto& a : o.aliases) os << ' ' << a;
    }
    os << '\n';
  }
  if (!ctx.enough_projectives())
    os << "not enough projectives: no deflation onto " << ctx.label(ctx.missing_projective()) << '\n';
  if (!ctx.enough_injectives())
    os << "not enough injectives: no inflation from " << ctx.label(ctx.missing_injective()) << '\n';
  return os.str();
}

// ---- ext tables ---------------------------------------------------------------

Json ext_tables(const Context& ctx, int kmax) {
  Json j;
  Json lab = Json::array();
  for (int i = 0; i < static_cast<int>(ctx.size()); ++i) lab.push_back(ctx.label(i));
  j["labels"] = std::move(lab);
  Json tables = Json::array();
  for (int k = 1; k <= kmax; ++k) {
    Json t;
    t["k"] = k;
    Json rows = Json::array();
    for (int a = 0; a < static_cast<int>(ctx.size()); ++a) {
      Json row = Json::array();
      for (int b = 0; b < static_cast<int>(ctx.size()); ++b) row.push_back(ctx.e_k(k, a, b));
      rows.push_back(std::move(row));
    }
    t["rows"] = std::move(rows);
    tables.push_back(std::move(t));
  }
  j["tables"] = std::move(tables);
  return j;
}

std::string ext_tables_text(const Context& ctx, int kmax) {
  std::ostringstream os;
  std::size_t width = 2;
  for (int i = 0; i < static_cast<int>(ctx.size()); ++i) width = std::max(width, ctx.label(i).size());
  auto cell = [&](const std::string& s) {
    os << ' ' << s;
    for (std::size_t pad = s.size(); pad < width; ++pad) os << ' ';
  };
  for (int k = 1; k <= kmax; ++k) {
    os << "E^" << k << "(row, column)\n";
    cell("");
    for (int b = 0; b < static_cast<int>(ctx.size()); ++b) cell(ctx.label(b));
    os << '\n';
    for (int a = 0; a < static_cast<int>(ctx.size()); ++a) {
      cell(ctx.label(a));
      for (int b = 0; b < static_cast<int>(ctx.size()); ++b) {
        std::size_t e = ctx.e_k(k, a, b);
        cell(e ? std::to_string(e) : ".");
      }
      os << '\n';
    }
    if (k < kmax) os << '\n';
  }
  return os.str();
}

// ---- verdicts -----------------------------------------------------------------

Json verdict(const Context& ctx, const Verdict& v) {
  Json j;
  j["kind"] = v.kind;
  j[v.kind == "cluster-tilting" ? "degree" : "n"] = v.n;
  j["x"] = label_list(ctx, v.x);
  if (v.kind != "cluster-tilting") j["y"] = label_list(ctx, v.y);
  j["pass"] = v.pass;
  j["used_fallback"] = v.used_fallback;
  Json clauses = Json::array();
  for (const auto& c : v.clauses) {
    Json cj;
    cj["clause"] = c.clause;
    cj["pass"] = c.pass;
    cj["basis"] = c.basis;
    if (c.witness) {
      Json w;
      w["witness_object"] = ctx.label(c.witness->object);
      if (c.witness->partner >= 0) w["partner"] = ctx.label(c.witness->partner);
      w["degree"] = c.witness->degree;
      w["detail"] = c.witness->detail;
      cj["witness"] = std::move(w);
    } else {
      cj["witness"] = nullptr;
    }
    if (!c.conflations.empty()) {
      Json list = Json::array();
      for (const auto& r : c.conflations) {
        Json rj;
        rj["object"] = ctx.label(r.object);
        rj["middle"] = multiset_json(ctx, r.middle);
        rj["third"] = multiset_json(ctx, r.third);
        rj["dimension"] = dimension_json(r.dimension);
        rj["fallback"] = r.fallback;
        list.push_back(std::move(rj));
      }
      cj["conflation"] = std::move(list);
    }
    clauses.push_back(std::move(cj));
  }
  j["clauses"] = std::move(clauses);
  return j;
}

std::string verdict_text(const Context& ctx, const Verdict& v) {
  std::ostringstream os;
  os << v.kind << (v.kind == "cluster-tilting" ? " degree " : " n = ") << v.n << "  X = " << labels(ctx, v.x);
  if (v.kind != "cluster-tilting") os << "  Y = " << labels(ctx, v.y);
  os << "  " << (v.pass ? "PASS" : "FAIL") << (v.used_fallback ? " (exhaustive fallback used)" : "") << '\n';
  for (const auto& c : v.clauses) {
    os << "  " << c.clause;
    for (std::size_t pad = c.clause.size(); pad < 24; ++pad) os << ' ';
    os << mark(c.pass);
    if (c.basis != "checked") os << " (" << c.basis << ")";
    if (c.witness) os << "  witness " << ctx.label(c.witness->object) << ": " << c.witness->detail;
    os << '\n';
    const bool left = c.clause == "deflation_resolution";
    for (const auto& r : c.conflations) {
      os << "    " << ctx.label(r.object) << ": ";
      if (left) {
        os << multiset_text(ctx, r.third) << " -> " << multiset_text(ctx, r.middle) << " -> " << ctx.label(r.object);
      } else {
        os << ctx.label(r.object) << " -> " << multiset_text(ctx, r.middle) << " -> " << multiset_text(ctx, r.third);
      }
      os << "  (" << (left ? "resdim " : "coresdim ") << dimension_text(r.dimension) << (r.fallback ? ", fallback" : "")
         << ")\n";
    }
  }
  return os.str();
}

// ---- theorem ------------------------------------------------------------------

Json theorem(const Context& ctx, const TheoremReport& r) {
  Json j;
  j["n"] = r.n;
  Json ct = Json::array(), cot = Json::array();
  for (const auto& s : r.cluster_tilting) ct.push_back(label_list(ctx, s));
  for (const auto& s : r.cotorsion) cot.push_back(label_list(ctx, s));
  j["cluster_tilting"] = std::move(ct);
  j["cotorsion"] = std::move(cot);
  j["equal"] = r.equal;
  Json vs = Json::array();
  for (const auto& v : r.verdicts) vs.push_back(verdict(ctx, v));
  j["verdicts"] = std::move(vs);
  return j;
}

std::string theorem_text(const Context& ctx, const TheoremReport& r) {
  std::ostringstream os;
  os << "n = " << r.n << ": " << r.cluster_tilting.size() << " subcategories are " << r.n + 1
     << "-cluster tilting, " << r.cotorsion.size() << " give " << r.n << "-cotorsion pairs (X, X)\n";
  os << "  cluster tilting:";
  if (r.cluster_tilting.empty()) os << " none";
  for (const auto& s : r.cluster_tilting) os << ' ' << labels(ctx, s);
  os << "\n  cotorsion:      ";
  if (r.cotorsion.empty()) os << " none";
  for (const auto& s : r.cotorsion) os << ' ' << labels(ctx, s);
  os << "\n  " << (r.equal ? "sets agree" : "MISMATCH between the two sets") << '\n';
  if (!r.equal)
    for (const auto& v : r.verdicts) os << verdict_text(ctx, v);
  return os.str();
}

// ---- subcategory search -------------------------------------------------------

Json search(const AmbientPtr& ambient, const SubcontextSearchReport& r) {
  Json j;
  j["complements_examined"] = r.complements_examined;
  j["generator_sets_examined"] = r.generator_sets_examined;
  j["extension_closed"] = r.closed;
  j["with_enough_projectives_and_injectives"] = r.with_enough;
  j["size_compatible"] = r.size_compatible;
  j["frontier"] = r.frontier;
  Json hist = Json::object();
  for (auto [k, v] : r.forced_sizes) hist[std::to_string(k)] = v;
  j["projective_injective_sizes"] = std::move(hist);
  Json hits = Json::array();
  for (const auto& h : r.hits) {
    Context ctx = Context::sub(ambient, h.members);
    Json hj;
    hj["origin"] = h.origin;
    Json mem = Json::array(), x = Json::array();
    for (int m : h.members) mem.push_back(ambient->object(m).label);
    for (int m : h.x) x.push_back(ambient->object(m).label);
    hj["subcategory"] = std::move(mem);
    hj["x"] = std::move(x);
    hj["cluster_tilting"] = verdict(ctx, h.cluster_tilting);
    hj["cotorsion"] = verdict(ctx, h.cotorsion);
    hj["theorem_checked"] = h.theorem_checked;
    hj["theorem_concurs"] = h.theorem_equal;
    hits.push_back(std::move(hj));
  }
  j["hits"] = std::move(hits);
  return j;
}

std::string search_text(const AmbientPtr& ambient, const SubcontextSearchReport& r) {
  std::ostringstream os;
  os << "examined " << r.complements_examined << " complements (up to " << r.frontier << " removed objects) and "
     << r.generator_sets_examined << " generator sets\n";
  os << r.closed << " extension-closed subcategories, " << r.with_enough
     << " with enough projectives and injectives, " << r.size_compatible << " with |P u I| within the target size\n";
  if (r.hits.empty()) {
    os << "no hits; frontier: all complements of at most " << r.frontier << " objects\n";
    return os.str();
  }
  os << r.hits.size() << " hits\n";
  for (const auto& h : r.hits) {
    os << "  C = " << ambient_labels(*ambient, h.members) << " (" << h.members.size() << " objects, " << h.origin
       << ")\n    X = " << ambient_labels(*ambient, h.x) << "  cluster tilting " << mark(h.cluster_tilting.pass)
       << ", cotorsion " << mark(h.cotorsion.pass);
    if (h.theorem_checked) os << ", theorem " << (h.theorem_equal ? "concurs" : "DISAGREES");
    os << '\n';
  }
  return os.str();
}

}  // namespace extri::report
