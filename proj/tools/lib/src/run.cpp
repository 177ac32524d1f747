#include "eqpos_app/run.hpp"

#include <chrono>
#include <sstream>

#include "eqpos/errors.hpp"
#include "eqpos/wonderful.hpp"

namespace eqpos::app {
namespace {

OrderedJson witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return OrderedJson{{"curve", w->curve}, {"degree", w->degree}};
}

OrderedJson verdict_json(const std::string& op, const Verdict& v, bool tagged) {
  OrderedJson out{{"op", op}, {"verdict", v.holds}, {"witness", witness_json(v.witness)}};
  if (tagged) {
    out["gkm"] = v.gkm_ok;
    out["tag"] = v.tag();
  }
  return out;
}

const BundleExpr& require_bundle(const ProblemFile& p, const std::string& op) {
  if (!p.bundle) throw InvalidInput("bundle: required for the '" + op + "' query");
  return *p.bundle;
}

std::string query_path(std::size_t k) { return "queries[" + std::to_string(k) + "]"; }

GalleryPoint parse_point(const BsdhVariety& z, const Json& j, const std::string& path) {
  if (!j.is_string()) throw InvalidInput(path + ": expected a bit string");
  const auto x = GalleryPoint::parse(j.get<std::string>());
  if (static_cast<int>(x.bits.size()) != z.length())
    throw InvalidInput(path + ": bit string length " + std::to_string(x.bits.size()) + " differs from word length " +
                       std::to_string(z.length()));
  return x;
}

OrderedJson seshadri_point_json(const SeshadriValue& s, const std::string& point) {
  return OrderedJson{{"point", point}, {"seshadri", s.value}, {"attained_on", s.attained_on}};
}

OrderedJson run_bsdh_query(const ProblemFile& p, const BsdhVariety& z, const GkmReport& gkm, const Query& q,
                           std::size_t k) {
  if (q.op == "nef") return verdict_json(q.op, nef_test(z, require_bundle(p, q.op), gkm), true);
  if (q.op == "ample") return verdict_json(q.op, ample_test(z, require_bundle(p, q.op), gkm), true);
  if (q.op == "seshadri") {
    const auto& e = require_bundle(p, q.op);
    if (z.length() == 0) throw InvalidInput("word: seshadri is undefined for the empty word");
    if (q.point) {
      const auto x = parse_point(z, *q.point, query_path(k) + ".point");
      const auto s = seshadri(z, e, x, gkm);
      return OrderedJson{{"op", q.op},          {"point", x.to_string()}, {"seshadri", s.value},
                         {"attained_on", s.attained_on}, {"gkm", s.gkm_ok},         {"tag", s.tag()}};
    }
    OrderedJson points = OrderedJson::array();
    std::optional<std::int64_t> least;
    for (const auto& x : fixed_points(z)) {
      const auto s = seshadri(z, e, x, gkm);
      points.push_back(seshadri_point_json(s, x.to_string()));
      if (!least || s.value < *least) least = s.value;
    }
    return OrderedJson{{"op", q.op}, {"points", points}, {"min", *least}, {"gkm", gkm.ok},
                       {"tag", gkm.ok ? kGkmVerifiedTag : kModelCurveTag}};
  }
  if (q.op == "curves") {
    OrderedJson curves = OrderedJson::array();
    const auto list = q.point ? curves_through(z, parse_point(z, *q.point, query_path(k) + ".point")) : model_curves(z);
    for (const auto& c : list) {
      OrderedJson entry{{"id", c.id()},
                        {"slot", c.slot + 1},
                        {"endpoints", {c.endpoint(false).to_string(), c.endpoint(true).to_string()}},
                        {"tangent_weight", to_std(tangent_weight(z, c).coords)},
                        {"basis_degrees", basis_degrees(z, c)}};
      if (p.bundle) entry["split_type"] = restrict(z, *p.bundle, c).degrees();
      curves.push_back(std::move(entry));
    }
    return OrderedJson{{"op", q.op}, {"count", curves.size()}, {"curves", curves}, {"gkm", gkm.ok}};
  }
  // gkm-graph
  return OrderedJson{{"op", q.op},
                     {"vertices", std::int64_t{1} << z.length()},
                     {"edges", static_cast<std::int64_t>(model_curves(z).size())},
                     {"gkm", gkm.ok},
                     {"dot", export_gkm_dot(z)}};
}

WeylElement parse_weyl_point(const RootSystem& rs, const std::optional<Json>& j, const std::string& path) {
  if (!j) return WeylElement::identity(rs);
  return WeylElement::from_word(rs, parse_word(*j, rs.rank(), path));
}

OrderedJson run_wonderful_query(const ProblemFile& p, const SymmetricSpaceData& sd, const Query& q, std::size_t k) {
  if (q.op == "nef") return verdict_json(q.op, nef_test_w(sd, require_bundle(p, q.op)), false);
  if (q.op == "ample") return verdict_json(q.op, ample_test_w(sd, require_bundle(p, q.op)), false);
  if (q.op == "seshadri") {
    const auto w = parse_weyl_point(sd.rs, q.point, query_path(k) + ".point");
    const auto s = seshadri_w(sd, require_bundle(p, q.op), w);
    return OrderedJson{{"op", q.op}, {"point", word_to_json(w.word())}, {"seshadri", s.value}, {"attained_on", s.attained_on}};
  }
  if (q.op == "curves") {
    const auto report = minimal_rank_report(sd);
    const auto w = parse_weyl_point(sd.rs, q.point, query_path(k) + ".point");
    OrderedJson classes = OrderedJson::array();
    for (const auto& c : curves_through(sd, w)) {
      OrderedJson entry{{"id", c.id()},
                        {"label", c.label()},
                        {"kind", c.kind == WonderfulCurveClass::Kind::kSchubert ? "schubert" : "restricted"},
                        {"root", to_std(c.root.coords)}};
      if (p.bundle) entry["split_type"] = restrict(sd, *p.bundle, c).degrees();
      classes.push_back(std::move(entry));
    }
    OrderedJson restricted = OrderedJson::array();
    for (const auto& g : sd.restricted_roots) restricted.push_back(to_std(g.coords));
    return OrderedJson{{"op", q.op},
                       {"rank_g", report.rank_g},
                       {"rank_g_mod_h", report.rank_g_mod_h},
                       {"candidate_rank_h", report.candidate_rank_h},
                       {"levi_span_rank", report.levi_span_rank},
                       {"levi_span_matches_t1", report.levi_span_matches_t1},
                       {"degenerate", report.degenerate},
                       {"restricted_roots", restricted},
                       {"count", classes.size()},
                       {"classes", classes}};
  }
  throw InvalidInput(query_path(k) + ".op: '" + q.op + "' is only available in bsdh mode");
}

template <typename Fn>
OrderedJson timed(bool enabled, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  auto out = fn();
  if (enabled) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    out["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  return out;
}

}  // namespace

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return 2;
    case ErrorKind::kGuard: return 3;
    case ErrorKind::kConsistency: return 4;
    case ErrorKind::kNotNef: return 5;
  }
  return 1;
}

OrderedJson error_json(const std::string& kind, int code, const std::string& message) {
  return OrderedJson{{"error", {{"kind", kind}, {"exit_code", code}, {"message", message}}}};
}

OrderedJson describe(const std::string& type) {
  const auto rs = RootSystem::build(type);
  OrderedJson cartan = OrderedJson::array();
  for (int i = 0; i < rs.rank(); ++i) {
    std::vector<std::int64_t> row;
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan()(i, j));
    cartan.push_back(row);
  }
  OrderedJson roots = OrderedJson::array();
  for (const auto& b : rs.positive_roots())
    roots.push_back({{"root", to_std(b.coords)}, {"coroot", to_std(coroot(rs, b).coords)}, {"length2", rs.squared_length(b)}});
  OrderedJson out{{"type", to_string(rs.type())},
                  {"rank", rs.rank()},
                  {"cartan", cartan},
                  {"positive_root_count", rs.positive_roots().size()},
                  {"positive_roots", roots}};
  out["weyl_order"] = rs.rank() <= kMaxEnumerationRank ? OrderedJson(enumerate_weyl(rs).size()) : OrderedJson(nullptr);
  return out;
}

BsdhVariety variety_of(const ProblemFile& problem) {
  return BsdhVariety::build(RootSystem::build(problem.root_system), problem.word);
}

OrderedJson run(const ProblemFile& p, const RunOptions& options) {
  OrderedJson doc{{"root_system", p.root_system}};
  OrderedJson results = OrderedJson::array();
  if (p.mode == Mode::kBsdh) {
    const auto z = variety_of(p);
    if (p.bundle) validate_bundle(z, *p.bundle);
    const auto gkm = gkm_check(z);
    OrderedJson collisions = OrderedJson::array();
    for (const auto& c : gkm.collisions)
      collisions.push_back({{"point", c.point.to_string()}, {"slots", {c.slot_a + 1, c.slot_b + 1}}});
    doc["mode"] = "bsdh";
    doc["word"] = word_to_json(p.word);
    doc["gkm"] = {{"ok", gkm.ok}, {"collisions", collisions}};
    for (std::size_t k = 0; k < p.queries.size(); ++k)
      results.push_back(timed(options.timing, [&] { return run_bsdh_query(p, z, gkm, p.queries[k], k); }));
  } else {
    const auto rs = RootSystem::build(p.root_system);
    const auto sd = validate_involution(rs, parse_involution(p.involution, rs));
    if (p.bundle) validate_table(sd, *p.bundle);
    doc["mode"] = "wonderful";
    doc["involution"] = p.involution;
    if (sd.degenerate()) doc["warning"] = "not a symmetric space of positive rank";
    for (std::size_t k = 0; k < p.queries.size(); ++k)
      results.push_back(timed(options.timing, [&] { return run_wonderful_query(p, sd, p.queries[k], k); }));
  }
  doc["results"] = results;
  return doc;
}

std::string render_text(const OrderedJson& doc) {
  std::ostringstream out;
  if (doc.contains("warning")) out << "warning: " << doc["warning"].get<std::string>() << "\n";
  for (const auto& r : doc["results"]) {
    const auto op = r["op"].get<std::string>();
    const std::string tag = r.contains("tag") ? " [" + r["tag"].get<std::string>() + "]" : "";
    if (op == "nef" || op == "ample") {
      out << op << ": " << (r["verdict"].get<bool>() ? "true" : "false");
      if (!r["witness"].is_null())
        out << " (witness " << r["witness"]["curve"].get<std::string>() << ", degree " << r["witness"]["degree"] << ")";
      out << tag << "\n";
    } else if (op == "seshadri") {
      if (r.contains("points")) {
        for (const auto& pt : r["points"])
          out << "seshadri at " << pt["point"].get<std::string>() << ": " << pt["seshadri"] << " (on "
              << pt["attained_on"].get<std::string>() << ")\n";
        out << "seshadri min: " << r["min"] << tag << "\n";
      } else {
        const auto& pt = r["point"];
        out << "seshadri at " << (pt.is_string() ? pt.get<std::string>() : pt.dump()) << ": " << r["seshadri"] << " (on "
            << r["attained_on"].get<std::string>() << ")" << tag << "\n";
      }
    } else if (op == "curves" && r.contains("curves")) {
      out << "curves: " << r["count"] << "\n";
      for (const auto& c : r["curves"]) {
        out << "  " << c["id"].get<std::string>() << "  slot " << c["slot"] << "  weight " << c["tangent_weight"].dump()
            << "  degrees " << c["basis_degrees"].dump();
        if (c.contains("split_type")) out << "  split " << c["split_type"].dump();
        out << "\n";
      }
    } else if (op == "curves") {
      out << "rank(G) " << r["rank_g"] << ", rank(G/H) " << r["rank_g_mod_h"] << ", candidate rank(H) "
          << r["candidate_rank_h"] << "\n";
      out << "classes: " << r["count"] << "\n";
      for (const auto& c : r["classes"]) {
        out << "  " << c["label"].get<std::string>() << "  " << c["kind"].get<std::string>();
        if (c.contains("split_type")) out << "  split " << c["split_type"].dump();
        out << "\n";
      }
    } else {
      out << r["dot"].get<std::string>();
    }
  }
  return out.str();
}

}  // namespace eqpos::app
