#include "job.hpp"

#include <fstream>

namespace symdyn::cli {

using nlohmann::json;

namespace {

Word parse_word(const json& v) {
  if (v.is_string()) return Word::parse(v.get<std::string>());
  if (v.is_array()) {
    std::vector<Symbol> s;
    for (const auto& x : v) s.push_back(x.get<Symbol>());
    return Word(std::move(s));
  }
  throw JobError("a word is a string of digits/letters or an array of symbols");
}

EventuallyPeriodicPoint parse_point(const json& v) {
  if (v.is_array() && v.size() == 2) return EventuallyPeriodicPoint(parse_word(v[0]), parse_word(v[1]));
  if (v.is_object())
    return EventuallyPeriodicPoint(parse_word(v.value("preperiod", json(""))), parse_word(v.at("period")));
  throw JobError("a point is {preperiod, period} or [preperiod, period]");
}

System parse_system(const json& v) {
  const std::string type = v.at("type").get<std::string>();
  if (type == "full") return FullSystem{v.at("N").get<std::size_t>()};
  if (type == "sft") return SftSystem{DirectedGraph(v.at("adjacency").get<std::vector<std::vector<unsigned>>>())};
  if (type == "sofic") {
    std::vector<LabeledEdge> edges;
    for (const auto& e : v.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw JobError("sofic edges are [source, target, label]");
      edges.push_back({e[0].get<VertexId>(), e[1].get<VertexId>(), e[2].get<Symbol>()});
    }
    return SoficSystem{LabeledGraph(v.at("vertices").get<std::size_t>(), v.at("alphabet").get<std::size_t>(),
                                    std::move(edges))};
  }
  if (type == "sgap") {
    if (v.contains("gaps")) return SgapSystem{GapSet::finite(v.at("gaps").get<std::vector<unsigned>>())};
    return SgapSystem{
        GapSet::eventually_periodic(v.value("preperiod", std::string()), v.at("period").get<std::string>())};
  }
  if (type == "dgap") return DgapSystem{v.at("d").get<unsigned>()};
  throw JobError("unknown system type '" + type + "'");
}

}  // namespace

Job parse_job(const json& j) {
  try {
    if (!j.is_object()) throw JobError("job must be a JSON object");
    Job job;
    job.system = parse_system(j.at("system"));
    if (j.contains("word")) job.words.push_back(parse_word(j["word"]));
    if (j.contains("words"))
      for (const auto& w : j["words"]) job.words.push_back(parse_word(w));
    if (j.contains("u")) job.u = parse_word(j["u"]);
    if (j.contains("w")) job.w = parse_word(j["w"]);
    if (j.contains("candidate")) job.candidate = parse_word(j["candidate"]);
    if (j.contains("family")) job.family = parse_point(j["family"]);
    if (j.contains("points"))
      for (const auto& p : j["points"]) job.points.push_back(parse_point(p));
    if (j.contains("point")) job.points.push_back(parse_point(j["point"]));
    if (j.contains("N")) job.alphabet = j["N"].get<std::size_t>();
    if (j.contains("n_range")) {
      auto r = j["n_range"].get<std::vector<std::size_t>>();
      if (r.size() != 2 || r[0] > r[1]) throw JobError("n_range is [lo, hi]");
      job.n_lo = r[0];
      job.n_hi = r[1];
    }
    if (j.contains("nmax")) job.nmax = j["nmax"].get<std::size_t>();
    if (j.contains("horizon")) job.horizon = j["horizon"].get<std::size_t>();
    if (j.contains("tol")) job.tol = j["tol"].get<double>();
    return job;
  } catch (const json::exception& e) {
    throw JobError(e.what());
  }
}

Job load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JobError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw JobError(path + ": " + e.what());
  }
  return parse_job(j);
}

std::string system_name(const System& s) {
  static const char* names[] = {"full", "sft", "sofic", "sgap", "dgap"};
  return names[s.index()];
}

LabeledGraph presentation(const System& s) {
  if (const auto* f = std::get_if<FullSystem>(&s)) return LabeledGraph::full_shift(f->n);
  if (const auto* a = std::get_if<SftSystem>(&s)) return a->a.edge_presentation();
  if (const auto* g = std::get_if<SoficSystem>(&s)) return g->g;
  if (const auto* g = std::get_if<SgapSystem>(&s)) return sgap_presentation(g->s);
  return dgap_presentation(std::get<DgapSystem>(s).d);
}

}  // namespace symdyn::cli
