#include "cli/report_json.hpp"

namespace ordlines::cli {

void put_rational(Json& obj, std::string_view key, const Rational& value) {
  obj[std::string(key)] = value.get_str();
  obj[std::string(key) + "_approx"] = value.get_d();
}

Json histogram_json(const std::map<std::size_t, std::size_t>& t) {
  Json h = Json::object();
  for (const auto& [k, count] : t) h[std::to_string(k)] = count;
  return h;
}

Json to_json(const SpanSummary& s) {
  return Json{{"n", s.n},
              {"num_lines", s.num_lines},
              {"ordinary", s.ordinary},
              {"max_collinear", s.max_collinear},
              {"t", histogram_json(s.t)}};
}

Json to_json(const PlaneSummary& s) {
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& [plane, count] : s.plane_counts) ++sizes[count];
  return Json{{"num_planes", s.plane_counts.size()},
              {"max_coplanar", s.max_coplanar},
              {"planes_by_size", histogram_json(sizes)}};
}

Json to_json(const BoundConstants& c) {
  Json j = Json::object();
  put_rational(j, "alpha", c.alpha);
  put_rational(j, "beta", c.beta);
  put_rational(j, "gamma", c.gamma);
  put_rational(j, "alpha0", c.alpha0);
  put_rational(j, "c_alpha0", c.c_alpha0);
  put_rational(j, "mu", c.mu);
  put_rational(j, "nu", c.nu);
  put_rational(j, "gamma_prime_case1", c.gamma_prime_case1);
  put_rational(j, "gamma_prime_case2b", c.gamma_prime_case2b);
  put_rational(j, "d_case1", c.d_case1);
  put_rational(j, "d_case2a", c.d_case2a);
  put_rational(j, "d_case2b", c.d_case2b);
  put_rational(j, "d_alpha", c.d_alpha);
  return j;
}

Json to_json(const ProjectionImage& img) {
  Json groups = Json::array();
  std::size_t unique = 0;
  for (const auto& g : img.groups) {
    groups.push_back(Json{{"image", g.image.to_string()}, {"sources", g.sources}});
    if (g.sources.size() == 1) ++unique;
  }
  return Json{{"center", img.center},
              {"q1_size", img.groups.size()},
              {"q2_size", unique},
              {"groups", std::move(groups)}};
}

Json to_json(const KellyTraceReport& r) {
  Json planes = Json::array();
  for (const auto& p : r.planes) {
    planes.push_back(Json{{"image_line", p.image_line.to_string()},
                          {"plane_points", p.plane_points},
                          {"ordinary_found", p.ordinary_found}});
  }
  Json found = Json::array();
  for (const auto& l : r.found_ordinary) found.push_back(l.to_string());
  return Json{{"center", r.center},   {"q1_size", r.q1_size}, {"q2_size", r.q2_size},
              {"q1_lines", r.q1_lines}, {"l1_size", r.l1_size}, {"planes", std::move(planes)},
              {"found_ordinary", std::move(found)}};
}

Json to_json(const SearchResult& r) {
  Json trace = Json::array();
  for (const auto& t : r.trace) trace.push_back(Json{{"iteration", t.iteration}, {"count", t.count}});
  Json planes = Json::array();
  for (const auto& p : r.plane_stats) {
    planes.push_back(Json{{"plane", p.plane.to_string()},
                          {"points", p.points},
                          {"ordinary_in_plane", p.ordinary_in_plane}});
  }
  Json j{{"n", r.best.size()},
         {"best_count", r.best_count},
         {"initial_count", r.initial_count}};
  put_rational(j, "ratio", r.ratio);
  j["cap"] = r.cap;
  j["max_coplanar"] = r.max_coplanar;
  j["iterations"] = r.iterations;
  j["accepted_moves"] = r.accepted_moves;
  j["trace"] = std::move(trace);
  j["plane_stats"] = std::move(planes);
  return j;
}

Json to_json(const BoroczkyModelSummary& s) {
  return Json{{"m", s.m}, {"n", s.n}, {"ordinary", s.ordinary}, {"t", histogram_json(s.t)}};
}

Json to_json(const SylvesterGallaiReport& r) {
  Json j{{"holds", r.holds}, {"collinear", r.collinear}, {"ordinary", r.ordinary}};
  j["witness"] = r.witness ? Json(r.witness->to_string()) : Json(nullptr);
  return j;
}

Json to_json(const SkewBoundReport& r) {
  return Json{{"n", r.n},     {"on_first", r.on_first}, {"on_second", r.on_second},
              {"lhs", r.lhs}, {"rhs", r.rhs},           {"holds", r.holds}};
}

Json to_json(const AlmostCoplanarReport& r) {
  Json j{{"n", r.n}, {"k", r.k}, {"max_coplanar", r.max_coplanar}, {"count", r.count}};
  put_rational(j, "bound", r.bound);
  j["holds"] = r.holds;
  j["caveat"] = r.caveat;
  return j;
}

Json to_json(const ConcurrentProbe& r) {
  return Json{{"contained_in", r.contained_in},
              {"ordinary_avoiding_apex", r.ordinary_avoiding_apex},
              {"guarantee_applies", r.guarantee_applies},
              {"holds", r.holds}};
}

Json to_json(const SmallLineCounts& r) {
  return Json{{"n", r.n}, {"n_squared", r.n_squared}, {"lines_le3", r.lines_le3},
              {"lines_le4", r.lines_le4}};
}

Json to_json(const BeckReport& r) {
  Json j{{"n", r.n}, {"num_lines", r.num_lines}, {"max_collinear", r.max_collinear}};
  put_rational(j, "ratio_lines", r.ratio_lines);
  put_rational(j, "ratio_collinear", r.ratio_collinear);
  j["beta_hypothesis"] = r.beta_hypothesis;
  j["gamma_reached"] = r.gamma_reached;
  return j;
}

}  // namespace ordlines::cli
