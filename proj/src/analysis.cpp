#include "rmon/analysis.hpp"

#include <chrono>
#include <sstream>

#include "rmon/json_io.hpp"

namespace rmon {

AnalysisReport analyze(const Monoid& m) {
  auto t0 = std::chrono::steady_clock::now();
  AnalysisReport rep;
  rep.monoid = m;
  rep.validation = validate(m);
  if (rep.validation.ok()) {
    rep.classes = r_classes(m);
    rep.r_trivial = is_r_trivial(m);
    rep.almost_r_trivial = is_almost_r_trivial(m);
    rep.x = x_of(m);
    rep.x_linear = is_linear(rep.x->poset);
    rep.x_strong_witness = strongness_witness(rep.x->poset);
    try {
      rep.y = y_of(m);
      rep.pi = check_pi_max(*rep.y, rep.x->poset);
      rep.maximal = maximal_elements(rep.y->poset);
      rep.default_chain = default_maximal_chain(*rep.y);
    } catch (const std::runtime_error& e) {
      rep.y_note = e.what();
    }
    rep.ramsey = decide_ramsey(m);
  }
  rep.ms_total = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return rep;
}

std::string render_text(const AnalysisReport& rep) {
  std::ostringstream os;
  const Monoid& m = rep.monoid;
  os << m.name << ": " << m.size << " element" << (m.size == 1 ? "" : "s") << "\n";
  if (!rep.validation.ok()) {
    os << "  INVALID: " << rep.validation.summary() << "\n";
    return os.str();
  }
  os << "  R-classes (" << rep.classes.size() << "):";
  for (const auto& cls : rep.classes) {
    os << " {";
    for (size_t i = 0; i < cls.size(); ++i) os << (i ? "," : "") << m.label(cls[i]);
    os << "}";
  }
  os << "\n  R-trivial: " << (rep.r_trivial ? "yes" : "no")
     << ", almost R-trivial: " << (rep.almost_r_trivial ? "yes" : "no") << "\n";
  const ActedPoset& xp = rep.x->poset;
  os << "  X: " << xp.points() << " point" << (xp.points() == 1 ? "" : "s") << ", "
     << (rep.x_linear ? "linear" : "not linear") << ", covers:";
  auto covers = cover_edges(xp);
  if (covers.empty()) os << " (none)";
  for (auto [u, v] : covers) {
    os << " " << xp.point_labels[u] << "<" << xp.point_labels[v];
  }
  os << "\n";
  if (rep.x_strong_witness) {
    os << "  X action NOT strong at point " << xp.point_labels[rep.x_strong_witness->point]
       << " under " << m.label(rep.x_strong_witness->elem) << ": "
       << rep.x_strong_witness->detail << "\n";
  }
  if (rep.y) {
    const ChainForest& y = *rep.y;
    os << "  Y: " << y.poset.points() << " chains, max = {";
    for (size_t i = 0; i < rep.maximal.size(); ++i) {
      os << (i ? ", " : "") << y.poset.point_labels[rep.maximal[i]];
    }
    os << "}, designated " << y.poset.point_labels[rep.default_chain] << "\n";
    os << "  pi_max epimorphism: " << (rep.pi.ok ? "ok" : rep.pi.detail) << "\n";
  } else {
    os << "  Y: skipped (" << rep.y_note << ")\n";
  }
  os << "  Ramsey: " << to_string(rep.ramsey->verdict);
  if (rep.ramsey->witness) {
    os << " [" << m.label(rep.ramsey->witness->first) << " vs "
       << m.label(rep.ramsey->witness->second) << "]";
  }
  if (!rep.ramsey->note.empty()) os << " — " << rep.ramsey->note;
  os << "\n";
  return os.str();
}

nlohmann::json to_json(const AnalysisReport& rep) {
  nlohmann::json j;
  j["monoid"] = monoid_to_json(rep.monoid);
  j["valid"] = rep.validation.ok();
  if (!rep.validation.ok()) {
    j["validation"] = rep.validation.summary();
    return j;
  }
  j["r_classes"] = rep.classes;
  j["r_trivial"] = rep.r_trivial;
  j["almost_r_trivial"] = rep.almost_r_trivial;
  j["x"] = poset_to_json(rep.x->poset);
  j["x"]["linear"] = rep.x_linear;
  j["x"]["strong"] = !rep.x_strong_witness.has_value();
  if (rep.y) {
    j["y"] = forest_to_json(*rep.y);
    j["y"]["maximal"] = rep.maximal;
    j["y"]["designated"] = rep.default_chain;
    j["y"]["pi_max_ok"] = rep.pi.ok;
  } else {
    j["y"] = nullptr;
    j["y_note"] = rep.y_note;
  }
  j["ramsey"] = to_string(rep.ramsey->verdict);
  if (rep.ramsey->witness) {
    j["ramsey_witness"] = {rep.monoid.label(rep.ramsey->witness->first),
                           rep.monoid.label(rep.ramsey->witness->second)};
  }
  j["ms"] = rep.ms_total;
  return j;
}

}  // namespace rmon
