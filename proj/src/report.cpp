#include "rtage/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <tuple>

namespace rtage {

using nlohmann::json;

void Report::add(const VSweep& sweep) {
  MinimumRow row;
  row.h = sweep.h;
  row.r = sweep.r;
  row.min_age = sweep.minimum.value;
  row.classes = sweep.minimum.count;
  for (const auto& c : sweep.minimum.witnesses) row.witnesses.push_back({c.w_spec, c.lambda_spec});
  minima.push_back(std::move(row));
  for (const auto& rec : sweep.exceptions)
    exceptions.push_back({rec.cls.h, rec.cls.r, rec.cls.w_spec, rec.cls.lambda_spec, rec.age_sym2, rec.age_tensor,
                          rec.age_v, rec.matches_iii});
}

void Report::add(const InteriorSummary& interior) {
  verdicts.push_back({interior.g, std::string(to_string(interior.kind)), interior.minimum.value,
                      interior.minimum.witnesses, interior.minimum.count});
}

void Report::add(const TorusSummary& t) {
  torus.push_back({t.r, t.minimum.value, t.minimum.witnesses, t.minimum.count});
}

void Report::add(const PropositionViolation& v) {
  violations.push_back(
      {v.proposition(), v.cls().h, v.cls().r, v.cls().w_spec, v.cls().lambda_spec, v.age_v(), v.detail()});
}

void Report::sort_rows() {
  std::sort(minima.begin(), minima.end(),
            [](const auto& x, const auto& y) { return std::tie(x.h, x.r) < std::tie(y.h, y.r); });
  std::sort(exceptions.begin(), exceptions.end(), [](const auto& x, const auto& y) {
    return std::tie(x.h, x.r, x.w_spec, x.lambda_spec) < std::tie(y.h, y.r, y.w_spec, y.lambda_spec);
  });
  std::sort(verdicts.begin(), verdicts.end(), [](const auto& x, const auto& y) { return x.g < y.g; });
  std::sort(torus.begin(), torus.end(), [](const auto& x, const auto& y) { return x.r < y.r; });
  std::sort(violations.begin(), violations.end(), [](const auto& x, const auto& y) {
    return std::tie(x.proposition, x.h, x.r, x.w_spec, x.lambda_spec) <
           std::tie(y.proposition, y.h, y.r, y.w_spec, y.lambda_spec);
  });
}

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json opt_rational(const std::optional<Rational>& v) { return v ? json(v->str()) : json(nullptr); }

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::optional<Rational> get_opt_rational(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return Rational::parse(j.at(key).get<std::string>());
}

json spec_json(const Spectrum& s) { return s.to_strings(); }
Spectrum spec_from(const json& j) { return Spectrum::from_strings(j.get<std::vector<std::string>>()); }

std::string joined(const Spectrum& s) {
  std::string out;
  for (const auto& q : s) out += (out.empty() ? "" : " ") + q.str();
  return out;
}

std::string opt_str(const std::optional<Rational>& r) { return r ? r->str() : "-"; }

}  // namespace

json to_json(const Report& rep) {
  const auto& c = rep.config;
  json config = {{"command", c.command},
                 {"h", opt(c.h)},
                 {"r", opt(c.r)},
                 {"g", opt(c.g)},
                 {"interior", c.interior},
                 {"order_divides", c.order_divides},
                 {"mode", c.mode},
                 {"threshold", c.threshold},
                 {"samples", opt(c.samples)},
                 {"seed", opt(c.seed)},
                 {"max_degree", opt(c.max_degree)}};

  json minima = json::array();
  for (const auto& m : rep.minima) {
    json w = json::array();
    for (const auto& x : m.witnesses) w.push_back({{"w_spec", spec_json(x.w_spec)}, {"lambda_spec", spec_json(x.lambda_spec)}});
    minima.push_back({{"h", m.h}, {"r", m.r}, {"min_age", opt_rational(m.min_age)}, {"witnesses", w}, {"classes", m.classes}});
  }
  json exceptions = json::array();
  for (const auto& e : rep.exceptions)
    exceptions.push_back({{"h", e.h},
                          {"r", e.r},
                          {"w_spec", spec_json(e.w_spec)},
                          {"lambda_spec", spec_json(e.lambda_spec)},
                          {"age_sym2", e.age_sym2.str()},
                          {"age_tensor", e.age_tensor.str()},
                          {"age_v", e.age_v.str()},
                          {"matches_iii", e.matches_iii}});
  json verdicts = json::array();
  for (const auto& v : rep.verdicts) {
    json w = json::array();
    for (const auto& s : v.witnesses) w.push_back(spec_json(s));
    verdicts.push_back({{"g", v.g}, {"verdict", v.verdict}, {"min_age", opt_rational(v.min_age)}, {"witnesses", w}, {"classes", v.classes}});
  }
  json torus = json::array();
  for (const auto& t : rep.torus) {
    json w = json::array();
    for (const auto& s : t.witnesses) w.push_back(spec_json(s));
    torus.push_back({{"r", t.r}, {"min_forms_age", opt_rational(t.min_forms_age)}, {"witnesses", w}, {"classes", t.classes}});
  }
  json oracle = json::array();
  for (const auto& o : rep.oracle)
    oracle.push_back({{"a_sig", o.a_sig}, {"b_sig", o.b_sig}, {"pass", o.pass}, {"detail", o.detail}});
  json violations = json::array();
  for (const auto& v : rep.violations)
    violations.push_back({{"proposition", v.proposition},
                          {"h", v.h},
                          {"r", v.r},
                          {"w_spec", spec_json(v.w_spec)},
                          {"lambda_spec", spec_json(v.lambda_spec)},
                          {"age_v", v.age_v.str()},
                          {"detail", v.detail}});
  return {{"config", config},     {"minima", minima}, {"exceptions", exceptions}, {"verdicts", verdicts},
          {"torus", torus},       {"oracle", oracle}, {"violations", violations}};
}

Report report_from_json(const json& j) {
  Report rep;
  const auto& c = j.at("config");
  rep.config.command = c.at("command").get<std::string>();
  rep.config.h = get_opt<int>(c, "h");
  rep.config.r = get_opt<int>(c, "r");
  rep.config.g = get_opt<int>(c, "g");
  rep.config.interior = c.at("interior").get<bool>();
  rep.config.order_divides = c.at("order_divides").get<std::int64_t>();
  rep.config.mode = c.at("mode").get<std::string>();
  rep.config.threshold = c.at("threshold").get<std::string>();
  rep.config.samples = get_opt<std::int64_t>(c, "samples");
  rep.config.seed = get_opt<std::uint64_t>(c, "seed");
  rep.config.max_degree = get_opt<std::int64_t>(c, "max_degree");

  for (const auto& m : j.at("minima")) {
    MinimumRow row{m.at("h").get<int>(), m.at("r").get<int>(), get_opt_rational(m, "min_age"), {},
                   m.at("classes").get<std::size_t>()};
    for (const auto& w : m.at("witnesses")) row.witnesses.push_back({spec_from(w.at("w_spec")), spec_from(w.at("lambda_spec"))});
    rep.minima.push_back(std::move(row));
  }
  for (const auto& e : j.at("exceptions"))
    rep.exceptions.push_back({e.at("h").get<int>(), e.at("r").get<int>(), spec_from(e.at("w_spec")),
                              spec_from(e.at("lambda_spec")), Rational::parse(e.at("age_sym2").get<std::string>()),
                              Rational::parse(e.at("age_tensor").get<std::string>()),
                              Rational::parse(e.at("age_v").get<std::string>()), e.at("matches_iii").get<bool>()});
  for (const auto& v : j.at("verdicts")) {
    VerdictRow row{v.at("g").get<int>(), v.at("verdict").get<std::string>(), get_opt_rational(v, "min_age"), {},
                   v.at("classes").get<std::size_t>()};
    for (const auto& w : v.at("witnesses")) row.witnesses.push_back(spec_from(w));
    rep.verdicts.push_back(std::move(row));
  }
  for (const auto& t : j.at("torus")) {
    TorusRow row{t.at("r").get<int>(), get_opt_rational(t, "min_forms_age"), {}, t.at("classes").get<std::size_t>()};
    for (const auto& w : t.at("witnesses")) row.witnesses.push_back(spec_from(w));
    rep.torus.push_back(std::move(row));
  }
  for (const auto& o : j.at("oracle"))
    rep.oracle.push_back({o.at("a_sig").get<std::string>(), o.at("b_sig").get<std::string>(), o.at("pass").get<bool>(),
                          o.at("detail").get<std::string>()});
  for (const auto& v : j.at("violations"))
    rep.violations.push_back({v.at("proposition").get<std::string>(), v.at("h").get<int>(), v.at("r").get<int>(),
                              spec_from(v.at("w_spec")), spec_from(v.at("lambda_spec")),
                              Rational::parse(v.at("age_v").get<std::string>()), v.at("detail").get<std::string>()});
  return rep;
}

std::string render_json(const Report& report) { return to_json(report).dump(2) + "\n"; }

std::string render_csv(const Report& rep) {
  std::ostringstream os;
  os << "section,h,r,g,w_spec,lambda_spec,age,info\n";
  for (const auto& m : rep.minima) {
    if (m.witnesses.empty()) os << "minimum," << m.h << ',' << m.r << ",,,," << opt_str(m.min_age) << ",classes=" << m.classes << '\n';
    for (const auto& w : m.witnesses)
      os << "minimum," << m.h << ',' << m.r << ",," << joined(w.w_spec) << ',' << joined(w.lambda_spec) << ','
         << opt_str(m.min_age) << ",classes=" << m.classes << '\n';
  }
  for (const auto& e : rep.exceptions)
    os << "exception," << e.h << ',' << e.r << ",," << joined(e.w_spec) << ',' << joined(e.lambda_spec) << ','
       << e.age_v.str() << ",matches_iii=" << (e.matches_iii ? "true" : "false") << '\n';
  for (const auto& v : rep.verdicts)
    os << "verdict,,," << v.g << ",,," << opt_str(v.min_age) << ',' << v.verdict << '\n';
  for (const auto& t : rep.torus)
    os << "torus,0," << t.r << ",,,," << opt_str(t.min_forms_age) << ",classes=" << t.classes << '\n';
  for (const auto& o : rep.oracle)
    os << "oracle,,,," << o.a_sig << ',' << o.b_sig << ",," << (o.pass ? "pass" : "fail") << '\n';
  for (const auto& v : rep.violations)
    os << "violation," << v.h << ',' << v.r << ",," << joined(v.w_spec) << ',' << joined(v.lambda_spec) << ','
       << v.age_v.str() << ",prop=" << v.proposition << '\n';
  return os.str();
}

std::string render_text(const Report& rep) {
  std::ostringstream os;
  const auto& c = rep.config;
  os << c.command << ": N=" << c.order_divides;
  if (c.command == "oracle") {
    if (c.samples) os << " samples=" << *c.samples;
    if (c.seed) os << " seed=" << *c.seed;
    if (c.max_degree) os << " max_degree=" << *c.max_degree;
  } else {
    os << " mode=" << c.mode << " threshold=" << c.threshold;
  }
  if (c.h) os << " h=" << *c.h;
  if (c.r) os << " r=" << *c.r;
  if (c.g) os << " g=" << *c.g;
  if (c.interior) os << " interior";
  os << '\n';
  if (!rep.minima.empty()) {
    os << "\nminimum age on V\n  " << std::left << std::setw(4) << "h" << std::setw(4) << "r" << std::setw(10)
       << "min" << std::setw(9) << "classes" << "witnesses\n";
    for (const auto& m : rep.minima) {
      os << "  " << std::setw(4) << m.h << std::setw(4) << m.r << std::setw(10) << opt_str(m.min_age) << std::setw(9)
         << m.classes;
      for (std::size_t i = 0; i < m.witnesses.size(); ++i)
        os << (i ? "; " : "") << m.witnesses[i].w_spec.str() << " x " << m.witnesses[i].lambda_spec.str();
      os << '\n';
    }
  }
  if (!rep.minima.empty() || !rep.exceptions.empty()) {
    os << "\nexceptions (" << rep.exceptions.size() << ")\n";
    for (const auto& e : rep.exceptions)
      os << "  h=" << e.h << " r=" << e.r << " w=" << e.w_spec.str() << " lambda=" << e.lambda_spec.str()
         << " age_v=" << e.age_v.str() << " (sym2 " << e.age_sym2.str() << " + tensor " << e.age_tensor.str() << ")"
         << (e.matches_iii ? " [exceptional shape]" : "") << '\n';
  }
  for (const auto& v : rep.verdicts) {
    os << "\ninterior g=" << v.g << ": " << v.verdict << ", min age " << opt_str(v.min_age) << " over " << v.classes
       << " classes\n";
    for (const auto& w : v.witnesses) os << "  attained at " << w.str() << '\n';
  }
  if (!rep.torus.empty()) {
    os << "\ntorus stratum (h=0)\n";
    for (const auto& t : rep.torus)
      os << "  r=" << t.r << " classes=" << t.classes << " min forms age " << opt_str(t.min_forms_age) << '\n';
  }
  if (!rep.oracle.empty() || c.command == "oracle") {
    const auto passed = std::count_if(rep.oracle.begin(), rep.oracle.end(), [](const auto& o) { return o.pass; });
    os << "\noracle: " << passed << "/" << rep.oracle.size() << " passed\n";
    for (const auto& o : rep.oracle)
      if (!o.pass) os << "  FAIL " << o.a_sig << " x " << o.b_sig << ": " << o.detail << '\n';
  }
  if (!rep.violations.empty()) {
    os << "\nVIOLATIONS\n";
    for (const auto& v : rep.violations)
      os << "  (" << v.proposition << ") h=" << v.h << " r=" << v.r << " w=" << v.w_spec.str()
         << " lambda=" << v.lambda_spec.str() << " age_v=" << v.age_v.str() << ": " << v.detail << '\n';
  }
  return os.str();
}

}  // namespace rtage
