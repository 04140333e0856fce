#include "monres/io.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "monres/complex.hpp"
#include "monres/fan.hpp"
#include "monres/newton.hpp"
#include "monres/residue.hpp"

namespace monres {

namespace {

Int intFromJson(const Json& j, const char* what) {
  if (j.is_number_integer() || j.is_number_unsigned())
    return Int(j.dump());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    requireInput(!s.empty() && s.find_first_not_of("-0123456789") ==
                                   std::string::npos,
                 std::string(what) + ": not a decimal integer");
    return Int(s);
  }
  throw input_error(std::string(what) + ": expected an integer");
}

Json intToJson(const Int& v) {
  if (v.fits_slong_p())
    return Json(v.get_si());
  return Json(v.get_str());
}

Exponent exponentFromJson(const Json& j, std::size_t n, const char* what) {
  requireInput(j.is_array() && j.size() == n,
               std::string(what) + ": expected an array of length n");
  std::vector<Int> coords;
  coords.reserve(n);
  for (const Json& entry : j)
    coords.push_back(intFromJson(entry, what));
  return Exponent(std::move(coords));
}

std::string complexName(ComplexKind kind) {
  return kind == ComplexKind::Taylor ? "taylor" : "scarf";
}

}  // namespace

Json exponentToJson(const Exponent& e) {
  Json a = Json::array();
  for (std::size_t i = 0; i < e.dim(); ++i)
    a.push_back(intToJson(e[i]));
  return a;
}

Json generatorsToJson(const std::vector<Exponent>& gens) {
  Json a = Json::array();
  for (const Exponent& g : gens)
    a.push_back(exponentToJson(g));
  return a;
}

IdealDocument parseIdealDocument(const Json& j) {
  requireInput(j.is_object(), "ideal document: expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    requireInput(key == "n" || key == "generators" || key == "name",
                 "ideal document: unknown key '" + key + "'");
  }
  requireInput(j.contains("n") && j.contains("generators"),
               "ideal document: keys 'n' and 'generators' are required");

  Int nValue = intFromJson(j.at("n"), "n");
  requireInput(nValue >= 1 && nValue <= 16, "n must be between 1 and 16");
  const std::size_t n = nValue.get_ui();

  const Json& gensJson = j.at("generators");
  requireInput(gensJson.is_array() && !gensJson.empty(),
               "generators: expected a nonempty array");
  std::vector<Exponent> raw;
  for (const Json& g : gensJson)
    raw.push_back(exponentFromJson(g, n, "generator"));

  IdealDocument doc;
  doc.ideal = MonIdeal(n, raw);
  if (j.contains("name")) {
    requireInput(j.at("name").is_string(), "name: expected a string");
    doc.name = j.at("name").get<std::string>();
  }

  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  if (raw != doc.ideal.generators())
    doc.notices.push_back(
        "generators were not a minimal set; redundant ones were dropped");
  return doc;
}

IdealDocument parseIdealDocumentText(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  requireInput(!j.is_discarded(), "ideal document: invalid JSON");
  return parseIdealDocument(j);
}

Json idealDocumentToJson(const IdealDocument& doc) {
  Json j = Json::object();
  j["n"] = doc.ideal.dim();
  j["generators"] = generatorsToJson(doc.ideal.generators());
  if (!doc.name.empty())
    j["name"] = doc.name;
  return j;
}

namespace {

Json rayOrderToJson(const RayOrder& ro) {
  Json j = Json::object();
  j["rho"] = exponentToJson(ro.rho.rho);
  j["r"] = intToJson(ro.reesOffset);
  j["ord_alpha_minus_one"] = intToJson(ro.ordAlphaMinusOne);
  return j;
}

Json certificateToJson(const Certificate& cert) {
  Json j = Json::object();
  j["rho"] = exponentToJson(cert.rho.rho);
  j["r"] = intToJson(cert.reesOffset);
  j["ord_alpha_minus_one"] = intToJson(cert.ordAlphaMinusOne);
  j["gamma"] = exponentToJson(cert.gamma);
  j["k"] = intToJson(cert.k);
  j["beta"] = exponentToJson(cert.beta);
  j["a"] = intToJson(cert.a);
  return j;
}

Json outcomeToJson(const ComponentOutcome& outcome) {
  Json j = Json::object();
  j["alpha"] = exponentToJson(outcome.alpha);
  j["face"] = outcome.faceVertices;
  j["certified"] = outcome.certified;
  if (outcome.certificate)
    j["certificate"] = certificateToJson(*outcome.certificate);
  if (!outcome.rayOrders.empty()) {
    Json rows = Json::array();
    for (const RayOrder& ro : outcome.rayOrders)
      rows.push_back(rayOrderToJson(ro));
    j["ray_orders"] = rows;
  }
  return j;
}

Json divisorsToJson(const std::vector<DivisorRow>& rows) {
  Json a = Json::array();
  for (const DivisorRow& row : rows) {
    Json j = Json::object();
    j["rho"] = exponentToJson(row.rho.rho);
    j["ideal_order"] = intToJson(row.idealOrderAlongRay);
    j["coordinate_form_order"] = intToJson(row.coordinateFormOrder);
    j["rees"] = row.isRees;
    a.push_back(std::move(j));
  }
  return a;
}

Json fanToJson(const Fan& fan) {
  Json j = Json::object();
  Json rays = Json::array();
  for (const Exponent& r : fan.rays)
    rays.push_back(exponentToJson(r));
  j["rays"] = rays;
  Json cones = Json::array();
  for (const Cone& c : fan.maximalCones)
    cones.push_back(c.rayIndices);
  j["cones"] = cones;
  return j;
}

Json smallnessToJson(const SmallnessReport& report) {
  Json j = Json::object();
  j["fan_based"] = report.fanBased;
  j["divisors"] = divisorsToJson(report.divisors);
  j["note"] = report.note;
  return j;
}

Json envelope(const std::string& command, const IdealDocument& doc) {
  Json j = Json::object();
  j["command"] = command;
  if (!doc.name.empty())
    j["name"] = doc.name;
  j["n"] = doc.ideal.dim();
  j["generators"] = generatorsToJson(doc.ideal.generators());
  if (!doc.notices.empty())
    j["notices"] = doc.notices;
  return j;
}

}  // namespace

RunResult runSubcommand(const IdealDocument& doc, const RunOptions& options) {
  const MonIdeal& ideal = doc.ideal;
  const auto started = std::chrono::steady_clock::now();

  RunResult result;
  result.report = envelope(options.subcommand, doc);
  Json& j = result.report;

  if (options.subcommand == "closure") {
    MonIdeal closure = integralClosure(ideal);
    j["closure"] = generatorsToJson(closure.generators());
    j["integrally_closed"] = closure == ideal;
  } else if (options.subcommand == "rees") {
    Json rows = Json::array();
    for (const CompactFacet& f : reesValuations(ideal)) {
      Json row = Json::object();
      row["rho"] = exponentToJson(f.normal.rho);
      row["r"] = intToJson(f.offset);
      rows.push_back(std::move(row));
    }
    j["rees_valuations"] = rows;
  } else if (options.subcommand == "resolve") {
    LabeledComplex complex = options.kind == ComplexKind::Taylor
                                 ? taylorComplex(ideal)
                                 : scarfComplex(ideal);
    j["complex"] = complexName(options.kind);
    j["face_counts"] = complex.faceCounts();
    j["top_degree"] = complex.topDegree();
    bool composed = composeZero(complex);
    j["compose_zero"] = composed;
    requireInternal(composed, "resolve: boundary maps do not compose to zero");
    ResolutionCheck check = checkCellularResolution(complex, ideal);
    j["is_resolution"] = check.isResolution;
    if (check.failingLabel)
      j["failing_label"] = exponentToJson(*check.failingLabel);
    RankProfile profile = rankProfile(complex);
    j["ranks"] = profile.ranks;
    j["rank_exactness"] = profile.rankExactness;
    if (!check.isResolution)
      result.exitCode = 1;
  } else if (options.subcommand == "residue") {
    LabeledComplex complex = options.kind == ComplexKind::Taylor
                                 ? taylorComplex(ideal)
                                 : scarfComplex(ideal);
    FormalResidue residue = residueCurrent(complex, ideal);
    j["complex"] = complexName(options.kind);
    Json components = Json::array();
    for (const ResidueComponent& c : residue.components) {
      Json row = Json::object();
      row["face"] = c.faceVertices;
      row["alpha"] = exponentToJson(c.alpha);
      row["status"] = c.status == CoeffStatus::CandidateNonzero
                          ? "candidate-nonzero"
                          : "provably-zero";
      components.push_back(std::move(row));
    }
    j["components"] = components;
    MonIdeal ann = annihilator(residue);
    j["annihilator"] = generatorsToJson(ann.generators());
    bool duality = ann == ideal;
    j["duality"] = duality;
    if (!duality)
      result.exitCode = 1;
  } else if (options.subcommand == "certify") {
    CertReport report = certifyIdeal(ideal, options.kind);
    j["complex"] = complexName(options.kind);
    j["integrally_closed"] = report.closed;
    Json components = Json::array();
    for (const ComponentOutcome& outcome : report.outcomes)
      components.push_back(outcomeToJson(outcome));
    j["components"] = components;
    if (report.purePower) {
      Json note = Json::object();
      note["ell"] = intToJson(report.purePower->ell);
      note["exponent_via_order_subtraction"] =
          intToJson(report.purePower->exponentViaOrderSubtraction);
      note["exponent_as_stated"] =
          intToJson(report.purePower->exponentAsStated);
      j["pure_power_family"] = note;
    }
    if (report.closed)
      j["smallness"] = smallnessToJson(smallnessReport(ideal));
    else
      result.exitCode = 1;
  } else if (options.subcommand == "fan") {
    Fan fan = normalFan(ideal);
    Fan regular = regularize(fan);
    j["normal_fan"] = fanToJson(fan);
    j["regularized"] = fanToJson(regular);
    j["regular"] = isRegular(regular);
    j["divisors"] = divisorsToJson(divisorTable(regular, ideal));
  } else if (options.subcommand == "bs") {
    UniformContainment uc = brianconSkodaCheck(ideal);
    j["nu"] = intToJson(uc.nu);
    j["closure_power_contained"] = uc.holds;
    if (!uc.holds)
      result.exitCode = 1;
  } else {
    throw input_error("unknown subcommand '" + options.subcommand + "'");
  }

  if (options.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    Json timing = Json::object();
    timing["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(elapsed).count();
    j["timing"] = timing;
  }
  return result;
}

unsigned threadBudget() {
  const char* env = std::getenv("MONRES_THREADS");
  if (env != nullptr && *env != '\0') {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    requireInput(end != nullptr && *end == '\0' && value >= 1 && value <= 64,
                 "MONRES_THREADS must be an integer between 1 and 64");
    return static_cast<unsigned>(value);
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0)
    hw = 4;
  return std::min(hw, 64u);
}

std::vector<IdealDocument> generateCorpus(std::size_t n, long bound) {
  requireInput(n == 2, "generateCorpus: only n = 2 is implemented");
  requireInput(bound >= 1 && bound <= 6,
               "generateCorpus: bound must be between 1 and 6");

  std::vector<MonIdeal> ideals;
  // Every Artinian antichain in two variables is the pure powers x^a, y^c
  // plus a strictly descending staircase of interior points.
  for (long a = 1; a <= bound; ++a)
    for (long c = 1; c <= bound; ++c) {
      std::vector<long> xs(static_cast<std::size_t>(a) - 1);
      for (long x = 1; x < a; ++x)
        xs[static_cast<std::size_t>(x) - 1] = x;
      std::vector<long> ys(static_cast<std::size_t>(c) - 1);
      for (long y = 1; y < c; ++y)
        ys[static_cast<std::size_t>(y) - 1] = y;

      const std::size_t maxT = std::min(xs.size(), ys.size());
      for (std::size_t t = 0; t <= maxT; ++t) {
        // All ways to pick t ascending x values and t y values; pairing
        // ascending x with descending y keeps the set an antichain.
        std::vector<std::size_t> xi(t), yi(t);
        for (std::size_t i = 0; i < t; ++i)
          xi[i] = yi[i] = i;
        auto advance = [](std::vector<std::size_t>& idx,
                          std::size_t limit) -> bool {
          std::size_t i = idx.size();
          while (i > 0) {
            --i;
            if (idx[i] != i + limit - idx.size()) {
              ++idx[i];
              for (std::size_t k = i + 1; k < idx.size(); ++k)
                idx[k] = idx[k - 1] + 1;
              return true;
            }
          }
          return false;
        };
        while (true) {
          std::vector<Exponent> gens;
          gens.push_back(Exponent{a, 0});
          gens.push_back(Exponent{0, c});
          for (std::size_t i = 0; i < t; ++i)
            gens.push_back(Exponent{xs[xi[i]], ys[yi[t - 1 - i]]});
          ideals.emplace_back(2, std::move(gens));
          if (advance(yi, ys.size()))
            continue;
          if (!advance(xi, xs.size()))
            break;
          for (std::size_t i = 0; i < t; ++i)
            yi[i] = i;
        }
      }
    }

  std::sort(ideals.begin(), ideals.end(),
            [](const MonIdeal& a, const MonIdeal& b) {
              return a.generators() < b.generators();
            });

  std::vector<IdealDocument> docs;
  docs.reserve(ideals.size());
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    IdealDocument doc;
    doc.ideal = ideals[i];
    std::ostringstream name;
    name << "corpus-n2-b" << bound << "-" << i;
    doc.name = name.str();
    docs.push_back(std::move(doc));
  }
  return docs;
}

namespace {

struct CorpusSlot {
  bool ok = true;
  std::string detail;
};

bool checkOne(const MonIdeal& ideal, const std::string& check,
              std::string& detail) {
  if (check == "equivalence") {
    if (!crossValidate(ideal)) {
      detail = "certificate decision disagrees with the Newton polyhedron";
      return false;
    }
    return true;
  }
  if (check == "duality") {
    LabeledComplex taylor = taylorComplex(ideal);
    FormalResidue residue = residueCurrent(taylor, ideal);
    if (!dualityCheck(taylor, ideal)) {
      detail = "residue annihilator differs from the ideal";
      return false;
    }
    std::vector<Exponent> alphas = candidateAlphas(residue);
    for (const Exponent& corner : irreducibleDecomposition(ideal))
      if (!std::binary_search(alphas.begin(), alphas.end(), corner)) {
        detail = "irreducible corner " + corner.toString() +
                 " missing from the candidates";
        return false;
      }
    return true;
  }
  if (check == "bs") {
    if (!brianconSkodaCheck(ideal).holds) {
      detail = "closure power escapes the ideal";
      return false;
    }
    return true;
  }
  if (check == "all") {
    return checkOne(ideal, "equivalence", detail) &&
           checkOne(ideal, "duality", detail) &&
           checkOne(ideal, "bs", detail);
  }
  throw input_error("unknown corpus check '" + check + "'");
}

}  // namespace

RunResult runCorpus(const RunOptions& options) {
  requireInput(options.bound >= 1, "corpus: --bound is required");
  requireInput(options.check == "equivalence" || options.check == "duality" ||
                   options.check == "bs" || options.check == "all",
               "corpus: --check must be equivalence, duality, bs or all");
  const auto started = std::chrono::steady_clock::now();

  std::vector<IdealDocument> docs = generateCorpus(2, options.bound);
  std::vector<CorpusSlot> slots(docs.size());
  const unsigned threads = static_cast<unsigned>(
      std::min<std::size_t>(threadBudget(), docs.size()));

  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= docs.size())
        return;
      try {
        slots[i].ok = checkOne(docs[i].ideal, options.check, slots[i].detail);
      } catch (const std::exception& e) {
        slots[i].ok = false;
        slots[i].detail = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back(worker);
  for (std::thread& t : pool)
    t.join();

  Json j = Json::object();
  j["command"] = "corpus";
  j["n"] = 2;
  j["bound"] = options.bound;
  j["check"] = options.check;
  j["count"] = docs.size();
  j["threads"] = threads;
  Json failures = Json::array();
  for (std::size_t i = 0; i < docs.size(); ++i)
    if (!slots[i].ok) {
      Json f = Json::object();
      f["name"] = docs[i].name;
      f["generators"] = generatorsToJson(docs[i].ideal.generators());
      f["detail"] = slots[i].detail;
      failures.push_back(std::move(f));
    }
  j["failures"] = failures;
  j["ok"] = failures.empty();
  if (options.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    Json timing = Json::object();
    timing["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(elapsed).count();
    j["timing"] = timing;
  }

  RunResult result;
  result.report = std::move(j);
  result.exitCode = failures.empty() ? 0 : 1;
  return result;
}

namespace {

std::string exponentText(const Json& j) {
  std::string out = "(";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i > 0)
      out += ",";
    out += j[i].dump();
  }
  out += ")";
  return out;
}

std::string generatorList(const Json& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0)
      out += ", ";
    out += exponentText(gens[i]);
  }
  return out;
}

}  // namespace

std::string renderText(const Json& report) {
  std::ostringstream out;
  const std::string command = report.at("command").get<std::string>();
  if (command == "corpus") {
    out << "corpus check " << report.at("check").get<std::string>()
        << " over " << report.at("count") << " ideals (bound "
        << report.at("bound") << ", " << report.at("threads")
        << " threads)\n";
    const Json& failures = report.at("failures");
    if (failures.empty()) {
      out << "all ideals pass\n";
    } else {
      out << failures.size() << " failures:\n";
      for (const Json& f : failures)
        out << "  " << f.at("name").get<std::string>() << " ["
            << generatorList(f.at("generators")) << "]: "
            << f.at("detail").get<std::string>() << "\n";
    }
    return out.str();
  }

  out << command;
  if (report.contains("name"))
    out << " " << report.at("name").get<std::string>();
  out << ": n=" << report.at("n") << ", generators "
      << generatorList(report.at("generators")) << "\n";
  if (report.contains("notices"))
    for (const Json& notice : report.at("notices"))
      out << "notice: " << notice.get<std::string>() << "\n";

  if (command == "closure") {
    out << "closure: " << generatorList(report.at("closure")) << "\n";
    out << "integrally closed: "
        << (report.at("integrally_closed").get<bool>() ? "yes" : "no")
        << "\n";
  } else if (command == "rees") {
    for (const Json& row : report.at("rees_valuations"))
      out << "rho=" << exponentText(row.at("rho")) << "  r="
          << row.at("r").dump() << "\n";
  } else if (command == "resolve") {
    out << "complex: " << report.at("complex").get<std::string>()
        << ", face counts " << report.at("face_counts").dump() << "\n";
    out << "compose zero: "
        << (report.at("compose_zero").get<bool>() ? "yes" : "no")
        << ", resolution: "
        << (report.at("is_resolution").get<bool>() ? "yes" : "no") << "\n";
    if (report.contains("failing_label"))
      out << "first failing label: "
          << exponentText(report.at("failing_label")) << "\n";
    out << "generic ranks: " << report.at("ranks").dump()
        << ", rank exactness: "
        << (report.at("rank_exactness").get<bool>() ? "yes" : "no") << "\n";
  } else if (command == "residue") {
    for (const Json& row : report.at("components"))
      out << "face " << row.at("face").dump() << "  alpha="
          << exponentText(row.at("alpha")) << "  "
          << row.at("status").get<std::string>() << "\n";
    out << "annihilator: " << generatorList(report.at("annihilator"))
        << "\n";
    out << "duality: " << (report.at("duality").get<bool>() ? "yes" : "no")
        << "\n";
  } else if (command == "certify") {
    out << "complex: " << report.at("complex").get<std::string>() << "\n";
    for (const Json& row : report.at("components")) {
      out << "alpha=" << exponentText(row.at("alpha"));
      if (row.at("certified").get<bool>()) {
        const Json& cert = row.at("certificate");
        out << "  certified: rho=" << exponentText(cert.at("rho")) << " r="
            << cert.at("r").dump() << " ord=" << cert.at(
                "ord_alpha_minus_one").dump()
            << " k=" << cert.at("k").dump() << " beta="
            << exponentText(cert.at("beta")) << " a=" << cert.at("a").dump()
            << "\n";
      } else {
        out << "  NOT certified; orders along Rees rays:\n";
        for (const Json& ro : row.at("ray_orders"))
          out << "    rho=" << exponentText(ro.at("rho")) << " r="
              << ro.at("r").dump() << " ord="
              << ro.at("ord_alpha_minus_one").dump() << "\n";
      }
    }
    out << "integrally closed: "
        << (report.at("integrally_closed").get<bool>() ? "yes" : "no")
        << "\n";
    if (report.contains("pure_power_family")) {
      const Json& note = report.at("pure_power_family");
      out << "pure power family l=" << note.at("ell").dump()
          << ": recorded exponents " << note.at(
              "exponent_via_order_subtraction").dump()
          << " (order subtraction) and " << note.at(
              "exponent_as_stated").dump()
          << " (as stated)\n";
    }
    if (report.contains("smallness")) {
      const Json& sm = report.at("smallness");
      out << "divisor table ("
          << (sm.at("fan_based").get<bool>() ? "regularized fan"
                                             : "Rees rays only")
          << "):\n";
      for (const Json& row : sm.at("divisors"))
        out << "  rho=" << exponentText(row.at("rho")) << "  ord(ideal)="
            << row.at("ideal_order").dump() << "  ord(form)="
            << row.at("coordinate_form_order").dump() << "  rees="
            << (row.at("rees").get<bool>() ? "yes" : "no") << "\n";
    }
  } else if (command == "fan") {
    out << "normal fan rays:";
    for (const Json& ray : report.at("normal_fan").at("rays"))
      out << " " << exponentText(ray);
    out << "\nregularized rays:";
    for (const Json& ray : report.at("regularized").at("rays"))
      out << " " << exponentText(ray);
    out << "\nregular: "
        << (report.at("regular").get<bool>() ? "yes" : "no") << "\n";
    for (const Json& row : report.at("divisors"))
      out << "  rho=" << exponentText(row.at("rho")) << "  ord(ideal)="
          << row.at("ideal_order").dump() << "  ord(form)="
          << row.at("coordinate_form_order").dump() << "  rees="
          << (row.at("rees").get<bool>() ? "yes" : "no") << "\n";
  } else if (command == "bs") {
    out << "nu=" << report.at("nu").dump() << ", closure^nu inside ideal: "
        << (report.at("closure_power_contained").get<bool>() ? "yes" : "no")
        << "\n";
  }
  if (report.contains("timing"))
    out << "elapsed: " << report.at("timing").at("elapsed_ms").dump()
        << " ms\n";
  return out.str();
}

}  // namespace monres
