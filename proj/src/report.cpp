#include "ringlab/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "ringlab/catalog.hpp"
#include "ringlab/radicals.hpp"

namespace ringlab {

namespace {

using json = nlohmann::ordered_json;

json subset_json(const IdealSubset& s) {
  json out;
  out["size"] = s.size();
  out["members"] = s.members();
  json rendered = json::array();
  for (Elem v : s.members()) rendered.push_back(s.ambient()->show(v));
  out["rendered"] = rendered;
  return out;
}

json violations_json(const std::vector<AxiomViolation>& vs) {
  json arr = json::array();
  for (const auto& v : vs) {
    json one;
    one["axiom"] = v.axiom;
    one["witnesses"] = v.witnesses;
    arr.push_back(one);
  }
  return arr;
}

std::string witness_string(const std::vector<int>& w) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ",";
    out << w[i];
  }
  out << ")";
  return out.str();
}

std::vector<const BoundObject*> pick_objects(const Session& s,
                                             const CommandOptions& opt,
                                             bool ext_only) {
  std::vector<const BoundObject*> out;
  for (const auto& o : s.objects) {
    if (!opt.object.empty() && o.name != opt.object) continue;
    if (std::holds_alternative<PhiValue>(o.value)) continue;
    if (ext_only && !std::holds_alternative<DorrohRing>(o.value)) continue;
    out.push_back(&o);
  }
  if (!opt.object.empty() && out.empty())
    throw Error(ErrorClass::input,
                "no applicable object named '" + opt.object + "'");
  return out;
}

json classified_json(const ClassifiedPrime& c) {
  json out;
  out["form"] = c.form == ClassifiedPrime::Form::sum ? "sum" : "graph";
  if (c.component >= 0) out["component"] = c.component;
  out["base"] = subset_json(c.base);
  out["ideal"] = subset_json(c.members);
  return out;
}

void cmd_check(const SpecDocument& doc, const CommandOptions& opt,
               Report& report) {
  Evaluator ev(opt.cfg);
  SuiteResult suite;
  suite.name = "check";
  std::set<std::string> failed;
  for (const auto& b : doc.bindings) {
    ++suite.cases;
    ObjectReport obj;
    obj.name = b.name;
    // skip bindings that reference failed ones
    bool blocked = false;
    std::function<void(const Expr&)> scan = [&](const Expr& e) {
      if (e.kind == Expr::Kind::ref && failed.count(e.name)) blocked = true;
      for (const auto& a : e.args) scan(*a);
    };
    scan(*b.expr);
    if (blocked) {
      obj.result["valid"] = false;
      obj.result["error"] = "skipped: depends on an invalid binding";
      failed.insert(b.name);
      report.input_error = true;
      report.objects.push_back(std::move(obj));
      continue;
    }
    try {
      auto bound = ev.eval_binding(b);
      obj.order = value_rng(bound.value) ? value_rng(bound.value)->order() : 0;
      obj.result["valid"] = true;
      obj.result["violations"] = json::array();
    } catch (const AxiomError& ex) {
      obj.result["valid"] = false;
      obj.result["violations"] = violations_json(ex.violations());
      failed.insert(b.name);
      report.input_error = true;
      for (const auto& v : ex.violations())
        suite.failures.push_back({b.name, v.axiom, "violated",
                                  witness_string(v.witnesses)});
    } catch (const OrderCapExceeded&) {
      throw;
    } catch (const SearchBudgetExceeded&) {
      throw;
    } catch (const Error& ex) {
      obj.result["valid"] = false;
      obj.result["error"] = ex.what();
      failed.insert(b.name);
      report.input_error = true;
      suite.failures.push_back({b.name, "evaluates", ex.what(), ""});
    }
    report.objects.push_back(std::move(obj));
  }
  report.suites.push_back(std::move(suite));
}

void cmd_radical(const Session& session, const CommandOptions& opt,
                 Report& report, bool nil) {
  for (const auto* o : pick_objects(session, opt, false)) {
    RngPtr rng = value_rng(o->value);
    ObjectReport obj;
    obj.name = o->name;
    obj.order = rng->order();
    RadicalReport rr = nil ? upper_nil_radical(rng, true, opt.cfg)
                           : jacobson_radical(rng);
    obj.result[nil ? "nilradical" : "radical"] = subset_json(rr.radical);
    json ws = json::array();
    for (size_t i = 0; i < rr.witnesses.size(); ++i) {
      json w;
      w["element"] = rr.radical.members()[i];
      if (nil) {
        w["exponent"] = rr.witnesses[i].nil_exponent;
      } else {
        w["left_k"] = rr.witnesses[i].left_k;
        w["right_k"] = rr.witnesses[i].right_k;
      }
      ws.push_back(w);
    }
    obj.result["witnesses"] = ws;
    report.objects.push_back(std::move(obj));
  }
}

void cmd_ideals(const Session& session, const CommandOptions& opt,
                Report& report) {
  if (opt.left && (opt.prime || opt.maximal))
    throw Error(ErrorClass::input,
                "prime/maximal filters apply to two-sided ideals");
  for (const auto* o : pick_objects(session, opt, false)) {
    RngPtr rng = value_rng(o->value);
    ObjectReport obj;
    obj.name = o->name;
    obj.order = rng->order();
    obj.result["kind"] = opt.left ? "left" : "two-sided";
    json arr = json::array();
    for (const auto& k : enumerate_ideals(rng, opt.left, opt.cfg)) {
      bool p = false, m = false;
      if (opt.prime || opt.maximal) {
        p = is_prime_ideal(rng, k, opt.cfg);
        m = is_maximal_ideal(rng, k, opt.cfg);
        if (opt.prime && !p) continue;
        if (opt.maximal && !m) continue;
      }
      json one = subset_json(k);
      if (opt.prime) one["prime"] = p;
      if (opt.maximal) one["maximal"] = m;
      arr.push_back(one);
    }
    obj.result["count"] = arr.size();
    obj.result["ideals"] = arr;
    report.objects.push_back(std::move(obj));
  }
}

void cmd_decompose(const Session& session, const CommandOptions& opt,
                   Report& report) {
  for (const auto* o : pick_objects(session, opt, true)) {
    const DorrohRing& e = std::get<DorrohRing>(o->value);
    ObjectReport obj;
    obj.name = o->name;
    obj.order = e.ext->order();
    json arr = json::array();
    for (const auto& k : enumerate_ideals(e.ext, false, opt.cfg)) {
      auto d = decompose_ideal(e, k, IdealKind::two_sided);
      json one;
      one["ideal"] = subset_json(k);
      one["A"] = subset_json(d.a);
      one["Z"] = subset_json(d.z);
      one["J"] = subset_json(d.j);
      json phi = json::array();
      for (size_t p = 0; p < d.phi.size(); ++p)
        phi.push_back(json::array({d.j.members()[p], d.phi[p]}));
      one["phi"] = phi;
      arr.push_back(one);
    }
    obj.result["count"] = arr.size();
    obj.result["decompositions"] = arr;
    report.objects.push_back(std::move(obj));
  }
}

void cmd_classify(const Session& session, const CommandOptions& opt,
                  Report& report) {
  const PhiValue* named_phi = nullptr;
  if (opt.phi != "auto") {
    const BoundObject* o = session.find(opt.phi);
    if (!o || !std::holds_alternative<PhiValue>(o->value))
      throw Error(ErrorClass::input, "no phi binding named '" + opt.phi + "'");
    named_phi = &std::get<PhiValue>(o->value);
  }
  bool any = false;
  for (const auto* o : pick_objects(session, opt, true)) {
    const DorrohRing& e = std::get<DorrohRing>(o->value);
    if (named_phi && named_phi->structure.get() != e.source.get()) continue;
    any = true;
    ObjectReport obj;
    obj.name = o->name;
    obj.order = e.ext->order();

    std::vector<RHomomorphism> phis;
    std::vector<std::string> phi_names;
    if (named_phi) {
      phis.push_back(named_phi->hom);
      phi_names.push_back(opt.phi);
    } else {
      auto rs = find_retractions(e.source, opt.cfg);
      for (size_t i = 0; i < rs.size(); ++i) {
        phis.push_back(rs[i]);
        phi_names.push_back("retraction " + std::to_string(i));
      }
    }
    obj.result["retractions"] = phis.size();
    json results = json::array();
    std::set<std::vector<Elem>> first_set;
    bool coincide = true;
    for (size_t p = 0; p < phis.size(); ++p) {
      json one;
      one["phi"] = phi_names[p];
      auto primes = classify_prime_ideals(e, phis[p], opt.cfg);
      auto maximals = classify_maximal_ideals(e, phis[p], opt.cfg);
      json pj = json::array(), mj = json::array();
      for (const auto& c : primes) pj.push_back(classified_json(c));
      for (const auto& c : maximals) mj.push_back(classified_json(c));
      one["primes"] = pj;
      one["maximals"] = mj;
      one["local"] = is_local(e.ext, opt.cfg);
      if (e.ext->commutative())
        one["local_via_corollary"] = local_via_corollary(e, phis[p], opt.cfg);
      else
        one["local_via_corollary"] = nullptr;
      results.push_back(one);

      std::set<std::vector<Elem>> set;
      for (const auto& c : primes) set.insert(c.members.members());
      if (p == 0) first_set = set;
      else if (set != first_set) coincide = false;
    }
    obj.result["results"] = results;
    if (phis.size() > 1) obj.result["coincide"] = coincide;
    report.objects.push_back(std::move(obj));
  }
  if (named_phi && !any)
    throw Error(ErrorClass::input,
                "phi '" + opt.phi + "' does not match any selected extension");
}

void cmd_verify(const Session& session, const CommandOptions& opt,
                Report& report) {
  std::vector<ExtInstance> instances;
  std::set<std::string> names;
  for (auto& inst : session_instances(session)) {
    if (!opt.object.empty() && inst.name != opt.object) continue;
    names.insert(inst.name);
    instances.push_back(std::move(inst));
  }
  for (auto& inst : catalog_instances(opt.cfg))
    if (!names.count(inst.name)) instances.push_back(std::move(inst));

  std::vector<std::string> to_run;
  if (opt.suite.empty()) {
    to_run = suite_names();
  } else {
    if (std::find(suite_names().begin(), suite_names().end(), opt.suite) ==
        suite_names().end())
      throw Error(ErrorClass::input, "unknown suite '" + opt.suite + "'");
    to_run.push_back(opt.suite);
  }
  for (const auto& name : to_run)
    report.suites.push_back(run_suite(name, instances, opt.cfg));
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::json) {
    json out;
    out["command"] = r.command;
    json objs = json::array();
    for (const auto& o : r.objects) {
      json one;
      one["name"] = o.name;
      one["order"] = o.order;
      one["result"] = o.result;
      objs.push_back(one);
    }
    out["objects"] = objs;
    json suites = json::array();
    for (const auto& s : r.suites) {
      json one;
      one["name"] = s.name;
      one["cases"] = s.cases;
      json fails = json::array();
      for (const auto& f : s.failures) {
        json fj;
        fj["instance"] = f.instance;
        fj["expected"] = f.expected;
        fj["actual"] = f.actual;
        fj["witness"] = f.witness;
        fails.push_back(fj);
      }
      one["failures"] = fails;
      suites.push_back(one);
    }
    out["suites"] = suites;
    out["elapsed_ms"] = r.timings ? r.elapsed_ms : 0;
    return out.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "command: " << r.command << "\n";
  for (const auto& o : r.objects) {
    out << "object " << o.name << " (order " << o.order << ")\n";
    out << "  " << o.result.dump() << "\n";
  }
  for (const auto& s : r.suites) {
    out << "suite " << s.name << ": cases=" << s.cases
        << " failures=" << s.failures.size() << "\n";
    for (const auto& f : s.failures)
      out << "  FAIL " << f.instance << ": expected " << f.expected
          << ", got " << f.actual
          << (f.witness.empty() ? "" : " at " + f.witness) << "\n";
  }
  if (r.timings) out << "elapsed_ms: " << r.elapsed_ms << "\n";
  return out.str();
}

int report_exit_code(const Report& r) {
  if (r.input_error) return 2;
  for (const auto& s : r.suites)
    if (!s.failures.empty()) return 1;
  return 0;
}

Report run_command(const std::string& spec_text, const CommandOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  Report report;
  report.command = opt.command;
  report.timings = opt.timings;

  SpecDocument doc = parse_spec(spec_text);
  if (opt.command == "check") {
    cmd_check(doc, opt, report);
  } else {
    Session session = evaluate_document(doc, opt.cfg);
    if (opt.command == "radical") cmd_radical(session, opt, report, false);
    else if (opt.command == "nilradical") cmd_radical(session, opt, report, true);
    else if (opt.command == "ideals") cmd_ideals(session, opt, report);
    else if (opt.command == "decompose") cmd_decompose(session, opt, report);
    else if (opt.command == "classify") cmd_classify(session, opt, report);
    else if (opt.command == "verify-theorems") cmd_verify(session, opt, report);
    else throw Error(ErrorClass::input, "unknown command '" + opt.command + "'");
  }

  auto end = std::chrono::steady_clock::now();
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(end - start)
          .count();
  return report;
}

}  // namespace ringlab
