// obstrukt: batch front end for the obstruction/classification workbench.
// Exit codes: 0 success / theorem holds, 1 theorem violation, 2 input error,
// 3 enumeration budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "obstrukt/butterfly.hpp"
#include "obstrukt/cohomology.hpp"
#include "obstrukt/io.hpp"
#include "obstrukt/opext.hpp"
#include "obstrukt/schreier.hpp"
#include "obstrukt/verify.hpp"
#include "obstrukt/xmod.hpp"

using nlohmann::json;
using namespace obk;

namespace {

struct Options {
  std::vector<std::string> bundles;
  bool json_out = false;
  uint64_t seed = 1;
  long long budget = 0;
  std::string suite;
  std::string fixtures_dir;
  std::vector<std::string> args;  // command and positional arguments
};

int usage() {
  std::cout <<
      "usage: obstrukt [options] <command> [args]\n"
      "\n"
      "commands:\n"
      "  check <object-or-file>                  validate one object or a whole file\n"
      "  structure <group>                       centre, Aut, Inn, Out and conj\n"
      "  cohomology <n> <action>                 H^n as invariant factors\n"
      "  classify-opext <E> <E'> <phi0> <phi1>   Thm 4.5 classification report\n"
      "  transport <E> <E'> <phi0> <phi1>        push-forward and pullback extensions\n"
      "  butterfly-compose <b1> <b2>             compose b2 after b1\n"
      "  weak-homs <X> <X'> <phi0> <phi>         weak-map classes over a module morphism\n"
      "  obstruction <akernel>                   Schreier-Mac Lane obstruction class\n"
      "  sml <C> <K> <akernel>                   full Schreier-Mac Lane report\n"
      "  verify --suite <name> [--seed N]        run a verification suite ('all' runs each)\n"
      "\n"
      "options:\n"
      "  --bundle <path>   load a fixture file (repeatable)\n"
      "  --json            machine-readable report\n"
      "  --seed <N>        seed for randomized suites (default 1)\n"
      "  --budget <N>      enumeration budget (default 1e8 or OBSTRUKT_BUDGET)\n"
      "  --fixtures <dir>  fixture directory for the io suite\n";
  return 2;
}

const FiniteGroup& group_arg(const Bundle& b, const std::string& name) {
  auto it = b.groups.find(name);
  if (it == b.groups.end()) fail(ErrorKind::ValidationError, "unknown group '" + name + "'");
  return it->second;
}

const NamedHom& hom_arg(const Bundle& b, const std::string& name) {
  auto it = b.homs.find(name);
  if (it == b.homs.end()) fail(ErrorKind::ValidationError, "unknown hom '" + name + "'");
  return it->second;
}

const NamedExtension& ext_arg(const Bundle& b, const std::string& name) {
  auto it = b.extensions.find(name);
  if (it == b.extensions.end()) fail(ErrorKind::ValidationError, "unknown extension '" + name + "'");
  return it->second;
}

const NamedXExt& xext_arg(const Bundle& b, const std::string& name) {
  auto it = b.xexts.find(name);
  if (it == b.xexts.end()) fail(ErrorKind::ValidationError, "unknown xext '" + name + "'");
  return it->second;
}

std::string join_ints(const std::vector<Idx>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  return os.str();
}

std::string factors_text(const std::vector<Int>& factors) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) os << ", ";
    os << factors[i];
  }
  os << ']';
  return os.str();
}

int cmd_check(const Options& opt, Bundle& bundle) {
  const std::string& target = opt.args[1];
  std::ifstream probe(target);
  json out;
  if (probe) {
    parse_file_into(bundle, target);  // throws on bad input
    long long count = 0;
    for (const auto& item : bundle.items)
      if (item[0] == target) ++count;
    out["file"] = target;
    out["objects"] = count;
    if (opt.json_out)
      std::cout << out.dump(2) << '\n';
    else
      std::cout << "ok: " << target << " (" << count << " objects)\n";
    return 0;
  }
  // otherwise: a named object; parsing already validated it, so find its kind
  for (const auto& item : bundle.items)
    if (item[2] == target) {
      if (opt.json_out) {
        out["kind"] = item[1];
        out["name"] = target;
        out["valid"] = true;
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "ok: " << item[1] << " '" << target << "'\n";
      }
      return 0;
    }
  fail(ErrorKind::ValidationError, "no object or file named '" + target + "'");
}

int cmd_structure(const Options& opt, const Bundle& bundle) {
  const FiniteGroup& g = group_arg(bundle, opt.args[1]);
  GroupStructureReport rep = structure_of(g, opt.budget);
  if (opt.json_out) {
    json out;
    out["group"] = opt.args[1];
    out["order"] = g.order;
    out["abelian"] = g.is_abelian();
    out["center_order"] = rep.center.size();
    out["aut_order"] = rep.automorphisms.order;
    out["inn_order"] = rep.inner.size();
    out["out_order"] = rep.outer.order;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "group " << opt.args[1] << ": order " << g.order
              << (g.is_abelian() ? " (abelian: " + describe_abelian(g) + ")" : " (nonabelian)")
              << "\n|Z| = " << rep.center.size() << ", |Aut| = " << rep.automorphisms.order
              << ", |Inn| = " << rep.inner.size() << ", |Out| = " << rep.outer.order << '\n';
  }
  return 0;
}

int cmd_cohomology(const Options& opt, const Bundle& bundle) {
  int n = std::stoi(opt.args[1]);
  auto it = bundle.actions.find(opt.args[2]);
  if (it == bundle.actions.end())
    fail(ErrorKind::ValidationError, "unknown action '" + opt.args[2] + "'");
  CohomologyGroup h = cohomology_group(n, it->second.action, opt.budget);
  if (opt.json_out) {
    json out;
    out["degree"] = n;
    out["action"] = opt.args[2];
    out["invariant_factors"] = h.invariant_factors;
    out["order"] = h.order();
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "H^" << n << "(" << opt.args[2] << "): invariant factors: "
              << factors_text(h.invariant_factors) << ", order " << h.order() << '\n';
  }
  return 0;
}

int cmd_classify_opext(const Options& opt, const Bundle& bundle) {
  const NamedExtension& e = ext_arg(bundle, opt.args[1]);
  const NamedExtension& ep = ext_arg(bundle, opt.args[2]);
  const NamedHom& phi0 = hom_arg(bundle, opt.args[3]);
  const NamedHom& phi1 = hom_arg(bundle, opt.args[4]);
  ClassificationReport rep = classify(e.ext, ep.ext, phi0.hom, phi1.hom, opt.budget);
  if (opt.json_out) {
    json out;
    out["verdict"] = to_string(rep.verdict);
    out["homset_size"] = rep.homset.size();
    out["z1_order"] = rep.z1.size();
    out["cocycle_criterion"] = rep.cocycle_criterion;
    out["fibre_isomorphic"] = rep.fibre_iso.has_value();
    if (!rep.violation.empty()) out["violation"] = rep.violation;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "classify " << opt.args[1] << " -> " << opt.args[2] << " over (" << opt.args[3]
              << ", " << opt.args[4] << "): " << to_string(rep.verdict) << "; |homset| = "
              << rep.homset.size() << ", |Z1| = " << rep.z1.size()
              << (rep.cocycle_criterion ? "; cocycle criterion holds" : "; cocycle criterion fails")
              << '\n';
    if (!rep.violation.empty()) std::cout << "violation: " << rep.violation << '\n';
  }
  return rep.verdict == TorsorVerdict::Violation ? 1 : 0;
}

int cmd_transport(const Options& opt, const Bundle& bundle) {
  const NamedExtension& e = ext_arg(bundle, opt.args[1]);
  const NamedExtension& ep = ext_arg(bundle, opt.args[2]);
  const NamedHom& phi0 = hom_arg(bundle, opt.args[3]);
  const NamedHom& phi1 = hom_arg(bundle, opt.args[4]);
  TransportResult tr = transport(e.ext, ep.ext, phi0.hom, phi1.hom);
  if (opt.json_out) {
    json out;
    out["pushforward"]["order"] = tr.pushforward.e.order;
    out["pushforward"]["k"] = tr.pushforward.k.images;
    out["pushforward"]["f"] = tr.pushforward.f.images;
    out["pullback"]["order"] = tr.pullback.e.order;
    out["pullback"]["k"] = tr.pullback.k.images;
    out["pullback"]["f"] = tr.pullback.f.images;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "pushforward: middle group of order " << tr.pushforward.e.order << ", k = ["
              << join_ints(tr.pushforward.k.images) << "], f = ["
              << join_ints(tr.pushforward.f.images) << "]\n";
    std::cout << "pullback: middle group of order " << tr.pullback.e.order << ", k = ["
              << join_ints(tr.pullback.k.images) << "], f = [" << join_ints(tr.pullback.f.images)
              << "]\n";
  }
  return 0;
}

int cmd_butterfly_compose(const Options& opt, const Bundle& bundle) {
  auto b1 = bundle.butterflies.find(opt.args[1]);
  auto b2 = bundle.butterflies.find(opt.args[2]);
  if (b1 == bundle.butterflies.end() || b2 == bundle.butterflies.end())
    fail(ErrorKind::ValidationError, "unknown butterfly");
  Butterfly comp = compose_butterflies(b2->second.butterfly, b1->second.butterfly);
  ButterflyFlags flags = butterfly_flags(comp, opt.budget);
  ModuleMorphismPair pr = project(comp);
  if (opt.json_out) {
    json out;
    out["e_order"] = comp.e.order;
    out["representable"] = flags.representable;
    out["flippable"] = flags.flippable;
    out["phi0"] = pr.phi0.images;
    out["phi"] = pr.phi.images;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "composite butterfly: |E| = " << comp.e.order
              << (flags.representable ? ", representable" : ", not representable")
              << (flags.flippable ? ", flippable" : ", not flippable") << "; projects to phi0 = ["
              << join_ints(pr.phi0.images) << "], phi = [" << join_ints(pr.phi.images) << "]\n";
  }
  return 0;
}

int cmd_weak_homs(const Options& opt, const Bundle& bundle) {
  const NamedXExt& x = xext_arg(bundle, opt.args[1]);
  const NamedXExt& xp = xext_arg(bundle, opt.args[2]);
  const NamedHom& phi0 = hom_arg(bundle, opt.args[3]);
  const NamedHom& phi = hom_arg(bundle, opt.args[4]);
  WeakHomReport rep = weak_hom_set(x.xext, xp.xext, phi0.hom, phi.hom, opt.budget);
  bool consistent = rep.count_matches && rep.existence_matches;
  if (opt.json_out) {
    json out;
    out["classes"] = rep.classes.size();
    out["h2_order"] = rep.h2_order;
    out["cocycle_criterion"] = rep.cocycle_criterion;
    out["count_matches"] = rep.count_matches;
    out["existence_matches"] = rep.existence_matches;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "weak maps " << opt.args[1] << " -> " << opt.args[2] << ": "
              << rep.classes.size() << " classes; |H2| = " << rep.h2_order << "; criteria "
              << (consistent ? "agree" : "DISAGREE") << '\n';
  }
  return consistent ? 0 : 1;
}

int cmd_obstruction(const Options& opt, const Bundle& bundle) {
  auto it = bundle.akernels.find(opt.args[1]);
  if (it == bundle.akernels.end())
    fail(ErrorKind::ValidationError, "unknown abstract kernel '" + opt.args[1] + "'");
  Obstruction obs = obstruction_class(it->second.ak, opt.budget);
  if (opt.json_out) {
    json out;
    out["vanishes"] = obs.vanishes;
    out["cocycle_values"] = obs.cocycle.values;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "obstruction of " << opt.args[1] << ": "
              << (obs.vanishes ? "vanishes" : "does not vanish") << '\n';
  }
  return 0;
}

int cmd_sml(const Options& opt, const Bundle& bundle) {
  const FiniteGroup& c = group_arg(bundle, opt.args[1]);
  const FiniteGroup& k = group_arg(bundle, opt.args[2]);
  auto it = bundle.akernels.find(opt.args[3]);
  if (it == bundle.akernels.end())
    fail(ErrorKind::ValidationError, "unknown abstract kernel '" + opt.args[3] + "'");
  const AbstractKernel& ak = it->second.ak;
  if (!(ak.c == c) || !(ak.k == k))
    fail(ErrorKind::ValidationError, "abstract kernel does not match the given groups");
  SMLReport rep = sml_report(ak, opt.budget);
  bool ok = rep.violation.empty();
  if (opt.json_out) {
    json out;
    out["obstruction_vanishes"] = rep.obstruction_vanishes;
    out["classes"] = rep.ext_classes.size();
    out["h2_order"] = rep.h2.order();
    out["torsor_verified"] = rep.torsor_verified;
    if (!ok) out["violation"] = rep.violation;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << rep.ext_classes.size() << " extension class"
              << (rep.ext_classes.size() == 1 ? "" : "es") << "; H2 order " << rep.h2.order()
              << "; torsor " << (rep.torsor_verified ? "verified" : "not verified") << '\n';
    if (!ok) std::cout << "violation: " << rep.violation << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_verify(const Options& opt) {
  std::vector<std::string> suites;
  if (opt.suite.empty() || opt.suite == "all")
    suites = verify_suite_names();
  else
    suites = {opt.suite};
  bool all_pass = true;
  json out = json::array();
  for (const std::string& name : suites) {
    SuiteResult r = run_verify_suite(name, opt.seed, opt.budget, opt.fixtures_dir);
    all_pass = all_pass && r.pass;
    if (opt.json_out) {
      json jr;
      jr["suite"] = r.name;
      jr["pass"] = r.pass;
      jr["lines"] = r.lines;
      out.push_back(jr);
    } else {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << '\n';
      for (const std::string& l : r.lines) std::cout << "  " << l << '\n';
    }
  }
  if (opt.json_out) std::cout << out.dump(2) << '\n';
  return all_pass ? 0 : 1;
}

int dispatch(Options& opt) {
  if (opt.args.empty()) return usage();
  const std::string& cmd = opt.args[0];
  size_t need = 0;
  if (cmd == "check") need = 2;
  else if (cmd == "structure") need = 2;
  else if (cmd == "cohomology") need = 3;
  else if (cmd == "classify-opext" || cmd == "transport") need = 5;
  else if (cmd == "butterfly-compose") need = 3;
  else if (cmd == "weak-homs") need = 5;
  else if (cmd == "obstruction") need = 2;
  else if (cmd == "sml") need = 4;
  else if (cmd == "verify") need = 1;
  else return usage();
  if (opt.args.size() != need) return usage();

  if (cmd == "verify") return cmd_verify(opt);

  Bundle bundle = parse_bundle(opt.bundles);
  if (cmd == "check") return cmd_check(opt, bundle);
  if (cmd == "structure") return cmd_structure(opt, bundle);
  if (cmd == "cohomology") return cmd_cohomology(opt, bundle);
  if (cmd == "classify-opext") return cmd_classify_opext(opt, bundle);
  if (cmd == "transport") return cmd_transport(opt, bundle);
  if (cmd == "butterfly-compose") return cmd_butterfly_compose(opt, bundle);
  if (cmd == "weak-homs") return cmd_weak_homs(opt, bundle);
  if (cmd == "obstruction") return cmd_obstruction(opt, bundle);
  if (cmd == "sml") return cmd_sml(opt, bundle);
  return usage();
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    auto next = [&](const char* what) -> std::string {
      if (i + 1 >= argc) {
        std::cerr << "missing value for " << what << '\n';
        std::exit(2);
      }
      return argv[++i];
    };
    if (a == "--bundle") opt.bundles.push_back(next("--bundle"));
    else if (a == "--json") opt.json_out = true;
    else if (a == "--seed") opt.seed = std::stoull(next("--seed"));
    else if (a == "--budget") opt.budget = std::stoll(next("--budget"));
    else if (a == "--suite") opt.suite = next("--suite");
    else if (a == "--fixtures") opt.fixtures_dir = next("--fixtures");
    else if (a == "--help" || a == "-h") return usage();
    else opt.args.push_back(a);
  }
  try {
    return dispatch(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::BudgetExceeded) return 3;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
