// cmdef: batch front end for building modules, invariant slices, cohomology
// queries and certificates. One job per invocation, output is deterministic.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cmdef/builders.hpp"
#include "cmdef/certify.hpp"
#include "cmdef/cohom.hpp"
#include "cmdef/invariants.hpp"
#include "cmdef/json_io.hpp"

namespace {

using namespace cmdef;

enum Exit : int { ok = 0, invalid = 2, cap = 3, structural = 4 };

struct JobSpec {
  std::string group = "SL2";
  unsigned p = 2;
  std::size_t k = 2;
  std::string example;
  std::string theorem;
  std::string module_file;
  std::optional<unsigned> degree;
  std::optional<unsigned> max_degree;
  std::string out;
  bool roberts = false;
  bool annihilators = false;
  Caps caps = Caps::from_env();
};

void add_common(CLI::App* cmd, JobSpec& job) {
  cmd->add_option("--group", job.group, "SL2, Ga or Gm")->capture_default_str();
  cmd->add_option("-p", job.p, "characteristic")->capture_default_str();
  cmd->add_option("-k", job.k, "number of annihilators / extension copies")->capture_default_str();
  cmd->add_option("--example", job.example, "ex51, ex52a, ex52b or thm52");
  cmd->add_option("--theorem", job.theorem, "construction id: 4.7, 4.8 or 4.9");
  cmd->add_option("--out", job.out, "output path (stdout when omitted)");
  cmd->add_option("--cap-basis", job.caps.max_basis, "Groebner basis / unknown cap")->capture_default_str();
  cmd->add_option("--cap-degree", job.caps.max_degree, "degree cap")->capture_default_str();
}

// The projection cocycle of F^p(V) inside S^p(V) for the natural module.
Cocycle natural_projection_cocycle(const JobSpec& job) {
  auto v = natural_module(builtin_group(job.group, job.p));
  return cocycle_from_projection(frobenius_power(v)).cocycle;
}

BuiltInstance resolve(const JobSpec& job) {
  if (!job.example.empty() && !job.theorem.empty()) throw InvalidArgument("give --example or --theorem, not both");
  if (!job.example.empty()) return build_example(job.example, job.p, job.k, job.caps);
  if (job.theorem == "4.7") return build_extension_sum(natural_projection_cocycle(job), job.k, job.caps);
  if (job.theorem == "4.8") return build_extension_blocks(natural_projection_cocycle(job), job.k, std::nullopt, job.caps);
  if (job.theorem == "4.9")
    return build_frobenius_module(natural_module(builtin_group(job.group, job.p)), job.k, job.caps);
  if (job.theorem.empty()) throw InvalidArgument("need --example or --theorem");
  throw InvalidArgument("unknown construction '" + job.theorem + "'");
}

void emit(const JobSpec& job, const std::string& text) {
  if (job.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(job.out, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + job.out);
  f << text;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

int run_build(const JobSpec& job) {
  auto inst = resolve(job);
  const auto& m = inst.module();
  auto faithful = is_faithful(m, job.caps);
  if (!faithful) throw ResourceCapExceeded("faithfulness check");
  std::ostream& os = job.out.empty() ? std::cerr : std::cout;
  emit(job, dump(to_json(m)));
  os << "module: " << inst.input.name << "\n"
     << "group: " << m.group().name() << " p=" << m.p() << "\n"
     << "dimension: " << m.dim() << "\n"
     << "basis: " << join(m.labels(), " ") << "\n"
     << "faithful: " << (*faithful ? "yes" : "no") << "\n"
     << "cocycle degree: " << inst.input.cocycle.degree << "\n"
     << "annihilators: " << inst.input.annihilators.size() << "\n";
  if (job.k < 2) os << "note: k < 2, the bound cmdef >= k-2 is trivial\n";
  else os << "bound if certified: cmdef >= " << job.k - 2 << "\n";
  for (const auto& n : inst.notes) os << "note: " << n << "\n";
  return ok;
}

int run_certify(const JobSpec& job) {
  auto inst = resolve(job);
  std::optional<Certificate> cert;
  if (job.roberts) {
    auto t = roberts_transfer(inst, job.caps);
    if (!t.certificate) throw VerificationFailed(t.status);
    cert = std::move(t.certificate);
  } else {
    cert = certify_cmdef(inst.input, job.caps);
  }
  emit(job, dump(to_json(*cert)));
  if (!job.out.empty())
    std::cout << "certified " << cert->name << ": cmdef >= " << cert->conclusion << " (" << job.out << ")\n";
  return ok;
}

int run_verify(const std::string& path, const Caps& caps) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot read " + path);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  auto cert = certificate_from_json(j);
  auto report = verify_certificate(cert, caps);
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) std::cout << " [" << c.code << "]: " << c.detail;
    std::cout << "\n";
  }
  if (report.ok()) {
    std::cout << "verified: cmdef >= " << cert.conclusion << "\n";
  } else {
    for (const auto& c : report.checks)
      if (!c.passed) {
        std::cout << "verification failed: " << c.name << "\n";
        break;
      }
  }
  return report.exit_code();
}

int run_invariants(const JobSpec& job) {
  RingPtr ring;
  if (!job.module_file.empty()) {
    std::ifstream f(job.module_file, std::ios::binary);
    if (!f) throw InvalidArgument("cannot read " + job.module_file);
    Json j;
    try {
      j = Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
    ring = make_ring(representation_from_json(j));
  } else if (!job.example.empty() || !job.theorem.empty()) {
    ring = resolve(job).input.ring;
  } else {
    ring = make_ring(natural_module(builtin_group(job.group, job.p)));
  }
  unsigned lo = 0, hi = 0;
  if (job.degree) lo = hi = *job.degree;
  else if (job.max_degree) hi = *job.max_degree;
  else throw InvalidArgument("need --degree or --max-degree");
  Json out = Json::array();
  for (unsigned d = lo; d <= hi; ++d) out.push_back(to_json(invariant_slice(*ring, d, job.caps)));
  emit(job, dump(out));
  return ok;
}

Json evidence_json(const SolveResult& r) {
  return {{"unknowns", r.unknowns}, {"equations", r.equations}, {"rank", r.rank}, {"augmented_rank", r.augmented_rank}};
}

int run_cohom(const JobSpec& job) {
  Json out;
  if (job.annihilators) {
    if (!job.degree) throw InvalidArgument("--annihilators needs --degree");
    auto inst = resolve(job);
    auto space = annihilator_space(inst.input.cocycle, *job.degree, job.caps);
    Json basis = Json::array();
    for (const auto& a : space.basis) basis.push_back(a.to_string());
    out = {{"query", "annihilators"},
           {"instance", inst.input.name},
           {"degree", *job.degree},
           {"candidates", space.candidates},
           {"dimension", space.basis.size()},
           {"basis", basis}};
  } else if (!job.example.empty() || !job.theorem.empty()) {
    auto inst = resolve(job);
    auto r = is_coboundary(inst.input.cocycle, job.caps);
    Json comps = Json::array();
    for (const auto& c : r.components)
      comps.push_back({{"multidegree", c.multidegree}, {"evidence", evidence_json(c.evidence)}});
    out = {{"query", "is_coboundary"},
           {"instance", inst.input.name},
           {"cocycle", inst.input.cocycle.poly.to_string()},
           {"result", r.witness ? "coboundary" : "nontrivial"},
           {"witness", r.witness ? Json(r.witness->to_string()) : Json(nullptr)},
           {"evidence", comps}};
  } else {
    auto g = natural_projection_cocycle(job);
    auto r = is_coboundary(g);
    Json comps = Json::array();
    for (const auto& c : g.components) comps.push_back(c.to_string());
    out = {{"query", "is_coboundary"},
           {"instance", "projection cocycle of F^p(V) in S^p(V), V natural"},
           {"group", job.group},
           {"p", job.p},
           {"target_dim", g.target.dim()},
           {"cocycle", comps},
           {"result", r.witness ? "coboundary" : "nontrivial"},
           {"witness", r.witness ? Json(*r.witness) : Json(nullptr)},
           {"evidence", evidence_json(r.evidence)}};
  }
  emit(job, dump(out));
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cmdef: certified lower bounds on the Cohen-Macaulay defect of invariant rings"};
  app.require_subcommand(1);
  JobSpec job;
  std::string cert_path;

  auto* build = app.add_subcommand("build", "build a module and print a summary");
  add_common(build, job);
  auto* certify = app.add_subcommand("certify", "build and certify an instance");
  add_common(certify, job);
  certify->add_flag("--roberts", job.roberts, "certify over Ga through restriction of the SL2 instance");
  auto* verify = app.add_subcommand("verify", "re-run every check of a certificate file");
  verify->add_option("certificate", cert_path, "certificate JSON")->required();
  verify->add_option("--cap-basis", job.caps.max_basis, "Groebner basis / unknown cap");
  verify->add_option("--cap-degree", job.caps.max_degree, "degree cap");
  auto* invariants = app.add_subcommand("invariants", "invariant slices as JSON");
  add_common(invariants, job);
  invariants->add_option("--module", job.module_file, "module JSON written by build");
  invariants->add_option("--degree", job.degree, "single degree");
  invariants->add_option("--max-degree", job.max_degree, "degrees 0..max");
  auto* cohom = app.add_subcommand("cohom", "cohomology queries as JSON");
  add_common(cohom, job);
  cohom->add_flag("--is-coboundary", "decide whether the cocycle is a coboundary (default)");
  cohom->add_flag("--annihilators", job.annihilators, "annihilator space in degree --degree");
  cohom->add_option("--degree", job.degree, "degree for --annihilators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return invalid;
  }

  try {
    if (*build) return run_build(job);
    if (*certify) return run_certify(job);
    if (*verify) return run_verify(cert_path, job.caps);
    if (*invariants) return run_invariants(job);
    if (*cohom) return run_cohom(job);
  } catch (const PremiseFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cap;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invalid;
  } catch (const RingMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return structural;
  }
  return invalid;
}
