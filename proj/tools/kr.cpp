// kr: enumeration of permissible/admissible faces, identity checks and
// witness verification. Exit codes: 0 pass, 1 counterexample, 2 usage.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cache.hpp"
#include "json.hpp"
#include "kr/faces.hpp"
#include "kr/order.hpp"
#include "kr/permadm.hpp"
#include "kr/witness.hpp"

namespace {

using namespace kr;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;
constexpr std::size_t kDotLimit = 500;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JobOptions {
  std::string group = "gl";
  std::size_t n = 0;
  std::size_t g = 0;
  std::string mu;
  std::string i_set = "iwahori";
  std::string j_set;
  std::string format = "json";
};

struct Job {
  Group group;
  std::size_t n;
  IntVec mu;
  FaceType type;
};

std::vector<long> parse_list(const std::string& s, const char* what) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("cannot parse ") + what + ": '" + s + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(what) + " is empty");
  return out;
}

FaceType parse_type(const std::string& s, std::size_t n, const char* what) {
  if (s == "iwahori") return FaceType::iwahori(n);
  const auto raw = parse_list(s, what);
  std::vector<int> idx;
  for (long i : raw) {
    if (i < 0 || i >= static_cast<long>(n)) throw UsageError(std::string(what) + " entries must lie in [0, n)");
    idx.push_back(static_cast<int>(i));
  }
  return FaceType(n, idx);
}

Job make_job(const JobOptions& o) {
  Job job{Group::GL, 0, {}, {}};
  try {
    job.group = group_from_string(o.group);
  } catch (const std::exception&) {
    throw UsageError("--group must be gl or gsp");
  }
  if (job.group == Group::GSp) {
    if (o.g == 0) throw UsageError("gsp requires --g");
    job.n = 2 * o.g;
  } else {
    if (o.n == 0) throw UsageError("gl requires --n");
    job.n = o.n;
  }
  job.mu = parse_list(o.mu, "--mu");
  if (job.mu.size() != job.n) throw UsageError("--mu must have n entries");
  job.type = parse_type(o.i_set, job.n, "--I");
  try {
    check_configuration(job.mu, job.type, job.group);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  return job;
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

std::string join(const std::vector<int>& v) { return join(std::vector<long>(v.begin(), v.end())); }

std::string cache_key(const std::string& kind, const Job& job) {
  return std::string("v") + cli::kToolVersion + "|" + kind + "|" + to_string(job.group) + "|" + std::to_string(job.n) +
         "|" + join(job.mu) + "|" + join(job.type.indices());
}

std::vector<Face> face_set(const std::string& kind, const Job& job) {
  const auto cache = cli::FaceCache::from_environment();
  const std::string key = cache_key(kind, job);
  if (auto hit = cache.load(key)) return *hit;
  std::vector<Face> faces;
  if (kind == "perm") {
    faces = perm_set(job.mu, job.type, job.group);
  } else if (kind == "adm") {
    faces = adm_set(job.mu, job.type, job.group);
  } else {
    faces = sp_perm_intersection(job.mu, job.type);
  }
  cache.store(key, faces);
  return faces;
}

std::string face_label(const Face& f) {
  std::string s;
  for (std::size_t k = 0; k < f.vectors.size(); ++k) {
    if (k) s += " ";
    s += "v" + std::to_string(f.type.indices()[k]) + "=(" + join(f.vectors[k]) + ")";
  }
  return s;
}

std::string hasse_dot(const std::vector<Face>& faces) {
  std::vector<AffineElement> reps;
  std::vector<long> lens;
  for (const Face& f : faces) {
    reps.push_back(min_coset_rep(f));
    lens.push_back(length(reps.back()));
  }
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for (std::size_t a = 0; a < faces.size(); ++a)
    os << "  f" << a << " [label=\"" << face_label(faces[a]) << "\\nlength " << lens[a] << "\"];\n";
  for (std::size_t a = 0; a < faces.size(); ++a)
    for (std::size_t b = 0; b < faces.size(); ++b)
      if (lens[b] == lens[a] + 1 && bruhat_leq(reps[a], reps[b])) os << "  f" << a << " -> f" << b << ";\n";
  os << "}\n";
  return os.str();
}

json job_json(const std::string& kind, const Job& job) {
  return json{{"kind", kind}, {"group", to_string(job.group)}, {"n", job.n}, {"mu", job.mu}, {"I", job.type.indices()}};
}

int cmd_enum(const std::string& kind, const JobOptions& o) {
  const Job job = make_job(o);
  const auto faces = face_set(kind, job);
  if (o.format == "dot") {
    if (faces.size() > kDotLimit) {
      std::cerr << "kr: " << faces.size() << " elements exceed the DOT limit of " << kDotLimit << "; emitting JSON\n";
    } else {
      std::cout << hasse_dot(faces);
      return kPass;
    }
  }
  if (o.format == "text") {
    for (const Face& f : faces) std::cout << face_label(f) << "\n";
    return kPass;
  }
  json j = job_json(kind, job);
  j["count"] = faces.size();
  j["faces"] = faces;
  std::cout << j.dump(1) << "\n";
  return kPass;
}

int emit_check(json report, bool ok, const JobOptions& o) {
  report["pass"] = ok;
  if (o.format == "text") {
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) std::cout << report.dump() << "\n";
  } else {
    std::cout << report.dump(1) << "\n";
  }
  return ok ? kPass : kCounterexample;
}

int cmd_check(const std::string& kind, const JobOptions& o) {
  const Job job = make_job(o);
  json report = job_json(kind, job);
  if (kind == "eq") {
    const auto rep = compare_face_sets(face_set("perm", job), face_set("adm", job));
    report["report"] = rep;
    return emit_check(std::move(report), rep.equal, o);
  }
  if (kind == "surj") {
    if (o.j_set.empty()) throw UsageError("check surj requires --J");
    const FaceType j_type = parse_type(o.j_set, job.n, "--J");
    if (!j_type.is_subset_of(job.type)) throw UsageError("--J must be a subset of --I");
    if (job.group == Group::GSp && !j_type.symmetric()) throw UsageError("gsp requires a symmetric --J");
    const auto rep = perm_surjectivity_check(job.mu, job.type, j_type, job.group);
    report["J"] = j_type.indices();
    report["report"] = rep;
    return emit_check(std::move(report), rep.surjective, o);
  }
  if (job.group != Group::GSp) throw UsageError("check intersect requires --group gsp");
  const auto perm_g = face_set("perm", job);
  const auto with_gl = compare_face_sets(perm_g, face_set("intersect", job));
  const auto with_adm = compare_face_sets(perm_g, face_set("adm", job));
  report["perm_vs_intersection"] = with_gl;
  report["perm_vs_adm"] = with_adm;
  return emit_check(std::move(report), with_gl.equal && with_adm.equal, o);
}

int cmd_verify_witness(const std::string& file, const std::string& format) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open " + file);
  Witness w;
  try {
    w = witness_from_json(json::parse(in));
  } catch (const std::exception& ex) {
    throw UsageError(std::string("cannot parse witness: ") + ex.what());
  }
  const WitnessReport rep = verify_witness(w);
  if (format == "text") {
    std::cout << (rep.ok() ? "PASS" : "FAIL") << "\n";
    if (!rep.ok()) std::cout << json(rep).dump() << "\n";
  } else {
    std::cout << json(rep).dump(1) << "\n";
  }
  return rep.ok() ? kPass : kCounterexample;
}

int cmd_lift(const std::string& group, std::size_t e, long p, const std::string& nu_s, bool constant) {
  Group g;
  try {
    g = group_from_string(group);
  } catch (const std::exception&) {
    throw UsageError("--group must be gl or gsp");
  }
  const IntVec nu = parse_list(nu_s, "--nu");
  Witness w;
  try {
    if (constant) {
      w = constant_lift(p, e, nu, g);
    } else {
      const auto model = block_model(e, p, nu);
      if (!model) throw UsageError("block sizes need a size in [0, e] and, unless they form a divisibility chain, p = 1 mod e");
      const auto lifted = block_lift(*model, g);
      if (!lifted) throw UsageError("construct_M failed for some block");
      w = *lifted;
    }
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  std::cout << witness_to_json(w).dump(1) << "\n";
  return kPass;
}

void add_job_options(CLI::App* sub, JobOptions& o, bool with_j) {
  sub->add_option("--group", o.group, "gl or gsp")->check(CLI::IsMember({"gl", "gsp"}));
  sub->add_option("--n", o.n, "rank (gl)");
  sub->add_option("--g", o.g, "genus (gsp, rank 2g)");
  sub->add_option("--mu", o.mu, "dominant coweight, comma separated")->required();
  sub->add_option("--I", o.i_set, "index set, comma separated, or iwahori");
  if (with_j) sub->add_option("--J", o.j_set, "target index set for surj");
  sub->add_option("--format", o.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kottwitz-Rapoport alcove combinatorics and lifting witnesses"};
  app.require_subcommand(1);

  JobOptions enum_opts;
  std::string enum_kind;
  auto* enum_cmd = app.add_subcommand("enum", "enumerate a face set");
  enum_cmd->add_option("kind", enum_kind, "perm or adm")->required()->check(CLI::IsMember({"perm", "adm"}));
  add_job_options(enum_cmd, enum_opts, false);

  JobOptions check_opts;
  std::string check_kind;
  auto* check_cmd = app.add_subcommand("check", "check an identity; exit 1 with a counterexample on failure");
  check_cmd->add_option("kind", check_kind, "eq, surj or intersect")->required()->check(CLI::IsMember({"eq", "surj", "intersect"}));
  add_job_options(check_cmd, check_opts, true);

  std::string witness_file;
  std::string witness_format = "json";
  auto* verify_cmd = app.add_subcommand("verify-witness", "verify a matrix witness file");
  verify_cmd->add_option("file", witness_file, "witness JSON")->required();
  verify_cmd->add_option("--format", witness_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string lift_group = "gl";
  std::size_t lift_e = 1;
  long lift_p = 5;
  std::string lift_nu;
  bool lift_constant = false;
  auto* lift_cmd = app.add_subcommand("lift", "emit a block-diagonal lift witness");
  lift_cmd->add_option("--group", lift_group, "gl or gsp")->check(CLI::IsMember({"gl", "gsp"}));
  lift_cmd->add_option("--e", lift_e, "ramification degree")->required()->check(CLI::PositiveNumber);
  lift_cmd->add_option("--p", lift_p, "prime")->check(CLI::PositiveNumber);
  lift_cmd->add_option("--nu", lift_nu, "block sizes, comma separated")->required();
  lift_cmd->add_flag("--constant", lift_constant, "0/1 lift with blocks I_e or empty");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int rc = app.exit(ex);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*enum_cmd) return cmd_enum(enum_kind, enum_opts);
    if (*check_cmd) return cmd_check(check_kind, check_opts);
    if (*verify_cmd) return cmd_verify_witness(witness_file, witness_format);
    if (*lift_cmd) return cmd_lift(lift_group, lift_e, lift_p, lift_nu, lift_constant);
  } catch (const UsageError& ex) {
    std::cerr << "kr: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "kr: " << ex.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
