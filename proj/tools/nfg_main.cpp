// Copyright 2026 The nfg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// nfg: command-line front end. Exit status 0 on success, 1 when a
// verification exceeds --tol, 2 on input errors.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nfg/code.hpp"
#include "nfg/duality.hpp"
#include "nfg/error.hpp"
#include "nfg/evaluate.hpp"
#include "nfg/fkt.hpp"
#include "nfg/holo.hpp"
#include "nfg/io.hpp"
#include "nfg/marked.hpp"
#include "nfg/perfmatch.hpp"
#include "nfg/random.hpp"
#include "nfg/rewrite.hpp"

namespace {

using nfg::io::Json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct Globals {
  bool json = false;
  std::string out;
  double tol = 1e-9;
  uint64_t seed = 1;
};

nfg::Tolerance tolerance(const Globals& g) { return {g.tol, 1e-12}; }

std::string tensor_text(const nfg::LocalFunction& f) {
  if (f.arity() == 0) return nfg::format_scalar(f.value()) + "\n";
  std::ostringstream s;
  s << "ports:";
  for (const auto& p : f.ports()) s << ' ' << p.to_string();
  s << '\n';
  for (size_t i = 0; i < f.size(); ++i) {
    const auto c = f.coords_of(i);
    s << '(';
    for (size_t k = 0; k < c.size(); ++k) s << (k ? "," : "") << c[k];
    s << ") " << nfg::format_scalar(f[i]) << '\n';
  }
  return s.str();
}

std::string deviation_text(double d) {
  std::ostringstream s;
  s.precision(6);
  s << d;
  return s.str();
}

// Prints either the text or the JSON document, and writes `artifact` to
// --out when requested.
void emit(const Globals& g, const Json& doc, const std::string& text, const Json* artifact = nullptr) {
  if (artifact && !g.out.empty()) nfg::io::write_text_file(g.out, artifact->dump(2) + "\n");
  if (g.json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

// NFG-producing commands print the NFG itself unless --out takes it.
void emit_nfg(const Globals& g, const std::string& command, const nfg::NFG& n, Json extra = Json::object()) {
  const Json nj = nfg::io::nfg_to_json(n);
  Json doc{{"command", command}, {"nfg", nj}};
  for (auto& [k, v] : extra.items()) doc[k] = v;
  std::ostringstream text;
  if (g.out.empty()) {
    text << nj.dump(2) << '\n';
  } else {
    text << "vertices: " << n.vertices().size() << "\ninternal edges: " << n.internal_edges().size()
         << "\ndangling edges: " << n.dangling_edges().size() << "\nwritten: " << g.out << '\n';
  }
  for (auto& [k, v] : extra.items()) text << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  emit(g, doc, text.str(), &nj);
}

nfg::NFG load_nfg(const std::string& path) { return nfg::io::nfg_from_json(nfg::io::read_json_file(path)); }

nfg::EdgeId parse_edge(const nfg::NFG& n, const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "int") {
    try {
      return nfg::EdgeId::internal(std::stoul(rest));
    } catch (const std::exception&) {
    }
  } else if (kind == "ext") {
    for (size_t j = 0; j < n.dangling_edges().size(); ++j)
      if (n.dangling_edges()[j].label == rest) return nfg::EdgeId::dangling(j);
    try {
      return nfg::EdgeId::dangling(std::stoul(rest));
    } catch (const std::exception&) {
    }
  }
  throw nfg::Error(nfg::ErrorCode::kInvalidArgument, "edge must be int:<index> or ext:<index|label>, got " + spec);
}

nfg::DualPair parse_pair(const nfg::Alphabet& x, const std::string& spec) {
  if (spec == "identity") return {nfg::delta_eq(x, 2), nfg::delta_eq(x, 2), 1, 1};
  if (spec == "kappa") {
    return {nfg::Transformer::kappa(x).as_function(), nfg::Transformer::kappa_hat(x).as_function(), 1, 1};
  }
  const Json j = nfg::io::read_json_file(spec);
  auto load = [&](const char* key) {
    if (!j.contains(key)) throw nfg::Error(nfg::ErrorCode::kParseError, spec + ": missing \"" + key + "\"");
    std::vector<nfg::Scalar> v;
    for (const auto& row : j[key])
      for (const auto& z : row) v.push_back(nfg::io::scalar_from_json(z));
    const size_t cols = j[key].empty() ? 0 : j[key][0].size();
    const nfg::Alphabet y = cols == x.size() ? x : nfg::Alphabet::plain(cols);
    return nfg::LocalFunction({x, y}, std::move(v));
  };
  return {load("phi"), load("phihat"), 1, 1};
}

int cmd_eval(const Globals& g, const std::string& file, const std::string& mode) {
  const nfg::NFG n = load_nfg(file);
  if (mode != "brute" && mode != "eliminate") {
    throw nfg::Error(nfg::ErrorCode::kInvalidArgument, "mode must be brute or eliminate");
  }
  const auto z = nfg::eval_exterior(n, mode == "brute" ? nfg::EvalMode::kBrute : nfg::EvalMode::kEliminate);
  const Json tj = nfg::io::tensor_to_json(z);
  emit(g, Json{{"command", "eval"}, {"mode", mode}, {"exterior", tj}}, tensor_text(z), &tj);
  return kOk;
}

int cmd_normalize(const Globals& g, const std::string& file) {
  const auto m = nfg::io::marked_from_json(nfg::io::read_json_file(file));
  emit_nfg(g, "normalize", nfg::normalize(m));
  return kOk;
}

struct RewriteArgs {
  std::string file;
  std::string op;
  std::vector<std::string> vertices;
  std::string vertex;
  std::string vertex2;
  std::string edge;
  std::string fragment;
  std::string pair = "kappa";
  std::string new_id;
  bool verify = false;
};

int cmd_rewrite(const Globals& g, const RewriteArgs& a) {
  const nfg::NFG n = load_nfg(a.file);
  const auto tol = tolerance(g);
  auto need = [](const std::string& v, const char* what) {
    if (v.empty()) throw nfg::Error(nfg::ErrorCode::kInvalidArgument, std::string("--") + what + " is required");
  };
  nfg::NFG out = n;
  if (a.op == "group") {
    if (a.vertices.empty()) throw nfg::Error(nfg::ErrorCode::kInvalidArgument, "--vertices is required");
    out = nfg::vertex_group(n, a.vertices, a.new_id.empty() ? std::nullopt : std::optional(a.new_id));
  } else if (a.op == "split") {
    need(a.vertex, "vertex");
    need(a.fragment, "fragment");
    out = nfg::vertex_split(n, a.vertex, load_nfg(a.fragment), tol);
  } else if (a.op == "eq-insert") {
    need(a.edge, "edge");
    out = nfg::equality_insert(n, parse_edge(n, a.edge));
  } else if (a.op == "eq-delete") {
    need(a.vertex, "vertex");
    out = nfg::equality_delete(n, a.vertex, tol);
  } else if (a.op == "dual-insert") {
    need(a.edge, "edge");
    const auto e = parse_edge(n, a.edge);
    out = nfg::dual_vertex_insert(n, e, parse_pair(n.alphabet(e), a.pair), tol);
  } else if (a.op == "dual-delete") {
    need(a.vertex, "vertex");
    need(a.vertex2, "vertex2");
    out = nfg::dual_vertex_delete(n, a.vertex, a.vertex2, tol);
  } else {
    throw nfg::Error(nfg::ErrorCode::kInvalidArgument, "unknown rewrite op " + a.op);
  }
  Json extra = Json::object();
  int code = kOk;
  if (a.verify) {
    const auto r = nfg::compare_exteriors(n, out, nfg::EvalMode::kEliminate, tol);
    extra["deviation"] = r.max_deviation;
    extra["preserved"] = r.preserved;
    if (!r.preserved) code = kVerifyFailed;
  }
  emit_nfg(g, "rewrite", out, extra);
  return code;
}

int cmd_transform(const Globals& g, const std::string& file, const std::string& assign) {
  const nfg::NFG n = load_nfg(file);
  const auto a = nfg::io::assignment_from_json(nfg::io::read_json_file(assign), n);
  emit_nfg(g, "transform", nfg::holographic_transform(n, a, tolerance(g)));
  return kOk;
}

// Shared tail of the random self-test modes.
int report_random(const Globals& g, const std::string& command, size_t count, double worst, size_t failures) {
  std::ostringstream text;
  text << "instances: " << count << "\nseed: " << g.seed << "\nmax deviation: " << deviation_text(worst)
       << "\nfailures: " << failures << '\n';
  emit(g, Json{{"command", command}, {"instances", count}, {"seed", g.seed}, {"max_deviation", worst},
               {"failures", failures}},
       text.str());
  return failures ? kVerifyFailed : kOk;
}

int cmd_verify_holant(const Globals& g, const std::string& file, const std::string& assign, size_t random) {
  const auto tol = tolerance(g);
  if (random > 0) {
    nfg::random::Rng rng(g.seed);
    double worst = 0.0;
    size_t failures = 0;
    for (size_t i = 0; i < random; ++i) {
      const nfg::NFG n = nfg::random::random_nfg(rng);
      const auto a = nfg::random::random_assignment(rng, n);
      const auto r = nfg::verify_holant(n, a, nfg::EvalMode::kEliminate, tol);
      worst = std::max(worst, r.max_deviation);
      failures += !r.preserved;
    }
    return report_random(g, "verify-holant", random, worst, failures);
  }
  const nfg::NFG n = load_nfg(file);
  const auto a = nfg::io::assignment_from_json(nfg::io::read_json_file(assign), n);
  const auto r = nfg::verify_holant(n, a, nfg::EvalMode::kEliminate, tol);
  const Json doc{{"command", "verify-holant"},
                 {"transformed_exterior", nfg::io::tensor_to_json(*r.after)},
                 {"expected", nfg::io::tensor_to_json(*r.before)},
                 {"deviation", r.max_deviation},
                 {"ok", r.preserved}};
  std::ostringstream text;
  text << "Z of transformed NFG:\n" << tensor_text(*r.after) << "deviation: " << deviation_text(r.max_deviation)
       << "\n" << (r.preserved ? "ok" : "FAILED") << '\n';
  emit(g, doc, text.str());
  return r.preserved ? kOk : kVerifyFailed;
}

int cmd_dualize(const Globals& g, const std::string& file) {
  emit_nfg(g, "dualize", nfg::dualize(load_nfg(file)));
  return kOk;
}

int cmd_verify_duality(const Globals& g, const std::string& file, size_t random) {
  const auto tol = tolerance(g);
  if (random > 0) {
    nfg::random::Rng rng(g.seed);
    nfg::random::NfgShape shape;
    shape.alphabets = {nfg::Alphabet::parse("Z2"), nfg::Alphabet::parse("Z3"), nfg::Alphabet::parse("Z2xZ2")};
    double worst = 0.0;
    size_t failures = 0;
    for (size_t i = 0; i < random; ++i) {
      const auto r = nfg::verify_duality(nfg::random::random_nfg(rng, shape), nfg::EvalMode::kEliminate, tol);
      worst = std::max(worst, r.max_deviation);
      failures += !r.ok;
    }
    return report_random(g, "verify-duality", random, worst, failures);
  }
  const auto r = nfg::verify_duality(load_nfg(file), nfg::EvalMode::kEliminate, tol);
  const Json doc{{"command", "verify-duality"},
                 {"scale", r.scale},
                 {"dual_exterior", nfg::io::tensor_to_json(*r.dual_exterior)},
                 {"deviation", r.max_deviation},
                 {"ok", r.ok}};
  std::ostringstream text;
  text << "Z of dual NFG:\n" << tensor_text(*r.dual_exterior) << "scale |X_int|: " << r.scale
       << "\ndeviation: " << deviation_text(r.max_deviation) << "\n" << (r.ok ? "ok" : "FAILED") << '\n';
  emit(g, doc, text.str());
  return r.ok ? kOk : kVerifyFailed;
}

int cmd_code_dual(const Globals& g, const std::string& file, const std::string& nfg_file) {
  const nfg::GroupCode c = nfg::io::code_from_json(nfg::io::read_json_file(file));
  const nfg::NFG n = nfg_file.empty() ? nfg::code_nfg(c) : load_nfg(nfg_file);
  const auto r = nfg::verify_code_duality(n, c, tolerance(g));
  const nfg::GroupCode perp = nfg::dual_code_brute(c);
  const Json pj = nfg::io::code_to_json(perp);
  const Json doc{{"command", "code-dual"},  {"code_size", r.code_size},  {"dual_size", r.dual_size},
                 {"s", r.scale},            {"s_dual", r.dual_scale},    {"s_dual_predicted", r.predicted_dual_scale},
                 {"deviation", r.max_deviation}, {"ok", r.ok},          {"dual_code", pj}};
  std::ostringstream text;
  text << "|C|: " << r.code_size << "\n|C_perp|: " << r.dual_size << "\ns: " << r.scale << "\ns': " << r.dual_scale
       << "\npredicted s': " << r.predicted_dual_scale << "\ndeviation: " << deviation_text(r.max_deviation) << "\n"
       << (r.ok ? "ok" : "FAILED") << '\n';
  emit(g, doc, text.str(), &pj);
  return r.ok ? kOk : kVerifyFailed;
}

int cmd_perfmatch(const Globals& g, const std::string& file, bool fkt) {
  const auto gf = nfg::io::graph_from_json(nfg::io::read_json_file(file));
  nfg::Scalar v;
  if (fkt) {
    if (!gf.embedding) throw nfg::Error(nfg::ErrorCode::kInvalidEmbedding, "--fkt needs a \"rotation\" in " + file);
    v = nfg::fkt_perfmatch(gf.graph, *gf.embedding);
  } else {
    v = nfg::perfmatch_brute(gf.graph);
  }
  emit(g, Json{{"command", "perfmatch"}, {"method", fkt ? "fkt" : "brute"}, {"value", nfg::io::scalar_to_json(v)}},
       nfg::format_scalar(v) + "\n");
  return kOk;
}

int cmd_signature(const Globals& g, const std::string& file) {
  const auto gf = nfg::io::graph_from_json(nfg::io::read_json_file(file));
  const auto mu = nfg::signature({gf.graph, gf.external});
  const Json tj = nfg::io::tensor_to_json(mu);
  emit(g, Json{{"command", "signature"}, {"signature", tj}}, tensor_text(mu), &tj);
  return kOk;
}

int cmd_verify_decomposition(const Globals& g, const std::string& file, size_t random) {
  const auto tol = tolerance(g);
  if (random > 0) {
    nfg::random::Rng rng(g.seed);
    double worst = 0.0;
    size_t failures = 0;
    for (size_t i = 0; i < random; ++i) {
      const auto asmb = nfg::random::random_assembly(rng);
      const auto r = nfg::verify_decomposition(asmb.gates, asmb.connections, tol);
      worst = std::max(worst, r.max_deviation);
      failures += !r.preserved;
    }
    return report_random(g, "verify-decomposition", random, worst, failures);
  }
  const auto af = nfg::io::assembly_from_json(nfg::io::read_json_file(file));
  const auto r = nfg::verify_decomposition(af.gates, af.connections, tol);
  const Json doc{{"command", "verify-decomposition"},
                 {"perfmatch", nfg::io::scalar_to_json(r.before->value())},
                 {"signature_exterior", nfg::io::scalar_to_json(r.after->value())},
                 {"deviation", r.max_deviation},
                 {"ok", r.preserved}};
  std::ostringstream text;
  text << "PerfMatch(H): " << nfg::format_scalar(r.before->value())
       << "\nsignature NFG: " << nfg::format_scalar(r.after->value()) << "\ndeviation: "
       << deviation_text(r.max_deviation) << "\n" << (r.preserved ? "ok" : "FAILED") << '\n';
  emit(g, doc, text.str());
  return r.preserved ? kOk : kVerifyFailed;
}

int cmd_reduce(const Globals& g, const std::string& file, const std::string& assign, const std::string& gates) {
  const nfg::NFG n = load_nfg(file);
  const auto a = nfg::io::assignment_from_json(nfg::io::read_json_file(assign), n);
  const auto gm = nfg::io::gate_map_from_json(nfg::io::read_json_file(gates));
  const auto r = nfg::holographic_reduce(n, a, gm.gates, gm.embedding, tolerance(g));
  const Json doc{{"command", "reduce"},
                 {"method", r.used_fkt ? "fkt" : "brute"},
                 {"perfmatch", nfg::io::scalar_to_json(r.perfmatch)},
                 {"exterior", nfg::io::scalar_to_json(r.exterior)},
                 {"deviation", r.deviation},
                 {"ok", r.agree},
                 {"graph", nfg::io::graph_to_json(r.assembly.graph)}};
  std::ostringstream text;
  text << "PerfMatch(H) [" << (r.used_fkt ? "fkt" : "brute") << "]: " << nfg::format_scalar(r.perfmatch)
       << "\nZ_G: " << nfg::format_scalar(r.exterior) << "\ndeviation: " << deviation_text(r.deviation) << "\n"
       << (r.agree ? "ok" : "FAILED") << '\n';
  emit(g, doc, text.str());
  return r.agree ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal factor graphs: evaluation, rewrites, holographic transforms, duality, PerfMatch"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--out", g.out, "Write the resulting tensor / NFG / code as JSON to this file");
  app.add_option("--tol", g.tol, "Relative tolerance for verifications")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for the random-instance self-test modes");

  std::string file, file2, file3, mode = "eliminate";
  size_t random = 0;
  bool fkt = false;
  RewriteArgs rw;

  auto* eval = app.add_subcommand("eval", "Evaluate the exterior function of an NFG");
  eval->add_option("nfg", file, "NFG file")->required();
  eval->add_option("--mode", mode, "brute or eliminate")->check(CLI::IsMember({"brute", "eliminate"}));

  auto* normalize = app.add_subcommand("normalize", "Turn a marked factor graph into an NFG");
  normalize->add_option("marked", file, "Marked factor graph file")->required();

  auto* rewrite = app.add_subcommand("rewrite", "Apply an exterior-preserving rewrite");
  rewrite->add_option("nfg", rw.file, "NFG file")->required();
  rewrite->add_option("--op", rw.op, "group|split|eq-insert|eq-delete|dual-insert|dual-delete")
      ->required()
      ->check(CLI::IsMember({"group", "split", "eq-insert", "eq-delete", "dual-insert", "dual-delete"}));
  rewrite->add_option("--vertices", rw.vertices, "Vertices to group")->delimiter(',');
  rewrite->add_option("--new-id", rw.new_id, "Id of the grouped vertex");
  rewrite->add_option("--vertex", rw.vertex, "Vertex to split / delete");
  rewrite->add_option("--vertex2", rw.vertex2, "Second vertex of a dual pair");
  rewrite->add_option("--edge", rw.edge, "int:<index> or ext:<index|label>");
  rewrite->add_option("--fragment", rw.fragment, "NFG file replacing the split vertex");
  rewrite->add_option("--pair", rw.pair, "kappa, identity, or a JSON file {phi, phihat}");
  rewrite->add_flag("--verify", rw.verify, "Recompute both exteriors and compare");

  auto* transform = app.add_subcommand("transform", "Holographic transformation");
  transform->add_option("nfg", file, "NFG file")->required();
  transform->add_option("assignment", file2, "Transformer assignment file")->required();

  auto* vholant = app.add_subcommand("verify-holant", "Check the generalized Holant identity");
  vholant->add_option("nfg", file, "NFG file");
  vholant->add_option("assignment", file2, "Transformer assignment file");
  vholant->add_option("--random", random, "Check this many seeded random instances instead");

  auto* dualize = app.add_subcommand("dualize", "Build the dual NFG");
  dualize->add_option("nfg", file, "NFG file")->required();

  auto* vduality = app.add_subcommand("verify-duality", "Check Z_dual = |X_int| F[Z]");
  vduality->add_option("nfg", file, "NFG file");
  vduality->add_option("--random", random, "Check this many seeded random instances instead");

  auto* codedual = app.add_subcommand("code-dual", "Dualize a code NFG and compare with the dual code");
  codedual->add_option("code", file, "Code file")->required();
  codedual->add_option("--nfg", file2, "Code NFG realizing the code (default: single indicator vertex)");

  auto* perfmatch = app.add_subcommand("perfmatch", "Sum over perfect matchings");
  perfmatch->add_option("graph", file, "Weighted graph file")->required();
  perfmatch->add_flag("--fkt", fkt, "Use the Pfaffian path (needs a rotation system)");

  auto* sig = app.add_subcommand("signature", "Matchgate signature");
  sig->add_option("gate", file, "Matchgate file")->required();

  auto* vdec = app.add_subcommand("verify-decomposition", "Check PerfMatch(H) against the signature NFG");
  vdec->add_option("assembly", file, "Assembly file");
  vdec->add_option("--random", random, "Check this many seeded random assemblies instead");

  auto* reduce = app.add_subcommand("reduce", "Holographic reduction to PerfMatch");
  reduce->add_option("nfg", file, "Closed binary NFG file")->required();
  reduce->add_option("assignment", file2, "Transformer assignment file")->required();
  reduce->add_option("gates", file3, "Gate map file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  auto need_files = [&](std::initializer_list<const std::string*> fs) {
    for (const auto* f : fs)
      if (f->empty()) throw nfg::Error(nfg::ErrorCode::kInvalidArgument, "input file missing (or use --random N)");
  };

  try {
    if (*eval) return cmd_eval(g, file, mode);
    if (*normalize) return cmd_normalize(g, file);
    if (*rewrite) return cmd_rewrite(g, rw);
    if (*transform) return cmd_transform(g, file, file2);
    if (*vholant) {
      if (!random) need_files({&file, &file2});
      return cmd_verify_holant(g, file, file2, random);
    }
    if (*dualize) return cmd_dualize(g, file);
    if (*vduality) {
      if (!random) need_files({&file});
      return cmd_verify_duality(g, file, random);
    }
    if (*codedual) return cmd_code_dual(g, file, file2);
    if (*perfmatch) return cmd_perfmatch(g, file, fkt);
    if (*sig) return cmd_signature(g, file);
    if (*vdec) {
      if (!random) need_files({&file});
      return cmd_verify_decomposition(g, file, random);
    }
    if (*reduce) return cmd_reduce(g, file, file2, file3);
  } catch (const nfg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: parse error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
