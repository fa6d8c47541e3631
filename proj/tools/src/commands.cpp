#include "atomfact_cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "atomfact/error.hpp"
#include "atomfact/extract.hpp"
#include "atomfact/higman.hpp"
#include "atomfact/pencil_factor.hpp"
#include "atomfact/trivialize.hpp"
#include "atomfact/unifactor.hpp"

namespace atomfact::cli {

namespace {

// A bare matrix document, or any document carrying one under "matrix".
PolyMatrix matrix_of(const json& doc) {
  if (doc.is_object() && doc.contains("matrix")) return matrix_from_json(doc.at("matrix"));
  return matrix_from_json(doc);
}

std::vector<PolyMatrix> atoms_of(const json& doc) {
  if (doc.is_array()) return matrices_from_json(doc);
  if (doc.is_object() && doc.contains("atoms")) return matrices_from_json(doc.at("atoms"));
  throw ParseError("expected a list of atoms or a document with an \"atoms\" field");
}

json index_list(const std::vector<std::size_t>& v) { return json(v); }

template <class F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    return CommandResult{kInputError, nullptr, std::string("malformed document: ") + e.what()};
  } catch (const std::exception& e) {
    return CommandResult{exit_code_for(e), nullptr, e.what()};
  }
}

json read_json(const std::string& path) {
  if (path.empty() || path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return json::parse(in);
}

void write_output(const JobSpec& spec, const json& doc, std::ostream& out) {
  const std::string text = doc.dump(2);
  if (spec.output.empty() || spec.output == "-") {
    out << text << '\n';
    return;
  }
  std::ofstream f(spec.output);
  if (!f) throw ParseError("cannot write " + spec.output);
  f << text << '\n';
}

CommandResult run_factor_batch(const std::vector<json>& docs, unsigned jobs) {
  std::vector<CommandResult> results(docs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < docs.size(); i = next++) results[i] = factor_document(docs[i]);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(docs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CommandResult batch{kOk, json::array(), {}};
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].exit_code != kOk) {
      if (batch.exit_code == kOk) batch.exit_code = results[i].exit_code;
      if (!batch.diagnostic.empty()) batch.diagnostic += '\n';
      batch.diagnostic += "input " + std::to_string(i) + ": " + results[i].diagnostic;
      batch.document.push_back(json{{"error", results[i].diagnostic}, {"exit_code", results[i].exit_code}});
    } else {
      batch.document.push_back(std::move(results[i].document));
    }
  }
  return batch;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const SingularInputError*>(&e)) return kSingular;
  if (dynamic_cast<const UnitInputError*>(&e)) return kUnit;
  if (dynamic_cast<const InvariantViolation*>(&e)) return kInternalError;
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const DimensionError*>(&e) ||
      dynamic_cast<const DomainError*>(&e) || dynamic_cast<const json::exception*>(&e))
    return kInputError;
  return kInternalError;
}

CommandResult factor_document(const json& doc) {
  return guarded([&] {
    const PolyMatrix m = matrix_of(doc);
    Telemetry tel;
    const AtomFactorization f = factor_matrix(m, FactorOptions{&tel});
    json atoms = json::array();
    json certs = json::array();
    for (std::size_t t = 0; t < f.atoms.size(); ++t) {
      atoms.push_back(to_json(f.atoms[t]));
      certs.push_back(json{{"det", to_json(f.certificates[t].det)},
                           {"det_str", f.certificates[t].det.str()},
                           {"irreducible", f.certificates[t].irreducible}});
    }
    json stages = json::object();
    for (const auto& s : tel.stages()) stages[s.stage] = s.max_size;
    return CommandResult{kOk,
                         json{{"input", to_json(m)},
                              {"atoms", std::move(atoms)},
                              {"certificates", std::move(certs)},
                              {"omega", f.atoms.size()},
                              {"encoding_sizes", std::move(stages)}},
                         {}};
  });
}

CommandResult verify_documents(const std::vector<json>& docs) {
  return guarded([&] {
    PolyMatrix m;
    std::vector<PolyMatrix> atoms;
    if (docs.size() == 1) {
      const json& d = docs[0];
      if (!d.is_object() || !d.contains("input")) throw ParseError("verify needs an \"input\" field or two documents");
      m = matrix_from_json(d.at("input"));
      atoms = atoms_of(d);
    } else if (docs.size() == 2) {
      m = matrix_of(docs[0]);
      atoms = atoms_of(docs[1]);
    } else {
      throw ParseError("verify takes one or two input documents");
    }
    const VerificationReport r = verify_factorization(m, atoms);
    json doc{{"ok", r.ok()},
             {"clauses",
              {{"product", r.product_ok}, {"atoms", r.atoms_ok}, {"determinant", r.det_ok}, {"count", r.count_ok}}},
             {"expected_count", r.expected_count},
             {"atom_count", atoms.size()}};
    if (!r.ok()) {
      doc["first_failure"] = r.first_failure();
      doc["detail"] = r.detail;
    }
    return CommandResult{r.ok() ? kOk : kVerifyFailed, std::move(doc),
                         r.ok() ? std::string() : "verification failed: " + r.first_failure() + " (" + r.detail + ")"};
  });
}

CommandResult linearize_document(const json& doc) {
  return guarded([&] {
    const HigmanOutcome h = linearize(matrix_of(doc));
    return CommandResult{kOk,
                         json{{"P", to_json(h.P)},
                              {"L", to_json(h.L.to_poly())},
                              {"Q", to_json(h.Q)},
                              {"original_dim", h.original_dim},
                              {"padding", h.padding}},
                         {}};
  });
}

CommandResult trivialize_documents(const json& c_doc, const json& u_doc, const std::string& route) {
  return guarded([&] {
    const PolyMatrix c = matrix_of(c_doc);
    const PolyMatrix u = matrix_of(u_doc);
    std::string used = route;
    if (used == "auto") used = c.max_degree() <= 1 ? "linear" : "general";
    TrivOutcome t;
    if (used == "linear")
      t = trivialize_linear(c, u);
    else if (used == "general")
      t = trivialize_general(c, u);
    else
      throw ParseError("unknown route " + route);
    return CommandResult{kOk,
                         json{{"route", used},
                              {"N", to_json(t.N)},
                              {"N_inv", to_json(t.N_inv)},
                              {"zero_cols", index_list(t.zero_cols)},
                              {"zero_rows", index_list(t.zero_rows)}},
                         {}};
  });
}

CommandResult factor_pencil_document(const json& doc) {
  return guarded([&] {
    const PencilFactorization pf = factor_pencil(pencil_from_json(doc));
    json atoms = json::array();
    for (const auto& a : pf.atoms) atoms.push_back(to_json(a));
    return CommandResult{kOk,
                         json{{"atoms", std::move(atoms)},
                              {"right_unit", to_json(pf.right_unit)},
                              {"shift", pf.shift},
                              {"monic_padding", pf.monic_padding}},
                         {}};
  });
}

CommandResult gen_document(std::uint64_t seed, const GenLimits& limits) {
  return guarded([&] {
    const GeneratedInstance g = generate(seed, limits);
    json atoms = json::array();
    json dets = json::array();
    for (const auto& a : g.ground_truth) atoms.push_back(to_json(a));
    for (const auto& d : g.atom_dets) dets.push_back(to_json(d));
    return CommandResult{kOk,
                         json{{"seed", seed},
                              {"limits",
                               {{"max_dim", limits.max_dim},
                                {"max_deg", limits.max_deg},
                                {"max_coeff_bits", limits.max_coeff_bits}}},
                              {"matrix", to_json(g.M)},
                              {"atoms", std::move(atoms)},
                              {"atom_dets", std::move(dets)}},
                         {}};
  });
}

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  CommandResult result;
  try {
    static const char* const known[] = {"factor", "verify", "linearize", "trivialize", "factor-pencil", "gen"};
    if (std::find(std::begin(known), std::end(known), spec.command) == std::end(known))
      throw ParseError("unknown command " + spec.command);
    std::vector<json> docs;
    if (spec.command != "gen") {
      const std::vector<std::string> paths = spec.inputs.empty() ? std::vector<std::string>{"-"} : spec.inputs;
      for (const auto& p : paths) docs.push_back(read_json(p));
    }
    auto need = [&](std::size_t k) {
      if (docs.size() != k)
        throw ParseError(spec.command + " takes " + std::to_string(k) + " input document(s), got " +
                         std::to_string(docs.size()));
    };
    if (spec.command == "factor") {
      result = docs.size() == 1 ? factor_document(docs[0]) : run_factor_batch(docs, spec.jobs);
    } else if (spec.command == "verify") {
      result = verify_documents(docs);
    } else if (spec.command == "linearize") {
      need(1);
      result = linearize_document(docs[0]);
    } else if (spec.command == "trivialize") {
      need(2);
      result = trivialize_documents(docs[0], docs[1], spec.route);
    } else if (spec.command == "factor-pencil") {
      need(1);
      result = factor_pencil_document(docs[0]);
    } else if (spec.command == "gen") {
      result = gen_document(spec.seed, spec.limits);
    } else {
      throw ParseError("unknown command " + spec.command);
    }
    if (!result.document.is_null()) write_output(spec, result.document, out);
  } catch (const json::exception& e) {
    result = CommandResult{kInputError, nullptr, std::string("malformed document: ") + e.what()};
  } catch (const std::exception& e) {
    result = CommandResult{exit_code_for(e), nullptr, e.what()};
  }
  if (!result.diagnostic.empty()) err << "atomfact: " << result.diagnostic << '\n';
  return result.exit_code;
}

}  // namespace atomfact::cli
