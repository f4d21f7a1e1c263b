#include "entrobounds/scenario_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "entrobounds/errors.hpp"

namespace entrobounds {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

double get_real(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a real number");
  return j.get<double>();
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

const json& get_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

cd get_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(path, "expected [re, im] pair");
  return cd(j[0].get<double>(), j[1].get<double>());
}

Matrix get_matrix(const json& j, int d, const std::string& path) {
  get_array(j, path);
  if (static_cast<int>(j.size()) != d)
    fail(path, "expected " + std::to_string(d) + " rows, got " + std::to_string(j.size()));
  Matrix m(d);
  for (int r = 0; r < d; ++r) {
    const std::string rpath = path + "[" + std::to_string(r) + "]";
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      fail(rpath, "expected " + std::to_string(d) + " entries");
    for (int c = 0; c < d; ++c)
      m(r, c) = get_complex(row[c], rpath + "[" + std::to_string(c) + "]");
  }
  return m;
}

Scenario parse_builtin(const json& root) {
  const std::string name = get_string(root.at("builtin"), "builtin");
  if (!root.contains("parameters") || !root.at("parameters").is_object())
    fail("parameters", "expected an object with field x");
  const json& params = root.at("parameters");
  if (!params.contains("x")) fail("parameters.x", "missing");
  const double x = get_real(params.at("x"), "parameters.x");
  try {
    return builtin_scenario(name, x);
  } catch (const UnknownOutcome&) {
    fail("builtin", "unknown builtin scenario '" + name + "'");
  } catch (const Error& e) {
    fail("parameters.x", e.what());
  }
}

Scenario parse_explicit(const json& root) {
  for (const char* field : {"dimension", "alphabet", "prior", "letter_states", "instrument"})
    if (!root.contains(field)) fail(field, "missing");

  const json& jdim = root.at("dimension");
  if (!jdim.is_number_integer() || jdim.get<int>() < 1)
    fail("dimension", "expected a positive integer");
  const int d = jdim.get<int>();

  const json& jalpha = get_array(root.at("alphabet"), "alphabet");
  if (jalpha.empty()) fail("alphabet", "expected at least one label");
  std::vector<std::string> alphabet;
  for (size_t i = 0; i < jalpha.size(); ++i)
    alphabet.push_back(get_string(jalpha[i], "alphabet[" + std::to_string(i) + "]"));

  const json& jprior = get_array(root.at("prior"), "prior");
  if (jprior.size() != jalpha.size()) fail("prior", "length differs from alphabet");
  std::vector<double> prior;
  for (size_t i = 0; i < jprior.size(); ++i)
    prior.push_back(get_real(jprior[i], "prior[" + std::to_string(i) + "]"));

  const json& jstates = get_array(root.at("letter_states"), "letter_states");
  if (jstates.size() != jalpha.size()) fail("letter_states", "length differs from alphabet");
  std::vector<DensityMatrix> states;
  for (size_t i = 0; i < jstates.size(); ++i) {
    const std::string path = "letter_states[" + std::to_string(i) + "]";
    try {
      states.emplace_back(get_matrix(jstates[i], d, path));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }

  const json& jinstr = get_array(root.at("instrument"), "instrument");
  if (jinstr.empty()) fail("instrument", "expected at least one outcome");
  std::vector<std::string> outcomes;
  std::vector<Operation> ops;
  for (size_t w = 0; w < jinstr.size(); ++w) {
    const std::string wpath = "instrument[" + std::to_string(w) + "]";
    const json& entry = jinstr[w];
    if (!entry.is_object() || !entry.contains("outcome") || !entry.contains("kraus"))
      fail(wpath, "expected an object with fields outcome and kraus");
    outcomes.push_back(get_string(entry.at("outcome"), wpath + ".outcome"));
    const json& jkraus = get_array(entry.at("kraus"), wpath + ".kraus");
    if (jkraus.empty()) fail(wpath + ".kraus", "expected at least one matrix");
    Operation op;
    for (size_t k = 0; k < jkraus.size(); ++k)
      op.kraus.push_back(
          get_matrix(jkraus[k], d, wpath + ".kraus[" + std::to_string(k) + "]"));
    ops.push_back(std::move(op));
  }

  try {
    Ensemble e(std::move(alphabet), std::move(prior), std::move(states));
    try {
      Instrument m(std::move(outcomes), std::move(ops));
      return Scenario{std::move(e), std::move(m), "file", {}};
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      fail("instrument", err.what());
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    fail("ensemble", err.what());
  }
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("document: ") + e.what());
  }
  if (!root.is_object()) fail("document", "expected a JSON object");
  if (root.contains("builtin")) return parse_builtin(root);
  return parse_explicit(root);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return parse_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& s) {
  json root;
  root["dimension"] = s.ensemble.dim();
  root["alphabet"] = s.ensemble.prior().labels();
  root["prior"] = s.ensemble.prior().weights();
  json states = json::array();
  for (const DensityMatrix& rho : s.ensemble.states()) states.push_back(matrix_json(rho.mat()));
  root["letter_states"] = std::move(states);
  json instr = json::array();
  for (int w = 0; w < s.instrument.n_outcomes(); ++w) {
    json kraus = json::array();
    for (const Matrix& v : s.instrument.op(w).kraus) kraus.push_back(matrix_json(v));
    instr.push_back(json{{"outcome", s.instrument.outcome(w)}, {"kraus", std::move(kraus)}});
  }
  root["instrument"] = std::move(instr);
  return root.dump(2) + "\n";
}

std::string serialize_matrix(const Matrix& m, int indent) {
  return matrix_json(m).dump(indent);
}

}  // namespace entrobounds
