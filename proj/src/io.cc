// Copyright 2026 The Persuade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "persuade/io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "persuade/advice.h"
#include "persuade/errors.h"
#include "persuade/precision.h"
#include "persuade/solver.h"

namespace persuade {
namespace {

using nlohmann::json;

std::vector<std::string> Labels(const json& doc, const char* field) {
  if (!doc.contains(field)) throw ParseError(std::string(field) + ": missing");
  const json& arr = doc.at(field);
  if (!arr.is_array()) {
    throw ParseError(std::string(field) + ": expected an array");
  }
  std::vector<std::string> out;
  for (const json& v : arr) {
    if (!v.is_string()) {
      throw ParseError(std::string(field) + ": labels must be strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

Eigen::MatrixXd Matrix(const json& doc, const char* field, int rows,
                       int cols) {
  const json& arr = doc.at(field);
  if (!arr.is_array()) {
    throw ParseError(std::string(field) + ": expected an array of rows");
  }
  if (static_cast<int>(arr.size()) != rows) {
    std::ostringstream os;
    os << field << ": expected " << rows << " rows, got " << arr.size();
    throw ValidationError(os.str());
  }
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = arr[r];
    if (!row.is_array()) {
      throw ParseError(std::string(field) + ": rows must be arrays");
    }
    if (static_cast<int>(row.size()) != cols) {
      std::ostringstream os;
      os << field << "[" << r << "]: expected " << cols << " entries, got "
         << row.size();
      throw ValidationError(os.str());
    }
    for (int c = 0; c < cols; ++c) {
      if (!row[c].is_number()) {
        std::ostringstream os;
        os << field << "[" << r << "][" << c << "]: expected a number";
        throw ParseError(os.str());
      }
      m(r, c) = row[c].get<double>();
    }
  }
  return m;
}

json MatrixJson(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read game file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Game GameFromJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("game document must be an object");
  std::vector<std::string> states = Labels(doc, "states");
  std::vector<std::string> actions = Labels(doc, "actions");
  const int n = static_cast<int>(states.size());
  const int m = static_cast<int>(actions.size());
  if (n < 2) throw ValidationError("states: need at least 2 states");
  if (m < 2) throw ValidationError("actions: need at least 2 actions");
  if (!doc.contains("receiver_payoffs")) {
    throw ParseError("receiver_payoffs: missing");
  }
  Eigen::MatrixXd receiver = Matrix(doc, "receiver_payoffs", m, n);
  const bool has_matrix = doc.contains("sender_payoffs");
  const bool has_affine = doc.contains("sender_affine");
  if (has_matrix == has_affine) {
    throw ParseError("exactly one of sender_payoffs and sender_affine is required");
  }
  if (!doc.contains("prior")) throw ParseError("prior: missing");
  const json& p = doc.at("prior");
  if (!p.is_array()) throw ParseError("prior: expected an array");
  if (static_cast<int>(p.size()) != n) {
    std::ostringstream os;
    os << "prior: expected " << n << " entries, got " << p.size();
    throw ValidationError(os.str());
  }
  Belief prior(n);
  for (int i = 0; i < n; ++i) {
    if (!p[i].is_number()) throw ParseError("prior: entries must be numbers");
    prior[i] = p[i].get<double>();
  }
  if (has_matrix) {
    return Game::FromMatrices(states, actions, receiver,
                              Matrix(doc, "sender_payoffs", m, n), prior);
  }
  return Game::FromAffine(states, actions, receiver,
                          Matrix(doc, "sender_affine", m, n + 1), prior);
}

std::string GameToJson(const Game& game) {
  json doc;
  doc["states"] = game.states();
  doc["actions"] = game.actions();
  doc["receiver_payoffs"] = MatrixJson(game.receiver_payoffs());
  if (game.sender_mode() == SenderMode::kMatrix) {
    doc["sender_payoffs"] = MatrixJson(game.sender_spec());
  } else {
    doc["sender_affine"] = MatrixJson(game.sender_spec());
  }
  json prior = json::array();
  for (int i = 0; i < game.prior().size(); ++i) prior.push_back(game.prior()[i]);
  doc["prior"] = prior;
  return doc.dump(2);
}

Game LoadGame(const std::string& path_or_builtin) {
  const std::string& s = path_or_builtin;
  if (s == "financial") return FinancialGame();
  if (s == "advice42") return AdviceExampleGame();
  if (s.rfind("threshold:", 0) == 0) {
    double pi = 0.0;
    try {
      size_t used = 0;
      pi = std::stod(s.substr(10), &used);
      if (used != s.size() - 10) throw std::invalid_argument(s);
    } catch (const std::logic_error&) {
      throw ParseError("threshold builtin needs a number: " + s);
    }
    try {
      return ThresholdGame(pi);
    } catch (const DomainError& e) {
      throw ValidationError(e.what());
    }
  }
  return GameFromJson(ReadFile(s));
}

void SaveGame(const Game& game, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write game file: " + path);
  out << GameToJson(game) << "\n";
}

std::string SolveResultCsv(const Game& game, const SolveResult& result) {
  std::ostringstream os;
  os.precision(12);
  os << "signal,weight,action";
  for (const std::string& s : game.states()) os << ",mu_" << s;
  for (const std::string& s : game.states()) os << ",pi_given_" << s;
  os << "\n";
  Eigen::MatrixXd kernel = SignalKernel(game, result.structure);
  for (int i = 0; i < result.structure.size(); ++i) {
    os << i << "," << result.structure.weights[i] << ","
       << game.actions()[result.support_actions[i]];
    for (int w = 0; w < game.num_states(); ++w) {
      os << "," << result.structure.support[i][w];
    }
    for (int w = 0; w < game.num_states(); ++w) os << "," << kernel(i, w);
    os << "\n";
  }
  return os.str();
}

std::vector<Belief> InteriorSimplexGrid(int grid) {
  if (grid < 3) throw ValidationError("grid: must be >= 3");
  std::vector<Belief> out;
  for (int i = 1; i < grid; ++i) {
    for (int j = 1; i + j < grid; ++j) {
      Belief b(3);
      b << double(i) / grid, double(j) / grid, double(grid - i - j) / grid;
      out.push_back(b);
    }
  }
  return out;
}

std::vector<SurfacePoint> Surface(const Game& game, int k, int grid) {
  if (game.num_states() != 3) {
    throw ScaleExceeded("surface needs exactly 3 states");
  }
  Solver solver(game);
  std::vector<SurfacePoint> out;
  for (const Belief& mu : InteriorSimplexGrid(grid)) {
    out.push_back({mu, solver.SolveAt(mu, k).value});
  }
  return out;
}

std::string SurfaceCsv(const std::vector<SurfacePoint>& points) {
  std::ostringstream os;
  os.precision(12);
  os << "mu1,mu2,mu3,value\n";
  for (const SurfacePoint& p : points) {
    os << p.prior[0] << "," << p.prior[1] << "," << p.prior[2] << ","
       << p.value << "\n";
  }
  return os.str();
}

std::vector<ThresholdPoint> ThresholdSweep(double pi_bar, int grid) {
  Solver solver(ThresholdGame(pi_bar));
  std::vector<ThresholdPoint> out;
  for (const Belief& mu : InteriorSimplexGrid(grid)) {
    out.push_back({mu, InDeltaC(pi_bar, mu), solver.SolveAt(mu, 2).value});
  }
  return out;
}

std::string ThresholdCsv(double pi_bar, const std::vector<ThresholdPoint>& pts) {
  const bool have_bounds = pi_bar > 2.0 / 3.0;
  TwoSignalBounds bounds;
  if (have_bounds) bounds = ThresholdTwoSignalBounds(pi_bar);
  std::ostringstream os;
  os.precision(12);
  os << "mu1,mu2,mu3,in_delta_c,v2,lower,upper\n";
  for (const ThresholdPoint& p : pts) {
    os << p.prior[0] << "," << p.prior[1] << "," << p.prior[2] << ","
       << (p.in_delta_c ? 1 : 0) << "," << p.v2 << ",";
    if (have_bounds) {
      os << bounds.lower << "," << bounds.upper;
    } else {
      os << ",";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace persuade
