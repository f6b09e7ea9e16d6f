#include "loopalg/spec_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "loopalg/errors.hpp"
#include "loopalg/structure.hpp"

namespace loopalg {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream is(body);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

// "key=value" with the expected key
std::string kv(const std::string& tok, const std::string& key, int line_no) {
  auto eq = tok.find('=');
  if (eq == std::string::npos || tok.substr(0, eq) != key)
    throw ParseError(line_no, "expected " + key + "=<value>, got '" + tok + "'");
  return tok.substr(eq + 1);
}

int parse_int(const std::string& s, int line_no) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line_no, "malformed integer '" + s + "'");
  }
}

Rational parse_rat(const std::string& s, int line_no) {
  try {
    return Rational::parse(s);
  } catch (const std::exception& e) {
    throw ParseError(line_no, e.what());
  }
}

Kind parse_kind(const std::string& s, int line_no) {
  if (s == "h") return Kind::Cartan;
  if (s == "xp") return Kind::Raise;
  if (s == "xm") return Kind::Lower;
  throw ParseError(line_no, "kind must be h, xp or xm, got '" + s + "'");
}

}  // namespace

Module parse_module_spec(std::istream& in, std::optional<Mode> mode_override) {
  Mode mode = Mode::Borel;
  bool saw_explicit = false;
  int explicit_dim = 0, explicit_cap = 0, explicit_line = 0;
  std::vector<EvaluationFactor> factors;
  std::optional<ShiftFactor> shift;
  std::optional<Vec> psi;
  std::vector<std::tuple<Kind, int, Eigen::Triplet<Rational>>> entries;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& cmd = toks[0];
    if (cmd == "mode") {
      if (toks.size() != 2) throw ParseError(line_no, "usage: mode borel|loop");
      if (toks[1] == "borel")
        mode = Mode::Borel;
      else if (toks[1] == "loop")
        mode = Mode::FullLoop;
      else
        throw ParseError(line_no, "mode must be borel or loop");
    } else if (cmd == "factor") {
      if (toks.size() != 3) throw ParseError(line_no, "usage: factor spin2=<int> a=<rational>");
      int spin2 = parse_int(kv(toks[1], "spin2", line_no), line_no);
      if (spin2 < 0) throw ParseError(line_no, "spin2 must be >= 0");
      factors.push_back({spin2, parse_rat(kv(toks[2], "a", line_no), line_no)});
    } else if (cmd == "shift") {
      if (toks.size() != 2) throw ParseError(line_no, "usage: shift c=<rational>");
      if (shift) throw ParseError(line_no, "duplicate shift line");
      shift = ShiftFactor{parse_rat(kv(toks[1], "c", line_no), line_no)};
    } else if (cmd == "explicit") {
      if (toks.size() != 3) throw ParseError(line_no, "usage: explicit dim=<int> K=<int>");
      saw_explicit = true;
      explicit_line = line_no;
      explicit_dim = parse_int(kv(toks[1], "dim", line_no), line_no);
      explicit_cap = parse_int(kv(toks[2], "K", line_no), line_no);
    } else if (cmd == "psi") {
      std::vector<Rational> coords;
      for (std::size_t i = 1; i < toks.size(); ++i) coords.push_back(parse_rat(toks[i], line_no));
      if (coords.empty()) throw ParseError(line_no, "psi needs at least one coordinate");
      Vec v(coords.size());
      for (std::size_t i = 0; i < coords.size(); ++i) v[static_cast<Eigen::Index>(i)] = coords[i];
      psi = std::move(v);
    } else if (cmd == "mat") {
      if (toks.size() != 6)
        throw ParseError(line_no, "usage: mat kind=h|xp|xm k=<int> <row> <col> <rational>");
      Kind kind = parse_kind(kv(toks[1], "kind", line_no), line_no);
      int k = parse_int(kv(toks[2], "k", line_no), line_no);
      int row = parse_int(toks[3], line_no);
      int col = parse_int(toks[4], line_no);
      Rational val = parse_rat(toks[5], line_no);
      if (row < 0 || col < 0) throw ParseError(line_no, "matrix indices must be >= 0");
      entries.emplace_back(kind, k, Eigen::Triplet<Rational>(row, col, val));
    } else {
      throw ParseError(line_no, "unknown directive '" + cmd + "'");
    }
  }

  if (mode_override) mode = *mode_override;

  if (saw_explicit) {
    if (!factors.empty() || shift)
      throw ParseError(explicit_line, "explicit modules cannot also list factors or a shift");
    if (!psi) throw ParseError(explicit_line, "explicit module needs a psi line");
    if (psi->size() != explicit_dim)
      throw ParseError(explicit_line, "psi has " + std::to_string(psi->size()) +
                                          " coordinates, expected " +
                                          std::to_string(explicit_dim));
    std::map<std::pair<Kind, int>, std::vector<Eigen::Triplet<Rational>>> trips;
    for (const auto& [kind, k, t] : entries) {
      if (t.row() >= explicit_dim || t.col() >= explicit_dim)
        throw ParseError(explicit_line, "matrix entry outside dim=" + std::to_string(explicit_dim));
      trips[{kind, k}].push_back(t);
    }
    std::map<std::pair<Kind, int>, SpMat> mats;
    for (auto& [key, ts] : trips) {
      SpMat m(explicit_dim, explicit_dim);
      m.setFromTriplets(ts.begin(), ts.end(),
                        [](const Rational& a, const Rational& b) { return a + b; });
      mats.emplace(key, std::move(m));
    }
    Module mod = Module::explicit_module(mode, explicit_dim, explicit_cap, std::move(mats),
                                         std::move(*psi));
    require_defining_relations(mod, explicit_cap);
    return mod;
  }

  if (!entries.empty() || psi)
    throw ParseError(line_no, "mat/psi lines require an explicit declaration");
  return Module::tensor(mode, std::move(factors), std::move(shift));
}

Module load_module_spec(const std::string& path, std::optional<Mode> mode_override) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open module spec '" + path + "'");
  return parse_module_spec(in, mode_override);
}

}  // namespace loopalg
