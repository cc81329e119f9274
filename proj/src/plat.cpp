#include "platdist/plat.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace platdist {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw plat_error("line " + std::to_string(line) + ": " + what);
}

}  // namespace

PlatPresentation parse_plat(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  PlatPresentation p;
  bool header = false;
  int next_row = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (tok == "#") continue;
    if (!header) {
      if (tok != "plat") fail(lineno, "expected header 'plat m=<int> n=<int>'");
      std::string ms, ns;
      if (!(ls >> ms >> ns) || ms.rfind("m=", 0) != 0 || ns.rfind("n=", 0) != 0)
        fail(lineno, "malformed header, expected 'plat m=<int> n=<int>'");
      try {
        p.m = std::stoi(ms.substr(2));
        p.n = std::stoi(ns.substr(2));
      } catch (const std::exception&) {
        fail(lineno, "non-integer m or n in header");
      }
      header = true;
      continue;
    }
    if (tok != "row") fail(lineno, "expected 'row <i>: ...'");
    std::string idx;
    if (!(ls >> idx)) fail(lineno, "missing row index");
    if (!idx.empty() && idx.back() == ':') idx.pop_back();
    int i = 0;
    try {
      i = std::stoi(idx);
    } catch (const std::exception&) {
      fail(lineno, "non-integer row index");
    }
    if (i != next_row) fail(lineno, "rows must appear in order starting at 1");
    std::vector<int> coeffs;
    while (ls >> tok) {
      try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        coeffs.push_back(v);
      } catch (const std::exception&) {
        fail(lineno, "non-integer coefficient '" + tok + "'");
      }
    }
    int want = (i % 2 == 1) ? p.m - 1 : p.m;
    if (static_cast<int>(coeffs.size()) != want)
      fail(lineno, "row " + std::to_string(i) + " needs m" +
                       (i % 2 == 1 ? "-1=" : "=") + std::to_string(want) +
                       " entries, got " + std::to_string(coeffs.size()));
    p.rows.push_back(std::move(coeffs));
    ++next_row;
  }
  if (!header) throw plat_error("empty plat file");
  validate(p);
  return p;
}

void validate(const PlatPresentation& p) {
  if (p.m < 2) throw plat_error("width m must be >= 2");
  if (p.n < 1) throw plat_error("height n must be >= 1");
  if (static_cast<int>(p.rows.size()) != p.n - 1)
    throw plat_error("expected n-1 = " + std::to_string(p.n - 1) + " rows, got " +
                     std::to_string(p.rows.size()));
  for (int i = 1; i <= p.n - 1; ++i)
    if (static_cast<int>(p.rows[i - 1].size()) != p.row_width(i))
      throw plat_error("row " + std::to_string(i) + " has wrong arity");
}

std::string serialize_plat(const PlatPresentation& p) {
  std::ostringstream os;
  os << "plat m=" << p.m << " n=" << p.n << "\n";
  for (int i = 1; i <= p.n - 1; ++i) {
    os << "row " << i << ":";
    for (int v : p.rows[i - 1]) os << ' ' << v;
    os << "\n";
  }
  return os.str();
}

std::string plat_to_json(const PlatPresentation& p) {
  nlohmann::json j;
  j["m"] = p.m;
  j["n"] = p.n;
  j["rows"] = p.rows;
  return j.dump();
}

PlatPresentation plat_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  PlatPresentation p;
  p.m = j.at("m").get<int>();
  p.n = j.at("n").get<int>();
  p.rows = j.at("rows").get<std::vector<std::vector<int>>>();
  validate(p);
  return p;
}

bool is_row_highly_twisted(const PlatPresentation& p, int i) {
  if (i < 1 || i > p.n - 1) throw plat_error("row index out of range");
  for (int v : p.rows[i - 1])
    if (std::abs(v) < 3) return false;
  return true;
}

bool is_highly_twisted(const PlatPresentation& p) {
  for (int i = 1; i <= p.n - 1; ++i)
    if (!is_row_highly_twisted(p, i)) return false;
  return true;
}

int bridge_distance_formula(const PlatPresentation& p) {
  if (p.m < 3) throw plat_error("distance formula needs m >= 3");
  if (!is_highly_twisted(p))
    throw plat_error("distance formula needs a highly twisted plat");
  int d = 2 * (p.m - 2);
  return (p.n + d - 1) / d;
}

bool uniqueness_threshold(const PlatPresentation& p) {
  if (p.m < 3) throw plat_error("uniqueness threshold needs m >= 3");
  if (!is_highly_twisted(p))
    throw plat_error("uniqueness threshold needs a highly twisted plat");
  return p.n > 4 * p.m * (p.m - 2);
}

BraidWord plat_to_braid(const PlatPresentation& p) {
  BraidWord w;
  w.strand_count = 2 * p.m;
  for (int i = 1; i <= p.n - 1; ++i) {
    for (int j = 1; j <= p.row_width(i); ++j) {
      int a = p.coefficient(i, j);
      int k = p.pair_start(i, j);
      int letter = a >= 0 ? k : -k;
      for (int t = 0; t < std::abs(a); ++t) w.letters.push_back(letter);
    }
  }
  return w;
}

BraidWord projection_word(const PlatPresentation& p, int from_row, int to_row) {
  if (to_row < 1 || from_row > p.n || to_row > from_row)
    throw plat_error("projection rows out of range");
  BraidWord w;
  w.strand_count = 2 * p.m;
  for (int i = from_row - 1; i >= to_row; --i) {
    for (int j = p.row_width(i); j >= 1; --j) {
      int a = p.coefficient(i, j);
      int k = p.pair_start(i, j);
      int letter = a >= 0 ? -k : k;
      for (int t = 0; t < std::abs(a); ++t) w.letters.push_back(letter);
    }
  }
  return w;
}

CurveDiagram round_curve(int punctures, int first, int last) {
  if (first < 1 || last > punctures || first > last)
    throw curve_error("bad round curve range");
  if (last - first + 1 >= punctures)
    throw curve_error("round curve must miss at least one puncture");
  int gl = first - 1;           // gap left of the block
  int gr = last;                // gap right of the block
  if (gl == 0) gl = punctures;  // infinity gap
  std::vector<int> gap;
  if (gl == punctures)
    gap = {gr, gl};
  else
    gap = {gl, gr};
  return CurveDiagram::make(punctures, gap, {1, 0}, {1, 0});
}

CurveDiagram canonical_loop(const PlatPresentation& p, int i, int j) {
  if (i < 0 || i > p.n) throw plat_error("loop row out of range");
  bool odd = (i % 2 == 1);
  int jmax = odd ? p.m - 1 : p.m;
  if (j < 1 || j > jmax) throw plat_error("loop column out of range");
  int first = odd ? 2 * j : 2 * j - 1;
  return round_curve(2 * p.m, first, first + 1);
}

}  // namespace platdist
