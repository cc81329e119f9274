#include "platdist/curve.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace platdist {

namespace {

void check_matching(const std::vector<int>& m, int n, const char* name) {
  for (int i = 0; i < n; ++i) {
    int j = m[i];
    if (j < 0 || j >= n || j == i)
      throw curve_error(std::string(name) + " matching entry out of range");
    if (m[j] != i) throw curve_error(std::string(name) + " not an involution");
  }
  // Non-crossing: arcs nest like balanced parentheses in the linear order.
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    if (m[i] > i) {
      stack.push_back(i);
    } else {
      if (stack.empty() || stack.back() != m[i])
        throw curve_error(std::string(name) + " matching crosses itself");
      stack.pop_back();
    }
  }
}

}  // namespace

CurveDiagram CurveDiagram::make(int punctures, std::vector<int> gap,
                                std::vector<int> upper,
                                std::vector<int> lower) {
  if (punctures < 4 || punctures % 2 != 0)
    throw curve_error("puncture count must be an even number >= 4");
  const int n = static_cast<int>(gap.size());
  if (n % 2 != 0) throw curve_error("crossing count must be even");
  if (static_cast<int>(upper.size()) != n ||
      static_cast<int>(lower.size()) != n)
    throw curve_error("matching size mismatch");
  for (int i = 0; i < n; ++i) {
    if (gap[i] < 1 || gap[i] > punctures)
      throw curve_error("gap index out of range");
    if (i > 0 && gap[i] < gap[i - 1])
      throw curve_error("gaps must be non-decreasing along the axis");
  }
  check_matching(upper, n, "upper");
  check_matching(lower, n, "lower");
  if (n > 0) {
    // One closed curve: alternating upper/lower steps visit everything.
    std::vector<char> seen(n, 0);
    int at = 0, visited = 0;
    do {
      if (seen[at]) throw curve_error("matchings trace a multicurve");
      seen[at] = 1;
      ++visited;
      at = upper[at];
      if (seen[at]) break;
      seen[at] = 1;
      ++visited;
      at = lower[at];
    } while (at != 0);
    if (visited != n) throw curve_error("matchings trace a multicurve");
  }
  CurveDiagram c;
  c.punctures_ = punctures;
  c.gap_ = std::move(gap);
  c.upper_ = std::move(upper);
  c.lower_ = std::move(lower);
  c.reduced_ = axis_bigons(c).empty();
  return c;
}

CurveDiagram CurveDiagram::empty_diagram(int punctures) {
  CurveDiagram c;
  c.punctures_ = punctures;
  c.reduced_ = true;
  return c;
}

std::pair<int, int> CurveDiagram::gap_range(int g) const {
  auto lo = std::lower_bound(gap_.begin(), gap_.end(), g);
  auto hi = std::upper_bound(gap_.begin(), gap_.end(), g);
  return {static_cast<int>(lo - gap_.begin()), static_cast<int>(hi - gap_.begin())};
}

std::vector<int> CurveDiagram::puncture_sides() const {
  // Walk the axis circle from just right of puncture 1; every crossing
  // flips the side.  Puncture p (p >= 2) is reached after all crossings in
  // gaps < p; puncture 1 sits at the start.
  std::vector<int> side(punctures_, 0);
  int s = 0, i = 0;
  const int n = size();
  side[0] = 0;
  for (int p = 2; p <= punctures_; ++p) {
    while (i < n && gap_[i] < p) s ^= (++i, 1);
    side[p - 1] = s;
  }
  return side;
}

std::string CurveDiagram::brief() const {
  std::ostringstream os;
  os << "curve[2m=" << punctures_ << " n=" << size() << " gaps=";
  for (int g : gap_) os << g << ' ';
  os << "]";
  return os.str();
}

std::vector<int> axis_bigons(const CurveDiagram& c) {
  std::vector<int> out;
  for (int i = 0; i + 1 < c.size(); ++i) {
    if (c.gap(i) != c.gap(i + 1)) continue;
    if (c.upper(i) == i + 1 || c.lower(i) == i + 1) out.push_back(i);
  }
  return out;
}

CurveDiagram remove_bigon(const CurveDiagram& c, int i) {
  const int n = c.size();
  if (i < 0 || i + 1 >= n || c.gap(i) != c.gap(i + 1))
    throw curve_error("not a bigon");
  const bool up = c.upper(i) == i + 1;
  const bool lo = c.lower(i) == i + 1;
  if (!up && !lo) throw curve_error("not a bigon");

  CurveDiagram r;
  r.punctures_ = c.punctures_;
  if (n == 2) {
    r.reduced_ = true;
    return r;  // the whole curve was a trivial circle
  }

  std::vector<int> remap(n, -1);
  for (int j = 0, k = 0; j < n; ++j)
    if (j != i && j != i + 1) remap[j] = k++;

  std::vector<int> gap, upper, lower;
  gap.reserve(n - 2);
  upper.assign(n - 2, -1);
  lower.assign(n - 2, -1);
  for (int j = 0; j < n; ++j)
    if (remap[j] >= 0) gap.push_back(c.gap(j));

  auto splice = [&](const std::vector<int>& m, std::vector<int>& out) {
    // Copy arcs not touching the pair; join the pair's two partners.
    int a = m[i], b = m[i + 1];
    for (int j = 0; j < n; ++j) {
      if (remap[j] < 0) continue;
      int t = m[j];
      if (t == i || t == i + 1) continue;
      out[remap[j]] = remap[t];
    }
    if (a != i + 1) {  // not the matched side
      out[remap[a]] = remap[b];
      out[remap[b]] = remap[a];
    }
  };
  if (up) {
    splice(c.uppers(), upper);
    splice(c.lowers(), lower);  // lower arcs at i, i+1 get joined
  } else {
    splice(c.uppers(), upper);
    splice(c.lowers(), lower);
  }
  r.gap_ = std::move(gap);
  r.upper_ = std::move(upper);
  r.lower_ = std::move(lower);
  r.reduced_ = axis_bigons(r).empty();
  return r;
}

CurveDiagram reduce(CurveDiagram c) {
  for (;;) {
    auto b = axis_bigons(c);
    if (b.empty()) break;
    c = remove_bigon(c, b.front());
  }
  c.reduced_ = true;
  return c;
}

bool is_essential(const CurveDiagram& c) {
  if (c.is_empty()) return false;
  auto side = c.puncture_sides();
  int ones = 0;
  for (int s : side) ones += s;
  int zeros = c.punctures() - ones;
  return ones >= 2 && zeros >= 2;
}

std::size_t hash_value(const CurveDiagram& c) {
  std::size_t h = static_cast<std::size_t>(c.punctures()) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](int v) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (int i = 0; i < c.size(); ++i) {
    mix(c.gap(i));
    mix(c.upper(i));
    mix(c.lower(i));
  }
  return h;
}

std::string curve_to_json(const CurveDiagram& c) {
  nlohmann::json j;
  j["punctures"] = c.punctures();
  j["gaps"] = c.gaps();
  nlohmann::json up = nlohmann::json::array(), lo = nlohmann::json::array();
  for (int i = 0; i < c.size(); ++i) {
    if (c.upper(i) > i) up.push_back({i, c.upper(i)});
    if (c.lower(i) > i) lo.push_back({i, c.lower(i)});
  }
  j["upper"] = up;
  j["lower"] = lo;
  return j.dump();
}

CurveDiagram curve_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int punctures = j.at("punctures").get<int>();
  std::vector<int> gap = j.at("gaps").get<std::vector<int>>();
  const int n = static_cast<int>(gap.size());
  // Accept the external 0..2m convention: leading crossings tagged 0 are
  // the x < 1 half of the infinity gap and move to the back of the
  // circular order with tag 2m.
  int lead = 0;
  while (lead < n && gap[lead] == 0) ++lead;
  std::vector<int> perm(n);  // old index -> new index
  for (int i = 0; i < n; ++i) perm[i] = (i + n - lead) % n;
  std::vector<int> gap2(n);
  for (int i = 0; i < n; ++i) gap2[perm[i]] = gap[i] == 0 ? punctures : gap[i];
  auto read_matching = [&](const char* key) {
    std::vector<int> m(n, -1);
    for (const auto& pr : j.at(key)) {
      int a = perm.at(pr.at(0).get<int>());
      int b = perm.at(pr.at(1).get<int>());
      m[a] = b;
      m[b] = a;
    }
    return m;
  };
  return CurveDiagram::make(punctures, std::move(gap2), read_matching("upper"),
                            read_matching("lower"));
}

}  // namespace platdist
