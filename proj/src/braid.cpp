#include "platdist/braid.hpp"

#include <algorithm>
#include <sstream>

namespace platdist {

BraidWord BraidWord::inverse() const {
  BraidWord r;
  r.strand_count = strand_count;
  r.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    r.letters.push_back(-*it);
  return r;
}

BraidWord BraidWord::concat(const BraidWord& tail) const {
  BraidWord r = *this;
  r.letters.insert(r.letters.end(), tail.letters.begin(), tail.letters.end());
  return r;
}

BraidWord BraidWord::free_reduce() const {
  BraidWord r;
  r.strand_count = strand_count;
  for (int l : letters) {
    if (!r.letters.empty() && r.letters.back() == -l)
      r.letters.pop_back();
    else
      r.letters.push_back(l);
  }
  return r;
}

std::string braid_to_string(const BraidWord& w) {
  std::ostringstream os;
  for (int l : w.letters) {
    os << 's' << std::abs(l);
    if (l < 0) os << '\'';
    os << ' ';
  }
  return os.str();
}

namespace {

// Bookkeeping for one strand of the curve passing through the twist disk:
// an arc with exactly one endpoint (the foot) among the crossings in gap k.
struct Through {
  int foot;      // old index in gap k
  int other;     // old index of the far endpoint
  bool is_upper; // side of the original arc
  int slot = -1; // new index of the crossing the spiral adds
};

}  // namespace

CurveDiagram apply_generator(const CurveDiagram& c, int k, int sign) {
  const int tm = c.punctures();
  if (k < 1 || k >= tm) throw curve_error("generator index out of range");
  if (sign != 1 && sign != -1) throw curve_error("generator sign must be +-1");
  if (c.is_empty()) return c;

  auto [f0, f1] = c.gap_range(k);
  if (f0 == f1) return reduce(c);  // twist disk misses the curve

  const int n = c.size();
  const int gl = (k == 1) ? tm : k - 1;  // gap holding the near-L block
  const int gr = k + 1;                  // gap holding the near-R block (k+1==2m is the infinity gap)

  auto is_foot = [&](int i) { return i >= f0 && i < f1; };

  // Classify the arcs incident to the feet.
  std::vector<Through> up_through, lo_through;
  for (int x = f0; x < f1; ++x) {
    int uy = c.upper(x);
    if (!is_foot(uy)) up_through.push_back({x, uy, true});
    int ly = c.lower(x);
    if (!is_foot(ly)) lo_through.push_back({x, ly, false});
  }
  std::vector<Through>& left_block = (sign > 0) ? up_through : lo_through;
  std::vector<Through>& right_block = (sign > 0) ? lo_through : up_through;
  const int nl = static_cast<int>(left_block.size());
  const int nr = static_cast<int>(right_block.size());
  const int nn = n + nl + nr;

  // New positions.  Old crossings keep their circular order except that the
  // feet reverse among themselves; the left block lands at the end of gap
  // gl's run, the right block at the start of gap gr's run.
  std::vector<int> newpos(n, -1);
  std::vector<int> ngap(nn, -1);
  {
    int out = 0;
    auto place_old_run = [&](int a, int b, bool reversed) {
      if (!reversed) {
        for (int i = a; i < b; ++i) { newpos[i] = out; ngap[out++] = c.gap(i); }
      } else {
        for (int i = b - 1; i >= a; --i) { newpos[i] = out; ngap[out++] = c.gap(i); }
      }
    };
    for (int g = 1; g <= tm; ++g) {
      auto [a, b] = c.gap_range(g);
      if (g == gr) { for (int t = 0; t < nr; ++t) ngap[out++] = g; }
      place_old_run(a, b, g == k);
      if (g == gl) { for (int t = 0; t < nl; ++t) ngap[out++] = g; }
    }
  }
  // Block slot ranges in the new order.
  int left_start = -1, right_start = -1;
  {
    // gl run ends where?  Recompute from layout: slots in gap gl are the
    // old run plus the block at its end; for gap gr the block precedes the
    // old run.
    int out = 0;
    for (int g = 1; g <= tm; ++g) {
      auto [a, b] = c.gap_range(g);
      int run = b - a;
      if (g == gr) { right_start = out; out += nr; }
      out += run;
      if (g == gl) { left_start = out; out += nl; }
    }
  }

  // Order within each block: the new crossing's arc to the far endpoint y
  // must nest with its neighbours, which forces descending circular
  // distance from the block's end to y.
  auto assign_block = [&](std::vector<Through>& blk, int start) {
    const int sz = static_cast<int>(blk.size());
    std::vector<int> idx(sz);
    for (int i = 0; i < sz; ++i) idx[i] = i;
    const int block_end = start + sz;
    auto kappa = [&](const Through& t) {
      return ((newpos[t.other] - block_end) % nn + nn) % nn;
    };
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return kappa(blk[a]) > kappa(blk[b]);
    });
    for (int r = 0; r < sz; ++r) blk[idx[r]].slot = start + r;
  };
  assign_block(left_block, left_start);
  assign_block(right_block, right_start);

  // Assemble the matchings.
  std::vector<int> nup(nn, -1), nlo(nn, -1);
  auto join = [](std::vector<int>& m, int a, int b) {
    m[a] = b;
    m[b] = a;
  };
  // Arcs not incident to any foot are untouched; arcs with both feet swap
  // sides and ride the reflection.
  for (int i = 0; i < n; ++i) {
    int j = c.upper(i);
    if (j > i && !is_foot(i) && !is_foot(j)) join(nup, newpos[i], newpos[j]);
    if (j > i && is_foot(i) && is_foot(j)) join(nlo, newpos[i], newpos[j]);
    j = c.lower(i);
    if (j > i && !is_foot(i) && !is_foot(j)) join(nlo, newpos[i], newpos[j]);
    if (j > i && is_foot(i) && is_foot(j)) join(nup, newpos[i], newpos[j]);
  }
  // Through strands break in two at the spiral crossing.  For an upper
  // strand the inner piece comes out below the axis, the outer piece stays
  // above; for a lower strand the sides swap.
  for (const Through& t : up_through) {
    join(nlo, newpos[t.foot], t.slot);
    join(nup, t.slot, newpos[t.other]);
  }
  for (const Through& t : lo_through) {
    join(nup, newpos[t.foot], t.slot);
    join(nlo, t.slot, newpos[t.other]);
  }

  return reduce(CurveDiagram::make(tm, std::move(ngap), std::move(nup),
                                   std::move(nlo)));
}

CurveDiagram apply_braid(const CurveDiagram& c, const BraidWord& w) {
  if (w.strand_count != c.punctures())
    throw curve_error("braid strand count does not match curve punctures");
  CurveDiagram cur = c.reduced() ? c : reduce(c);
  for (int l : w.letters) cur = apply_generator(cur, std::abs(l), l > 0 ? 1 : -1);
  return cur;
}

}  // namespace platdist
