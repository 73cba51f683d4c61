#include "supercup/weights.hpp"

#include <algorithm>
#include <sstream>

namespace supercup {

namespace {

void append_list(std::ostringstream& os, const std::vector<Int>& v) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
}

void append_set(std::ostringstream& os, const std::set<Int>& s) {
  bool first = true;
  for (Int x : s) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
}

}  // namespace

SuperWeight::SuperWeight(int m_, int n_, std::vector<Int> top_, std::vector<Int> bottom_)
    : m(m_), n(n_), top(std::move(top_)), bottom(std::move(bottom_)) {
  if (m < 0 || n < 0) throw ValidationError("gl(m|n): m and n must be non-negative");
  if (static_cast<int>(top.size()) != m)
    throw ValidationError("weight has " + std::to_string(top.size()) + " top entries, expected " +
                          std::to_string(m));
  if (static_cast<int>(bottom.size()) != n)
    throw ValidationError("weight has " + std::to_string(bottom.size()) +
                          " bottom entries, expected " + std::to_string(n));
  for (size_t i = 1; i < top.size(); ++i)
    if (top[i - 1] < top[i])
      throw ValidationError("dominance violated at top index " + std::to_string(i + 1));
  for (size_t i = 1; i < bottom.size(); ++i)
    if (bottom[i - 1] < bottom[i])
      throw ValidationError("dominance violated at bottom index " + std::to_string(i + 1));
}

std::string SuperWeight::to_string() const {
  std::ostringstream os;
  os << "gl(" << m << '|' << n << ") [";
  append_list(os, top);
  os << " | ";
  append_list(os, bottom);
  os << ']';
  return os.str();
}

bool operator<(const SuperWeight& a, const SuperWeight& b) {
  if (a.m != b.m) return a.m < b.m;
  if (a.n != b.n) return a.n < b.n;
  if (a.top != b.top) return a.top < b.top;
  return a.bottom < b.bottom;
}

WeightDiagram::WeightDiagram(std::set<Int> vees_, std::set<Int> crosses_, std::set<Int> circles_,
                             int m_, int n_)
    : vees(std::move(vees_)), crosses(std::move(crosses_)), circles(std::move(circles_)),
      m(m_), n(n_) {
  for (Int v : vees)
    if (crosses.count(v) || circles.count(v))
      throw ValidationError("diagram labels overlap at position " + std::to_string(v));
  for (Int x : crosses)
    if (circles.count(x))
      throw ValidationError("diagram labels overlap at position " + std::to_string(x));
  if (static_cast<int>(vees.size() + crosses.size()) != m)
    throw ValidationError("diagram cardinality mismatch: |vees|+|crosses| != m");
  if (static_cast<int>(vees.size() + circles.size()) != n)
    throw ValidationError("diagram cardinality mismatch: |vees|+|circles| != n");
}

Symbol WeightDiagram::label(Int pos) const {
  if (vees.count(pos)) return Symbol::Vee;
  if (crosses.count(pos)) return Symbol::Cross;
  if (circles.count(pos)) return Symbol::Circle;
  return Symbol::Wedge;
}

std::set<Int> WeightDiagram::cores() const {
  std::set<Int> c = crosses;
  c.insert(circles.begin(), circles.end());
  return c;
}

std::string WeightDiagram::key() const {
  std::ostringstream os;
  os << m << '|' << n << ";v:";
  append_set(os, vees);
  os << ";x:";
  append_set(os, crosses);
  os << ";o:";
  append_set(os, circles);
  return os.str();
}

WeightDiagram weight_to_diagram(const SuperWeight& w) {
  std::set<Int> ix, io;
  for (int i = 0; i < w.m; ++i) ix.insert(w.top[i] - i);
  for (int i = 0; i < w.n; ++i) io.insert((i + 1) - w.m - w.bottom[i]);
  std::set<Int> vees, crosses, circles;
  for (Int p : ix) (io.count(p) ? vees : crosses).insert(p);
  for (Int p : io)
    if (!ix.count(p)) circles.insert(p);
  return WeightDiagram(std::move(vees), std::move(crosses), std::move(circles), w.m, w.n);
}

SuperWeight diagram_to_weight(const WeightDiagram& d) {
  std::vector<Int> ix(d.vees.begin(), d.vees.end());
  ix.insert(ix.end(), d.crosses.begin(), d.crosses.end());
  std::sort(ix.begin(), ix.end(), std::greater<Int>());
  std::vector<Int> io(d.vees.begin(), d.vees.end());
  io.insert(io.end(), d.circles.begin(), d.circles.end());
  std::sort(io.begin(), io.end());

  if (static_cast<int>(ix.size()) != d.m || static_cast<int>(io.size()) != d.n)
    throw ValidationError("diagram cardinality mismatch");

  std::vector<Int> top(d.m), bottom(d.n);
  for (int i = 0; i < d.m; ++i) top[i] = ix[i] + i;
  for (int i = 0; i < d.n; ++i) bottom[i] = (i + 1) - d.m - io[i];
  return SuperWeight(d.m, d.n, std::move(top), std::move(bottom));
}

int atypicality(const WeightDiagram& d) { return static_cast<int>(d.vees.size()); }

int atypicality(const SuperWeight& w) { return atypicality(weight_to_diagram(w)); }

bool is_maximal_atypical(const SuperWeight& w) { return atypicality(w) == w.n; }

std::set<Int> compacted_vees(const WeightDiagram& d) {
  std::set<Int> cores = d.cores();
  std::set<Int> out;
  for (Int v : d.vees) {
    Int shift = 0;
    for (Int c : cores)
      if (c > v) ++shift;
    out.insert(v + shift);
  }
  return out;
}

int parity(const SuperWeight& w) {
  WeightDiagram d = weight_to_diagram(w);
  int k = atypicality(d);
  Int s = 0;
  if (k == w.n) {
    for (Int b : w.bottom) s += b;
  } else {
    if (k == 0) return 0;
    WeightDiagram reduced(compacted_vees(d), {}, {}, k, k);
    SuperWeight pw = diagram_to_weight(reduced);
    for (Int b : pw.bottom) s += b;
  }
  return static_cast<int>(((s % 2) + 2) % 2);
}

BlockLabel block_label(const WeightDiagram& d) { return BlockLabel{d.crosses, d.circles}; }

BlockLabel block_label(const SuperWeight& w) { return block_label(weight_to_diagram(w)); }

ClassicalWeight classical_core_weight(const BlockLabel& b, int r) {
  if (!b.circles.empty())
    throw ValidationError("classical core: block has circles, not a maximal atypical core");
  if (static_cast<int>(b.crosses.size()) != r)
    throw ValidationError("classical core: expected " + std::to_string(r) + " crosses, found " +
                          std::to_string(b.crosses.size()));
  std::vector<Int> c(b.crosses.rbegin(), b.crosses.rend());  // descending
  for (int i = 0; i < r; ++i) c[i] += i;
  return ClassicalWeight(std::move(c));
}

bool is_stable(const SuperWeight& w) {
  WeightDiagram d = weight_to_diagram(w);
  if (atypicality(d) != w.n)
    throw ValidationError("stability is defined for maximal atypical weights");
  std::set<Int> cores = d.cores();
  if (d.vees.empty() || cores.empty()) return true;
  return *d.vees.rbegin() < *cores.begin();
}

bool is_negatively_stable(const SuperWeight& w) {
  if (!is_stable(w)) return false;
  WeightDiagram d = weight_to_diagram(w);
  if (d.vees.empty()) return true;
  return *d.vees.rbegin() <= -static_cast<Int>(w.m - w.n);
}

}  // namespace supercup
