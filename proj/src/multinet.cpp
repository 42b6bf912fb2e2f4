#include "arrtop/multinet.hpp"

#include <algorithm>
#include <numeric>

#include "arrtop/errors.hpp"

namespace arrtop {

namespace {

void check_partition(int n, const std::vector<std::vector<int>>& classes, const std::vector<int>& mult) {
  if (static_cast<int>(mult.size()) != n)
    throw ValidationError("multiplicity vector has " + std::to_string(mult.size()) + " entries, expected " +
                          std::to_string(n));
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const auto& cls : classes) {
    if (cls.empty()) throw ValidationError("multinet class is empty");
    for (int h : cls) {
      if (h < 0 || h >= n) throw ValidationError("multinet class references line " + std::to_string(h));
      if (seen[static_cast<std::size_t>(h)]++) throw ValidationError("line " + std::to_string(h) + " is in two classes");
    }
  }
  for (int h = 0; h < n; ++h) {
    if (!seen[static_cast<std::size_t>(h)]) throw ValidationError("line " + std::to_string(h) + " is in no class");
    if (mult[static_cast<std::size_t>(h)] < 1)
      throw ValidationError("multiplicity of line " + std::to_string(h) + " is not positive");
  }
}

void canonicalize(std::vector<std::vector<int>>& classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
}

std::vector<char> base_mask(const IntersectionLattice& lat, const Multinet& cand) {
  std::vector<char> in_base(lat.flats.size(), 0);
  for (int f : cand.base_locus) {
    if (f < 0 || f >= static_cast<int>(lat.flats.size())) throw ValidationError("base locus references flat " + std::to_string(f));
    in_base[static_cast<std::size_t>(f)] = 1;
  }
  return in_base;
}

/// Axiom (2): lines of different classes meet in the base locus.
bool check_axiom2(const IntersectionLattice& lat, const std::vector<int>& cls, const std::vector<char>& in_base,
                  MultinetVerdict& v) {
  for (int h = 0; h < lat.n; ++h)
    for (int k = h + 1; k < lat.n; ++k) {
      if (cls[static_cast<std::size_t>(h)] == cls[static_cast<std::size_t>(k)]) continue;
      const int f = lat.flat_of(h, k);
      if (!in_base[static_cast<std::size_t>(f)]) {
        v.witness_lines = {h, k};
        v.witness_flat = f;
        v.failed_axiom = 2;
        v.diagnostic = "lines " + std::to_string(h) + " and " + std::to_string(k) +
                       " lie in different classes but meet outside the base locus";
        return false;
      }
    }
  return true;
}

/// Axiom (4): each class union stays connected once the base locus is removed.
bool check_axiom4(const IntersectionLattice& lat, const Multinet& cand, const std::vector<char>& in_base,
                  MultinetVerdict& v) {
  for (int c = 0; c < cand.k(); ++c) {
    const auto& lines = cand.classes[static_cast<std::size_t>(c)];
    std::vector<int> parent(lines.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (std::size_t a = 0; a < lines.size(); ++a)
      for (std::size_t b = a + 1; b < lines.size(); ++b)
        if (!in_base[static_cast<std::size_t>(lat.flat_of(lines[a], lines[b]))])
          parent[static_cast<std::size_t>(find(static_cast<int>(a)))] = find(static_cast<int>(b));
    for (std::size_t a = 1; a < lines.size(); ++a)
      if (find(static_cast<int>(a)) != find(0)) {
        v.witness_lines = {lines[0], lines[a]};
        v.failed_axiom = 4;
        v.diagnostic = "class " + std::to_string(c) + " minus the base locus is disconnected";
        return false;
      }
  }
  return true;
}

}  // namespace

bool Multinet::reduced() const {
  return std::all_of(mult.begin(), mult.end(), [](int m) { return m == 1; });
}

std::vector<int> Multinet::class_of_line(int n) const {
  std::vector<int> out(static_cast<std::size_t>(n), -1);
  for (int c = 0; c < k(); ++c)
    for (int h : classes[static_cast<std::size_t>(c)]) out[static_cast<std::size_t>(h)] = c;
  return out;
}

Multinet Multinet::from_partition(const IntersectionLattice& lat, std::vector<std::vector<int>> classes,
                                  std::vector<int> mult) {
  check_partition(lat.n, classes, mult);
  canonicalize(classes);
  Multinet net;
  net.classes = std::move(classes);
  net.mult = std::move(mult);
  const auto cls = net.class_of_line(lat.n);
  for (int h : net.classes[0]) net.weight += net.mult[static_cast<std::size_t>(h)];
  for (int f = 0; f < static_cast<int>(lat.flats.size()); ++f) {
    const auto& lines = lat.flats[static_cast<std::size_t>(f)].lines;
    const bool multicolored = std::any_of(lines.begin(), lines.end(), [&](int h) {
      return cls[static_cast<std::size_t>(h)] != cls[static_cast<std::size_t>(lines[0])];
    });
    if (!multicolored) continue;
    int nx = 0;
    for (int h : lines)
      if (cls[static_cast<std::size_t>(h)] == 0) nx += net.mult[static_cast<std::size_t>(h)];
    net.base_locus.push_back(f);
    net.base_multiplicity.push_back(nx);
  }
  return net;
}

Multinet Multinet::reduced_from_partition(const IntersectionLattice& lat, std::vector<std::vector<int>> classes) {
  return from_partition(lat, std::move(classes), std::vector<int>(static_cast<std::size_t>(lat.n), 1));
}

MultinetVerdict verify_multinet(const IntersectionLattice& lat, const Multinet& cand) {
  check_partition(lat.n, cand.classes, cand.mult);
  if (cand.k() < 3) throw ValidationError("a multinet needs at least 3 classes, got " + std::to_string(cand.k()));
  const auto cls = cand.class_of_line(lat.n);
  const auto m = [&](int h) { return cand.mult[static_cast<std::size_t>(h)]; };
  MultinetVerdict v;
  auto fail = [&](int axiom, std::string msg) {
    v.valid = false;
    v.failed_axiom = axiom;
    v.diagnostic = std::move(msg);
    return v;
  };

  // (1) equal class weights.
  std::vector<int> sums(static_cast<std::size_t>(cand.k()), 0);
  for (int h = 0; h < lat.n; ++h) sums[static_cast<std::size_t>(cls[static_cast<std::size_t>(h)])] += m(h);
  for (int c = 1; c < cand.k(); ++c)
    if (sums[static_cast<std::size_t>(c)] != sums[0]) {
      v.witness_lines = cand.classes[static_cast<std::size_t>(c)];
      return fail(1, "class " + std::to_string(c) + " has weight " + std::to_string(sums[static_cast<std::size_t>(c)]) +
                         " but class 0 has weight " + std::to_string(sums[0]));
    }
  if (cand.weight != 0 && cand.weight != sums[0])
    return fail(1, "stated weight " + std::to_string(cand.weight) + " differs from class weight " + std::to_string(sums[0]));

  const auto in_base = base_mask(lat, cand);
  if (!check_axiom2(lat, cls, in_base, v)) return v;

  // (3) n_X independent of the class.
  for (std::size_t b = 0; b < cand.base_locus.size(); ++b) {
    const int f = cand.base_locus[b];
    std::vector<int> nx(static_cast<std::size_t>(cand.k()), 0);
    for (int h : lat.flats[static_cast<std::size_t>(f)].lines) nx[static_cast<std::size_t>(cls[static_cast<std::size_t>(h)])] += m(h);
    const bool stated_ok = b >= cand.base_multiplicity.size() || cand.base_multiplicity[b] == nx[0];
    if (std::any_of(nx.begin(), nx.end(), [&](int x) { return x != nx[0]; }) || !stated_ok) {
      v.witness_flat = f;
      v.witness_lines = lat.flats[static_cast<std::size_t>(f)].lines;
      return fail(3, "n_X differs between classes at flat " + std::to_string(f));
    }
  }

  if (!check_axiom4(lat, cand, in_base, v)) return v;

  int g = 0;
  for (int x : cand.mult) g = std::gcd(g, x);
  if (g != 1) return fail(5, "multiplicities share the factor " + std::to_string(g));

  v.valid = true;
  return v;
}

bool is_net(const Multinet& cand, const IntersectionLattice& lat) {
  if (!cand.reduced()) return false;
  const auto cls = cand.class_of_line(lat.n);
  for (int f : cand.base_locus) {
    std::vector<int> count(static_cast<std::size_t>(cand.k()), 0);
    for (int h : lat.flats[static_cast<std::size_t>(f)].lines) ++count[static_cast<std::size_t>(cls[static_cast<std::size_t>(h)])];
    if (std::any_of(count.begin(), count.end(), [](int c) { return c != 1; })) return false;
  }
  return true;
}

bool satisfies_pereira_yuzvinsky(const Multinet& cand) {
  if (cand.base_locus.size() <= 1) return true;
  if (cand.k() != 3 && cand.k() != 4) return false;
  return cand.reduced() || cand.k() == 3;
}

namespace {

class MultinetSearch {
 public:
  MultinetSearch(const IntersectionLattice& lat, const MultinetSearchOptions& opts, int k)
      : lat_(lat), opts_(opts), k_(k), color_(static_cast<std::size_t>(lat.n), -1) {
    flats_of_line_.resize(static_cast<std::size_t>(lat.n));
    for (int f = 0; f < static_cast<int>(lat.flats.size()); ++f)
      for (int h : lat.flats[static_cast<std::size_t>(f)].lines) flats_of_line_[static_cast<std::size_t>(h)].push_back(f);
    counts_.assign(lat.flats.size(), std::vector<int>(static_cast<std::size_t>(k), 0));
    assigned_.assign(lat.flats.size(), 0);
  }

  void run(std::vector<Multinet>& out) {
    out_ = &out;
    color_line(0, 0);
  }

 private:
  int distinct(int f) const {
    int d = 0;
    for (int c : counts_[static_cast<std::size_t>(f)]) d += c > 0;
    return d;
  }

  bool full() const { return out_->size() >= opts_.max_results; }

  void color_line(int h, int used) {
    if (full()) return;
    if (h == lat_.n) {
      if (used == k_) finish_partition();
      return;
    }
    // Remaining lines must be able to introduce the unused colors.
    if (k_ - used > lat_.n - h) return;
    const int top = std::min(used, k_ - 1);
    for (int c = 0; c <= top; ++c) {
      color_[static_cast<std::size_t>(h)] = c;
      bool ok = true;
      for (int f : flats_of_line_[static_cast<std::size_t>(h)]) {
        ++counts_[static_cast<std::size_t>(f)][static_cast<std::size_t>(c)];
        ++assigned_[static_cast<std::size_t>(f)];
      }
      for (int f : flats_of_line_[static_cast<std::size_t>(h)]) {
        const int d = distinct(f);
        const int open = lat_.flats[static_cast<std::size_t>(f)].multiplicity() - assigned_[static_cast<std::size_t>(f)];
        // A flat is monochromatic or meets all k classes.
        if (d >= 2 && d + open < k_) ok = false;
      }
      if (ok) color_line(h + 1, std::max(used, c + 1));
      for (int f : flats_of_line_[static_cast<std::size_t>(h)]) {
        --counts_[static_cast<std::size_t>(f)][static_cast<std::size_t>(c)];
        --assigned_[static_cast<std::size_t>(f)];
      }
      color_[static_cast<std::size_t>(h)] = -1;
    }
  }

  void finish_partition() {
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(k_));
    for (int h = 0; h < lat_.n; ++h) classes[static_cast<std::size_t>(color_[static_cast<std::size_t>(h)])].push_back(h);
    // Axiom (4) depends only on the partition.
    const auto probe = Multinet::reduced_from_partition(lat_, classes);
    {
      MultinetVerdict v;
      const auto in_base = base_mask(lat_, probe);
      if (!check_axiom2(lat_, probe.class_of_line(lat_.n), in_base, v) || !check_axiom4(lat_, probe, in_base, v)) return;
    }
    base_ = probe.base_locus;
    last_in_class_.assign(static_cast<std::size_t>(k_), -1);
    for (int h = 0; h < lat_.n; ++h) last_in_class_[static_cast<std::size_t>(color_[static_cast<std::size_t>(h)])] = h;
    closing_flats_.assign(static_cast<std::size_t>(lat_.n), {});
    for (int f : base_) closing_flats_[static_cast<std::size_t>(lat_.flats[static_cast<std::size_t>(f)].lines.back())].push_back(f);
    classes_ = std::move(classes);
    mult_.assign(static_cast<std::size_t>(lat_.n), 0);
    class_sum_.assign(static_cast<std::size_t>(k_), 0);
    target_ = -1;
    assign_mult(0);
  }

  void assign_mult(int h) {
    if (full()) return;
    if (h == lat_.n) {
      int g = 0;
      for (int x : mult_) g = std::gcd(g, x);
      if (g != 1) return;
      auto net = Multinet::from_partition(lat_, classes_, mult_);
      const auto v = verify_multinet(lat_, net);
      if (!v.valid) throw ConsistencyError("multinet search produced a candidate failing axiom " + std::to_string(v.failed_axiom));
      if (opts_.nets_only && !is_net(net, lat_)) return;
      out_->push_back(std::move(net));
      return;
    }
    const int c = color_[static_cast<std::size_t>(h)];
    const int top = opts_.reduced_only ? 1 : opts_.max_weight;
    for (int m = 1; m <= top; ++m) {
      mult_[static_cast<std::size_t>(h)] = m;
      class_sum_[static_cast<std::size_t>(c)] += m;
      const int saved_target = target_;
      bool ok = true;
      if (target_ >= 0 && class_sum_[static_cast<std::size_t>(c)] > target_) ok = false;
      if (ok && last_in_class_[static_cast<std::size_t>(c)] == h) {
        if (target_ < 0) target_ = class_sum_[static_cast<std::size_t>(c)];
        else if (class_sum_[static_cast<std::size_t>(c)] != target_) ok = false;
      }
      if (ok)
        for (int f : closing_flats_[static_cast<std::size_t>(h)]) {
          std::vector<int> nx(static_cast<std::size_t>(k_), 0);
          for (int l : lat_.flats[static_cast<std::size_t>(f)].lines)
            nx[static_cast<std::size_t>(color_[static_cast<std::size_t>(l)])] += mult_[static_cast<std::size_t>(l)];
          if (std::any_of(nx.begin(), nx.end(), [&](int x) { return x != nx[0]; })) {
            ok = false;
            break;
          }
        }
      if (ok) assign_mult(h + 1);
      target_ = saved_target;
      class_sum_[static_cast<std::size_t>(c)] -= m;
      mult_[static_cast<std::size_t>(h)] = 0;
    }
  }

  const IntersectionLattice& lat_;
  const MultinetSearchOptions& opts_;
  int k_;
  std::vector<int> color_;
  std::vector<std::vector<int>> flats_of_line_;
  std::vector<std::vector<int>> counts_;
  std::vector<int> assigned_;
  std::vector<Multinet>* out_ = nullptr;

  std::vector<std::vector<int>> classes_;
  std::vector<int> base_;
  std::vector<int> last_in_class_;
  std::vector<std::vector<int>> closing_flats_;
  std::vector<int> mult_;
  std::vector<int> class_sum_;
  int target_ = -1;
};

}  // namespace

std::vector<Multinet> search_multinets(const IntersectionLattice& lat, const MultinetSearchOptions& opts) {
  if (lat.n > opts.max_lines)
    throw BudgetError("multinet search is limited to " + std::to_string(opts.max_lines) + " lines; arrangement has " +
                      std::to_string(lat.n));
  if (opts.min_classes < 3) throw ArgumentError("multinets have at least 3 classes");
  std::vector<Multinet> out;
  for (int k = opts.min_classes; k <= std::min(opts.max_classes, lat.n); ++k) {
    MultinetSearch search(lat, opts, k);
    search.run(out);
    if (out.size() >= opts.max_results) break;
  }
  return out;
}

std::vector<Multinet> enumerate_3nets(const IntersectionLattice& lat, std::size_t max_results, int max_lines) {
  MultinetSearchOptions opts;
  opts.min_classes = opts.max_classes = 3;
  opts.reduced_only = true;
  opts.nets_only = true;
  opts.max_results = max_results;
  opts.max_lines = max_lines;
  return search_multinets(lat, opts);
}

std::vector<std::vector<int>> latin_square(const Multinet& net, const IntersectionLattice& lat) {
  if (net.k() != 3 || !is_net(net, lat)) throw ArgumentError("latin_square needs a 3-net");
  const auto& a = net.classes[0];
  const auto& b = net.classes[1];
  const auto& c = net.classes[2];
  std::vector<std::vector<int>> square(a.size(), std::vector<int>(b.size(), -1));
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = 0; q < b.size(); ++q) {
      const auto& lines = lat.flats[static_cast<std::size_t>(lat.flat_of(a[p], b[q]))].lines;
      for (std::size_t r = 0; r < c.size(); ++r)
        if (std::binary_search(lines.begin(), lines.end(), c[r])) square[p][q] = static_cast<int>(r);
    }
  return square;
}

PencilSubspace pencil_subspace(const Multinet& cand, int n) {
  PencilSubspace ps;
  ps.k = cand.k();
  auto u = [&](int a) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
    for (int h : cand.classes[static_cast<std::size_t>(a)]) v[static_cast<std::size_t>(h)] = cand.mult[static_cast<std::size_t>(h)];
    return v;
  };
  const auto u1 = u(0);
  for (int a = 1; a < cand.k(); ++a) {
    auto v = u(a);
    for (int h = 0; h < n; ++h) v[static_cast<std::size_t>(h)] -= u1[static_cast<std::size_t>(h)];
    ps.basis.push_back(std::move(v));
  }
  return ps;
}

std::vector<PointedMultinet> pointed_multinets(const IntersectionLattice& lat, const std::vector<Multinet>& multinets) {
  std::vector<PointedMultinet> out;
  for (const auto& net : multinets) {
    for (int h = 0; h < lat.n; ++h) {
      const int mh = net.mult[static_cast<std::size_t>(h)];
      if (mh <= 1) continue;
      bool divides = true;
      for (std::size_t b = 0; b < net.base_locus.size(); ++b)
        if (lat.flats[static_cast<std::size_t>(net.base_locus[b])].contains_line(h) && net.base_multiplicity[b] % mh != 0)
          divides = false;
      if (divides) out.push_back(PointedMultinet{net, h});
    }
  }
  return out;
}

std::vector<PointedMultinet> find_pointed_multinets(const IntersectionLattice& lat, const MultinetSearchOptions& opts) {
  return pointed_multinets(lat, search_multinets(lat, opts));
}

}  // namespace arrtop
