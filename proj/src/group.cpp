#include "arrtop/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "arrtop/errors.hpp"

namespace arrtop {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(std::move(out));
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << 'x' << generator_of(w[i]);
    if (w[i] < 0) os << "^-1";
  }
  return os.str();
}

IntMatrix GroupPresentation::relation_matrix() const {
  IntMatrix m(relators.size(), std::vector<Integer>(static_cast<std::size_t>(num_generators()), 0));
  for (std::size_t r = 0; r < relators.size(); ++r)
    for (int l : relators[r]) m[r][static_cast<std::size_t>(generator_of(l))] += l > 0 ? 1 : -1;
  return m;
}

std::vector<Integer> Abelianization::generator_image(int g) const { return smith.V.at(static_cast<std::size_t>(g)); }

Abelianization abelianize(const GroupPresentation& pres) {
  Abelianization ab;
  ab.smith = smith_normal_form(pres.relation_matrix(), static_cast<std::size_t>(pres.num_generators()));
  ab.free_rank = ab.smith.free_rank();
  ab.torsion = ab.smith.torsion();
  return ab;
}

CosetSchreierData reidemeister_schreier(const GroupPresentation& pres, std::span<const std::int64_t> hom, int n) {
  const int g = pres.num_generators();
  if (static_cast<int>(hom.size()) != g)
    throw ArgumentError("homomorphism has " + std::to_string(hom.size()) + " values for " + std::to_string(g) + " generators");
  if (n < 1) throw ArgumentError("cover index must be positive");
  CosetSchreierData data;
  data.index = n;
  data.parent_generators = g;
  data.parent_relators = pres.num_relators();
  std::vector<std::int64_t> h(hom.begin(), hom.end());
  for (auto& v : h) v = mod(v, n);
  std::int64_t image = n;
  for (auto v : h) image = std::gcd(image, v);
  if (image != 1)
    throw ArgumentError("homomorphism is not onto Z_" + std::to_string(n) + ": image is the subgroup generated by " +
                        std::to_string(image) + " (index " + std::to_string(image) + ")");
  if (n == 1) {
    data.transversal = {Word{}};
    data.subgroup = pres;
    for (int j = 0; j < g; ++j) data.schreier_pairs.emplace_back(0, j);
    return data;
  }

  // trivial[c*g + j]: the Schreier generator (c, x_j) equals 1.
  std::vector<char> trivial(static_cast<std::size_t>(n * g), 0);
  data.transversal.assign(static_cast<std::size_t>(n), Word{});
  std::vector<char> reached(static_cast<std::size_t>(n), 0);
  reached[0] = 1;
  int unit = -1;
  for (int j = 0; j < g && unit < 0; ++j)
    if (std::gcd(h[static_cast<std::size_t>(j)], static_cast<std::int64_t>(n)) == 1) unit = j;
  if (unit >= 0) {
    std::int64_t c = 0;
    Word t;
    for (int step = 0; step + 1 < n; ++step) {
      trivial[static_cast<std::size_t>(c * g + unit)] = 1;
      t.push_back(letter(unit));
      c = mod(c + h[static_cast<std::size_t>(unit)], n);
      data.transversal[static_cast<std::size_t>(c)] = t;
    }
  } else {
    std::deque<std::int64_t> queue{0};
    while (!queue.empty()) {
      const std::int64_t c = queue.front();
      queue.pop_front();
      for (int j = 0; j < g; ++j)
        for (int sign : {1, -1}) {
          const std::int64_t next = mod(c + sign * h[static_cast<std::size_t>(j)], n);
          if (reached[static_cast<std::size_t>(next)]) continue;
          reached[static_cast<std::size_t>(next)] = 1;
          Word t = data.transversal[static_cast<std::size_t>(c)];
          t.push_back(letter(j, sign < 0));
          data.transversal[static_cast<std::size_t>(next)] = t;
          trivial[static_cast<std::size_t>((sign > 0 ? c : next) * g + j)] = 1;
          queue.push_back(next);
        }
    }
  }

  std::vector<int> index(static_cast<std::size_t>(n * g), -1);
  for (int c = 0; c < n; ++c)
    for (int j = 0; j < g; ++j) {
      if (trivial[static_cast<std::size_t>(c * g + j)]) continue;
      index[static_cast<std::size_t>(c * g + j)] = static_cast<int>(data.schreier_pairs.size());
      data.schreier_pairs.emplace_back(c, j);
      data.subgroup.generator_tags.push_back("s[" + std::to_string(c) + "," + pres.generator_tags[static_cast<std::size_t>(j)] + "]");
      data.subgroup.meridian_of.push_back(std::nullopt);
    }
  for (int c0 = 0; c0 < n; ++c0)
    for (const auto& rel : pres.relators) {
      Word out;
      std::int64_t c = c0;
      for (int l : rel) {
        const int j = generator_of(l);
        if (l > 0) {
          const int s = index[static_cast<std::size_t>(c * g + j)];
          if (s >= 0) out.push_back(letter(s));
          c = mod(c + h[static_cast<std::size_t>(j)], n);
        } else {
          c = mod(c - h[static_cast<std::size_t>(j)], n);
          const int s = index[static_cast<std::size_t>(c * g + j)];
          if (s >= 0) out.push_back(letter(s, true));
        }
      }
      if (c != c0) throw ArgumentError("relator " + word_to_string(rel) + " does not map to 0 under the homomorphism");
      data.subgroup.relators.push_back(free_reduce(std::move(out)));
    }
  return data;
}

namespace {

/// Replaces generator `gen` by `value` (a word) throughout `w`.
Word substitute(const Word& w, int gen, const Word& value, const Word& value_inv) {
  Word out;
  for (int l : w) {
    if (generator_of(l) != gen) {
      out.push_back(l);
      continue;
    }
    const Word& rep = l > 0 ? value : value_inv;
    out.insert(out.end(), rep.begin(), rep.end());
  }
  return free_reduce(std::move(out));
}

}  // namespace

GroupPresentation simplify_presentation(const GroupPresentation& pres, std::size_t max_length) {
  GroupPresentation cur = pres;
  for (;;) {
    // Clean relators.
    std::set<Word> seen;
    std::vector<Word> rels;
    for (auto& r : cur.relators) {
      Word c = cyclic_reduce(r);
      if (c.empty()) continue;
      // Canonical rotation among rotations of c and its inverse.
      Word best = c;
      for (const Word& base : {c, cyclic_reduce(inverse(c))})
        for (std::size_t s = 0; s < base.size(); ++s) {
          Word rot(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
          rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(s));
          if (rot < best) best = rot;
        }
      if (seen.insert(best).second) rels.push_back(std::move(c));
    }
    cur.relators = std::move(rels);

    // Candidate eliminations: (relator length, relator, generator).
    std::vector<std::tuple<std::size_t, int, int>> cands;
    for (int r = 0; r < cur.num_relators(); ++r) {
      std::map<int, int> occurrences;
      for (int l : cur.relators[static_cast<std::size_t>(r)]) ++occurrences[generator_of(l)];
      for (auto [gen, cnt] : occurrences)
        if (cnt == 1) cands.emplace_back(cur.relators[static_cast<std::size_t>(r)].size(), r, gen);
    }
    std::sort(cands.begin(), cands.end());
    bool progressed = false;
    for (auto [len, r, gen] : cands) {
      const Word& rel = cur.relators[static_cast<std::size_t>(r)];
      std::size_t pos = 0;
      while (generator_of(rel[pos]) != gen) ++pos;
      // rel = u x^e v  =>  x^e = u^{-1} v^{-1}.
      const Word u(rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(pos));
      const Word v(rel.begin() + static_cast<std::ptrdiff_t>(pos) + 1, rel.end());
      Word value = concat(inverse(u), inverse(v));
      if (rel[pos] < 0) value = inverse(value);
      const Word value_inv = inverse(value);
      std::vector<Word> next;
      bool too_long = false;
      for (int q = 0; q < cur.num_relators() && !too_long; ++q) {
        if (q == r) continue;
        Word w = substitute(cur.relators[static_cast<std::size_t>(q)], gen, value, value_inv);
        if (w.size() > max_length) too_long = true;
        next.push_back(std::move(w));
      }
      if (too_long) continue;
      // Drop the generator and renumber.
      for (auto& w : next)
        for (int& l : w) {
          const int j = generator_of(l);
          if (j > gen) l = l > 0 ? l - 1 : l + 1;
        }
      cur.relators = std::move(next);
      cur.generator_tags.erase(cur.generator_tags.begin() + gen);
      cur.meridian_of.erase(cur.meridian_of.begin() + gen);
      progressed = true;
      break;
    }
    if (!progressed) break;
  }
  return cur;
}

}  // namespace arrtop
