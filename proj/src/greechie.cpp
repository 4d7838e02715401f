#include "oml/greechie.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace oml {

namespace {

std::vector<int> shared_atoms(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

}  // namespace

void validate_greechie(const GreechieDiagram& d) {
  std::vector<bool> used(d.atoms.size(), false);
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const auto& b = d.blocks[i];
    if (b.size() < 2) throw GreechieError("block " + std::to_string(i + 1) + " has fewer than 2 atoms");
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (b[k] < 0 || b[k] >= static_cast<int>(d.atoms.size())) {
        throw GreechieError("block " + std::to_string(i + 1) + " refers to an unknown atom");
      }
      if (k > 0 && b[k] <= b[k - 1]) {
        throw GreechieError("block " + std::to_string(i + 1) + " repeats an atom or is unsorted");
      }
      used[b[k]] = true;
    }
    for (std::size_t j = 0; j < i; ++j) {
      const auto& c = d.blocks[j];
      if (b == c) throw GreechieError("blocks " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " are equal");
      auto common = shared_atoms(b, c);
      if (common.size() == std::min(b.size(), c.size())) {
        throw GreechieError("blocks " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                            " are nested");
      }
      if (common.size() >= 2) {
        throw GreechieError("blocks " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                            " share more than one atom");
      }
    }
  }
  for (std::size_t a = 0; a < used.size(); ++a) {
    if (!used[a]) throw GreechieError("atom " + d.atoms[a] + " is in no block");
  }
}

GreechieDiagram parse_greechie(std::string_view text) {
  GreechieDiagram d;
  std::map<std::string, int> index;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<int> block;
    for (std::string w; words >> w;) {
      auto [it, inserted] = index.emplace(w, static_cast<int>(d.atoms.size()));
      if (inserted) d.atoms.push_back(w);
      block.push_back(it->second);
    }
    if (block.empty()) continue;
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end()) {
      throw GreechieError("line " + std::to_string(line_no) + ": atom repeated within a block");
    }
    if (block.size() < 2) throw GreechieError("line " + std::to_string(line_no) + ": block has fewer than 2 atoms");
    d.blocks.push_back(std::move(block));
  }
  if (d.blocks.empty()) throw GreechieError("diagram has no blocks");
  validate_greechie(d);
  return d;
}

std::string format_greechie(const GreechieDiagram& d) {
  std::string out;
  for (const auto& b : d.blocks) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k) out += ' ';
      out += d.atoms[b[k]];
    }
    out += '\n';
  }
  return out;
}

OrthoModel greechie_to_lattice(const GreechieDiagram& d, std::string name) {
  validate_greechie(d);
  // Items: 0, 1, then (block, proper nonempty subset) pairs.
  struct Item {
    int block;
    unsigned mask;
  };
  std::vector<Item> items = {{-1, 0}, {-1, 0}};
  std::vector<std::vector<int>> item_of(d.blocks.size());
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const unsigned full = (1u << d.blocks[b].size()) - 1;
    item_of[b].assign(full + 1, -1);
    item_of[b][0] = 0;
    item_of[b][full] = 1;
    for (unsigned m = 1; m < full; ++m) {
      item_of[b][m] = static_cast<int>(items.size());
      items.push_back({static_cast<int>(b), m});
    }
  }

  std::vector<int> parent(items.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  auto position = [&](std::size_t b, int atom) {
    const auto& blk = d.blocks[b];
    return static_cast<int>(std::find(blk.begin(), blk.end(), atom) - blk.begin());
  };
  // Blocks sharing atom x share the subalgebra {0, x, x', 1}.
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    for (std::size_t c = b + 1; c < d.blocks.size(); ++c) {
      for (int x : shared_atoms(d.blocks[b], d.blocks[c])) {
        unsigned fb = (1u << d.blocks[b].size()) - 1, fc = (1u << d.blocks[c].size()) - 1;
        unsigned sb = 1u << position(b, x), sc = 1u << position(c, x);
        unite(item_of[b][sb], item_of[c][sc]);
        unite(item_of[b][fb & ~sb], item_of[c][fc & ~sc]);
      }
    }
  }

  // Element order: 0, atoms by atom index, other classes by first item, 1.
  std::vector<int> order;
  std::vector<bool> placed(items.size(), false);
  auto place = [&](int item) {
    int r = find(item);
    if (!placed[r]) {
      placed[r] = true;
      order.push_back(r);
    }
  };
  place(0);
  for (std::size_t a = 0; a < d.atoms.size(); ++a) {
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
      int p = position(b, static_cast<int>(a));
      if (p < static_cast<int>(d.blocks[b].size())) {
        place(item_of[b][1u << p]);
        break;
      }
    }
  }
  for (std::size_t i = 2; i < items.size(); ++i) place(static_cast<int>(i));
  place(1);

  const int n = static_cast<int>(order.size());
  std::vector<int> element_of(items.size());
  for (int e = 0; e < n; ++e) element_of[order[e]] = e;
  auto elem = [&](int item) { return element_of[find(item)]; };

  std::vector<std::string> names(n);
  names[0] = "0";
  names[n - 1] = "1";
  for (std::size_t i = 2; i < items.size(); ++i) {
    int e = elem(static_cast<int>(i));
    if (!names[e].empty()) continue;
    const auto& blk = d.blocks[items[i].block];
    std::string nm;
    int bits = std::popcount(items[i].mask);
    for (std::size_t k = 0; k < blk.size(); ++k) {
      if (items[i].mask & (1u << k)) nm += (nm.empty() ? "" : ",") + d.atoms[blk[k]];
    }
    names[e] = bits == 1 ? nm : "{" + nm + "}";
  }

  std::vector<Element> complement(n, 0);
  std::vector<bool> has_complement(n, false);
  auto set_complement = [&](int e, int c) {
    if (has_complement[e] && complement[e] != c) {
      throw OrthoAxiomError(name + ": complement of " + names[e] + " is not well defined");
    }
    has_complement[e] = true;
    complement[e] = static_cast<Element>(c);
  };
  set_complement(0, n - 1);
  set_complement(n - 1, 0);
  std::vector<bool> leq(n * n, false);
  for (int e = 0; e < n; ++e) {
    leq[e * n + e] = true;
    leq[0 * n + e] = true;
    leq[e * n + n - 1] = true;
  }
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const unsigned full = (1u << d.blocks[b].size()) - 1;
    for (unsigned m = 1; m < full; ++m) {
      int e = elem(item_of[b][m]);
      set_complement(e, elem(item_of[b][full & ~m]));
      for (unsigned s = (m - 1) & m; s != 0; s = (s - 1) & m) leq[elem(item_of[b][s]) * n + e] = true;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (int j = 0; j < n; ++j) {
        if (leq[k * n + j]) leq[i * n + j] = true;
      }
    }
  }
  return OrthoModel(std::move(name), std::move(names), std::move(complement), std::move(leq));
}

std::optional<int> shortest_loop(const GreechieDiagram& d) {
  const int k = static_cast<int>(d.blocks.size());
  std::vector<std::vector<int>> meet(k * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j) meet[i * k + j] = shared_atoms(d.blocks[i], d.blocks[j]);
    }
  }
  // A loop is a cycle of distinct blocks whose consecutive intersection
  // points are pairwise distinct.
  std::optional<int> best;
  std::vector<int> path;
  std::vector<int> points;
  std::vector<bool> on_path(k, false);
  auto extend = [&](auto&& self, int limit) -> void {
    int last = path.back();
    int len = static_cast<int>(path.size());
    if (len >= 3) {
      for (int x : meet[last * k + path[0]]) {
        if (std::find(points.begin(), points.end(), x) == points.end()) {
          best = len;
          return;
        }
      }
    }
    if (len == limit || best) return;
    for (int next = path[0] + 1; next < k; ++next) {
      if (on_path[next]) continue;
      for (int x : meet[last * k + next]) {
        if (std::find(points.begin(), points.end(), x) != points.end()) continue;
        path.push_back(next);
        points.push_back(x);
        on_path[next] = true;
        self(self, limit);
        on_path[next] = false;
        points.pop_back();
        path.pop_back();
        if (best) return;
      }
    }
  };
  for (int limit = 3; limit <= k && !best; ++limit) {
    for (int start = 0; start < k && !best; ++start) {
      path = {start};
      points.clear();
      on_path.assign(k, false);
      on_path[start] = true;
      extend(extend, limit);
    }
  }
  return best;
}

namespace {

using MaskVector = std::vector<unsigned>;

MaskVector canonical_masks(const MaskVector& masks, int k) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  MaskVector best;
  MaskVector cur(masks.size());
  do {
    for (std::size_t a = 0; a < masks.size(); ++a) {
      unsigned m = 0;
      for (int j = 0; j < k; ++j) {
        if (masks[a] & (1u << j)) m |= 1u << perm[j];
      }
      cur[a] = m;
    }
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

GreechieDiagram diagram_from_masks(const MaskVector& masks, int k) {
  GreechieDiagram d;
  for (std::size_t a = 0; a < masks.size(); ++a) d.atoms.push_back(std::to_string(a + 1));
  d.blocks.resize(k);
  for (std::size_t a = 0; a < masks.size(); ++a) {
    for (int j = 0; j < k; ++j) {
      if (masks[a] & (1u << j)) d.blocks[j].push_back(static_cast<int>(a));
    }
  }
  std::sort(d.blocks.begin(), d.blocks.end());
  return d;
}

}  // namespace

std::vector<GreechieDiagram> generate_greechie(int max_atoms, int blocks) {
  if (max_atoms < 0 || max_atoms > 12) throw std::out_of_range("generate_greechie: max_atoms must be in 0..12");
  if (blocks < 1 || blocks > 5) throw std::out_of_range("generate_greechie: blocks must be in 1..5");
  const int k = blocks;
  const unsigned mask_limit = 1u << k;
  // Each atom is its block-membership mask; a diagram is a multiset of masks
  // with every column summing to 3 and every pair of columns meeting at most
  // once.
  std::set<MaskVector> seen;
  MaskVector masks;
  std::vector<int> column(k, 0);
  std::vector<int> pair(k * k, 0);
  auto search = [&](auto&& self, unsigned min_mask) -> void {
    int missing = 0;
    for (int j = 0; j < k; ++j) missing += 3 - column[j];
    if (missing == 0) {
      seen.insert(canonical_masks(masks, k));
      return;
    }
    int atoms_left = max_atoms - static_cast<int>(masks.size());
    if (atoms_left <= 0 || missing > atoms_left * k) return;
    for (unsigned m = min_mask; m < mask_limit; ++m) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        if (!(m & (1u << i))) continue;
        if (column[i] == 3) ok = false;
        for (int j = i + 1; j < k && ok; ++j) {
          if ((m & (1u << j)) && pair[i * k + j] == 1) ok = false;
        }
      }
      if (!ok) continue;
      for (int i = 0; i < k; ++i) {
        if (!(m & (1u << i))) continue;
        ++column[i];
        for (int j = i + 1; j < k; ++j) {
          if (m & (1u << j)) ++pair[i * k + j];
        }
      }
      masks.push_back(m);
      self(self, m);
      masks.pop_back();
      for (int i = 0; i < k; ++i) {
        if (!(m & (1u << i))) continue;
        --column[i];
        for (int j = i + 1; j < k; ++j) {
          if (m & (1u << j)) --pair[i * k + j];
        }
      }
    }
  };
  search(search, 1);

  std::vector<GreechieDiagram> out;
  out.reserve(seen.size());
  for (const auto& m : seen) out.push_back(diagram_from_masks(m, k));
  return out;
}

std::vector<GreechieDiagram> generate_greechie_upto(int max_atoms, int max_blocks) {
  std::vector<GreechieDiagram> out;
  for (int k = 1; k <= max_blocks; ++k) {
    auto part = generate_greechie(max_atoms, k);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<GreechieModel> greechie_oml_battery(int max_atoms, int max_blocks) {
  std::vector<GreechieModel> out;
  int k = 0;
  for (auto& d : generate_greechie_upto(max_atoms, max_blocks)) {
    ++k;
    try {
      OrthoModel m = greechie_to_lattice(d, "greechie#" + std::to_string(k));
      if (m.is_orthomodular()) out.push_back({std::move(d), std::move(m)});
    } catch (const NotALatticeError&) {
    } catch (const OrthoAxiomError&) {
    }
  }
  return out;
}

}  // namespace oml
