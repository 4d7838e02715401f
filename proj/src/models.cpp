#include "oml/models.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "oml/greechie.hpp"

namespace oml {

NotALatticeError::NotALatticeError(const std::string& what, Element x, Element y)
    : std::runtime_error(what), x_(x), y_(y) {}

OrthoModel::OrthoModel(std::string name, std::vector<std::string> element_names,
                       std::vector<Element> complement, std::vector<bool> leq)
    : name_(std::move(name)),
      n_(static_cast<int>(element_names.size())),
      names_(std::move(element_names)),
      complement_(std::move(complement)),
      leq_(std::move(leq)) {
  const int n = n_;
  if (n == 0 || static_cast<int>(complement_.size()) != n || static_cast<int>(leq_.size()) != n * n) {
    throw OrthoAxiomError(name_ + ": inconsistent model dimensions");
  }
  for (int x = 0; x < n; ++x) {
    if (!leq_[x * n + x]) throw OrthoAxiomError(name_ + ": order is not reflexive");
    for (int y = 0; y < n; ++y) {
      if (x != y && leq_[x * n + y] && leq_[y * n + x]) {
        throw OrthoAxiomError(name_ + ": order is not antisymmetric at " + names_[x] + ", " + names_[y]);
      }
    }
  }

  // Least upper bound: the upper bound below every other upper bound.
  join_.assign(n * n, 0);
  meet_.assign(n * n, 0);
  std::vector<int> ubs, lbs;
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      ubs.clear();
      lbs.clear();
      for (int z = 0; z < n; ++z) {
        if (leq_[x * n + z] && leq_[y * n + z]) ubs.push_back(z);
        if (leq_[z * n + x] && leq_[z * n + y]) lbs.push_back(z);
      }
      auto least = [&](const std::vector<int>& cands, bool upward) -> std::optional<int> {
        for (int c : cands) {
          bool all = std::all_of(cands.begin(), cands.end(), [&](int d) {
            return upward ? leq_[c * n + d] : leq_[d * n + c];
          });
          if (all) return c;
        }
        return std::nullopt;
      };
      auto j = least(ubs, true);
      if (!j) {
        throw NotALatticeError(name_ + ": no join for " + names_[x] + ", " + names_[y],
                               static_cast<Element>(x), static_cast<Element>(y));
      }
      auto m = least(lbs, false);
      if (!m) {
        throw NotALatticeError(name_ + ": no meet for " + names_[x] + ", " + names_[y],
                               static_cast<Element>(x), static_cast<Element>(y));
      }
      join_[x * n + y] = join_[y * n + x] = static_cast<Element>(*j);
      meet_[x * n + y] = meet_[y * n + x] = static_cast<Element>(*m);
    }
  }

  for (int x = 0; x < n; ++x) {
    bool is_bottom = true, is_top = true;
    for (int y = 0; y < n; ++y) {
      is_bottom = is_bottom && leq_[x * n + y];
      is_top = is_top && leq_[y * n + x];
    }
    if (is_bottom) bottom_ = static_cast<Element>(x);
    if (is_top) top_ = static_cast<Element>(x);
  }

  if (auto err = verify_ortholattice(*this)) throw OrthoAxiomError(name_ + ": " + *err);
  orthomodular_ = verify_orthomodular(*this).pass;

  distributive_ = true;
  for (int x = 0; x < n && distributive_; ++x) {
    for (int y = 0; y < n && distributive_; ++y) {
      for (int z = 0; z < n; ++z) {
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) {
          distributive_ = false;
          break;
        }
      }
    }
  }
}

std::optional<Element> OrthoModel::find(std::string_view element_name) const {
  for (int i = 0; i < n_; ++i) {
    if (names_[i] == element_name) return static_cast<Element>(i);
  }
  return std::nullopt;
}

std::optional<std::string> verify_ortholattice(const OrthoModel& m) {
  const int n = m.size();
  auto nm = [&](int x) { return m.element_name(static_cast<Element>(x)); };
  if (m.complement(m.bottom()) != m.top()) return "0' is not 1";
  for (int x = 0; x < n; ++x) {
    Element c = m.complement(x);
    if (c >= n) return "complement out of range at " + nm(x);
    if (m.complement(c) != x) return "complement is not an involution at " + nm(x);
    if (m.join(x, c) != m.top()) return "a v a' != 1 at " + nm(x);
    if (m.meet(x, c) != m.bottom()) return "a ^ a' != 0 at " + nm(x);
    for (int y = 0; y < n; ++y) {
      if (m.leq(x, y) && !m.leq(m.complement(y), c)) {
        return "complement is not order-reversing at " + nm(x) + ", " + nm(y);
      }
      if (m.complement(m.join(x, y)) != m.meet(c, m.complement(y))) {
        return "De Morgan fails at " + nm(x) + ", " + nm(y);
      }
      Element j = m.join(x, y);
      if (!m.leq(x, j) || !m.leq(y, j)) return "join is not an upper bound at " + nm(x) + ", " + nm(y);
    }
  }
  return std::nullopt;
}

OrthomodularResult verify_orthomodular(const OrthoModel& m) {
  const int n = m.size();
  OrthomodularResult first;
  bool second_pass = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      Element a = static_cast<Element>(x), b = static_cast<Element>(y);
      if (m.leq(a, b) && m.join(a, m.meet(m.complement(a), b)) != b && first.pass) {
        first.pass = false;
        first.counterexample = {a, b};
      }
      // a _|_ b means a <= b'.
      if (m.leq(a, m.complement(b)) && m.join(a, b) == m.top() &&
          !m.leq(m.complement(a), m.complement(m.complement(b)))) {
        second_pass = false;
      }
    }
  }
  if (first.pass != second_pass) {
    throw std::logic_error(m.name() + ": the two orthomodularity formulations disagree");
  }
  return first;
}

OrthoModel mo2() {
  // 0, x, x', y, y', 1
  std::vector<std::string> names = {"0", "x", "x'", "y", "y'", "1"};
  std::vector<Element> comp = {5, 2, 1, 4, 3, 0};
  std::vector<bool> leq(36, false);
  for (int i = 0; i < 6; ++i) {
    leq[i * 6 + i] = true;
    leq[0 * 6 + i] = true;
    leq[i * 6 + 5] = true;
  }
  return OrthoModel("MO2", std::move(names), std::move(comp), std::move(leq));
}

OrthoModel o6() {
  // 0 < p < q < 1 and 0 < q' < p' < 1
  std::vector<std::string> names = {"0", "p", "q", "q'", "p'", "1"};
  std::vector<Element> comp = {5, 4, 3, 2, 1, 0};
  std::vector<bool> leq(36, false);
  for (int i = 0; i < 6; ++i) {
    leq[i * 6 + i] = true;
    leq[0 * 6 + i] = true;
    leq[i * 6 + 5] = true;
  }
  leq[1 * 6 + 2] = true;
  leq[3 * 6 + 4] = true;
  return OrthoModel("O6", std::move(names), std::move(comp), std::move(leq));
}

OrthoModel boolean(int k) {
  if (k < 1 || k > 5) throw std::out_of_range("boolean(k) needs 1 <= k <= 5");
  const int n = 1 << k;
  std::vector<std::string> names(n);
  std::vector<Element> comp(n);
  std::vector<bool> leq(n * n);
  for (int s = 0; s < n; ++s) {
    if (s == 0) {
      names[s] = "0";
    } else if (s == n - 1) {
      names[s] = "1";
    } else {
      std::string nm = "{";
      for (int bit = 0; bit < k; ++bit) {
        if (s & (1 << bit)) {
          if (nm.size() > 1) nm += ',';
          nm += std::to_string(bit + 1);
        }
      }
      names[s] = nm + "}";
    }
    comp[s] = static_cast<Element>((n - 1) & ~s);
    for (int t = 0; t < n; ++t) leq[s * n + t] = (s & ~t) == 0;
  }
  return OrthoModel("2^" + std::to_string(k), std::move(names), std::move(comp), std::move(leq));
}

bool isomorphic(const OrthoModel& x, const OrthoModel& y) {
  const int n = x.size();
  if (n != y.size()) return false;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  // Backtracking over order- and complement-preserving bijections.
  auto consistent = [&](int i) {
    for (int j = 0; j < n; ++j) {
      if (map[j] < 0) continue;
      auto a = static_cast<Element>(i), b = static_cast<Element>(j);
      auto fa = static_cast<Element>(map[i]), fb = static_cast<Element>(map[j]);
      if (x.leq(a, b) != y.leq(fa, fb) || x.leq(b, a) != y.leq(fb, fa)) return false;
      if ((x.complement(a) == b) != (y.complement(fa) == fb)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      map[i] = c;
      used[c] = true;
      if (consistent(i) && self(self, i + 1)) return true;
      used[c] = false;
      map[i] = -1;
    }
    return false;
  };
  return search(search, 0);
}

OrthoModel model_from_spec(std::string_view spec) {
  if (spec == "mo2" || spec == "MO2") return mo2();
  if (spec == "o6" || spec == "O6") return o6();
  if (spec.starts_with("bool:")) {
    int k = 0;
    std::string digits(spec.substr(5));
    try {
      std::size_t used = 0;
      k = std::stoi(digits, &used);
      if (used != digits.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad Boolean model '" + std::string(spec) + "'");
    }
    return boolean(k);
  }
  if (spec.starts_with("greechie:")) {
    std::string path(spec.substr(9));
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read Greechie file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return greechie_to_lattice(parse_greechie(buf.str()), path);
  }
  throw std::invalid_argument("unknown model '" + std::string(spec) + "' (use mo2, o6, bool:k, greechie:FILE)");
}

}  // namespace oml
