#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oml/models.hpp"

namespace oml {

class GreechieError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Atoms plus blocks; each block lists atom indices in ascending order.
struct GreechieDiagram {
  std::vector<std::string> atoms;
  std::vector<std::vector<int>> blocks;

  friend bool operator==(const GreechieDiagram&, const GreechieDiagram&) = default;
};

// One block per line, whitespace-separated atom labels, '#' starts a comment.
// Throws GreechieError on blocks smaller than 2, repeated atoms within a
// block, duplicate blocks, nested blocks or blocks sharing two atoms.
GreechieDiagram parse_greechie(std::string_view text);
void validate_greechie(const GreechieDiagram& d);
std::string format_greechie(const GreechieDiagram& d);

// Pastes the blocks' Boolean algebras along shared atoms. Throws
// NotALatticeError when some pair has no join or meet, OrthoAxiomError when
// the pasting is not an ortholattice.
OrthoModel greechie_to_lattice(const GreechieDiagram& d, std::string name = "greechie");

// Order of the shortest loop, if the diagram has one.
std::optional<int> shortest_loop(const GreechieDiagram& d);

// All pairwise non-isomorphic diagrams with exactly `blocks` 3-atom blocks and
// at most max_atoms atoms. Requires max_atoms <= 12 and blocks <= 5.
std::vector<GreechieDiagram> generate_greechie(int max_atoms, int blocks);

// Union of generate_greechie over 1..max_blocks blocks.
std::vector<GreechieDiagram> generate_greechie_upto(int max_atoms, int max_blocks);

struct GreechieModel {
  GreechieDiagram diagram;
  OrthoModel model;
};

// Generated diagrams whose pasting is an orthomodular lattice, named
// "greechie#k".
std::vector<GreechieModel> greechie_oml_battery(int max_atoms, int max_blocks);

}  // namespace oml
