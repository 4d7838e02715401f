#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oml {

using Element = std::uint16_t;

// Raised when a candidate order lacks a join or meet for some pair.
class NotALatticeError : public std::runtime_error {
 public:
  NotALatticeError(const std::string& what, Element x, Element y);
  Element x() const { return x_; }
  Element y() const { return y_; }

 private:
  Element x_, y_;
};

class OrthoAxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite ortholattice given by an order and an orthocomplement. Join and meet
// tables are derived from the order at construction; the model is immutable.
class OrthoModel {
 public:
  // leq is row-major n*n. Throws NotALatticeError or OrthoAxiomError.
  OrthoModel(std::string name, std::vector<std::string> element_names, std::vector<Element> complement,
             std::vector<bool> leq);

  const std::string& name() const { return name_; }
  int size() const { return n_; }
  const std::string& element_name(Element x) const { return names_[x]; }
  std::optional<Element> find(std::string_view element_name) const;

  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  Element complement(Element x) const { return complement_[x]; }
  bool leq(Element x, Element y) const { return leq_[x * n_ + y]; }
  Element join(Element x, Element y) const { return join_[x * n_ + y]; }
  Element meet(Element x, Element y) const { return meet_[x * n_ + y]; }

  bool is_orthomodular() const { return orthomodular_; }
  bool is_distributive() const { return distributive_; }

 private:
  std::string name_;
  int n_;
  std::vector<std::string> names_;
  std::vector<Element> complement_;
  std::vector<bool> leq_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  Element bottom_ = 0, top_ = 0;
  bool orthomodular_ = false;
  bool distributive_ = false;
};

// Adapter for the generic operation formulas in ops.hpp.
struct ModelLattice {
  using value_type = Element;
  const OrthoModel* model;
  Element neg(Element x) const { return model->complement(x); }
  Element join(Element x, Element y) const { return model->join(x, y); }
  Element meet(Element x, Element y) const { return model->meet(x, y); }
};

OrthoModel mo2();
OrthoModel o6();
OrthoModel boolean(int k);

// Empty when every ortholattice law holds; otherwise a description of the
// first violation.
std::optional<std::string> verify_ortholattice(const OrthoModel& m);

struct OrthomodularResult {
  bool pass = true;
  std::optional<std::pair<Element, Element>> counterexample;
};

// Checks a <= b => a v (a' ^ b) = b and a _|_ b & a v b = 1 => a' _|_ b'.
// The counterexample is the first failing pair of the first law. Throws
// std::logic_error if the two laws disagree (impossible in an ortholattice).
OrthomodularResult verify_orthomodular(const OrthoModel& m);

bool isomorphic(const OrthoModel& x, const OrthoModel& y);

// Resolves "mo2", "o6", "bool:k" and "greechie:FILE".
OrthoModel model_from_spec(std::string_view spec);

}  // namespace oml
