#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oml/checker.hpp"
#include "oml/models.hpp"

namespace oml {

enum class Expect { Holds, Fails, Unknown };

const char* expect_name(Expect e);

// A named law with its expected status per model class; an empty class makes
// no claim. Biconditionals are stored as several Horn clauses; the entry holds
// when all of them do.
struct LawEntry {
  std::string id;
  std::vector<Condition> clauses;
  Expect oml = Expect::Unknown;
  std::optional<Expect> o6;  // ortholattices that are not orthomodular
  Expect boolean = Expect::Holds;
  std::optional<Expect> four_go;  // OMLs satisfying the 4-Go equation
  std::string witness = "MO2";  // model expected to refute an OML failure
};

// The expanded corpus, sorted by id. Ids are unique.
const std::vector<LawEntry>& corpus();

const LawEntry* find_entry(const std::string& id);

// Name of the pseudo-model used for the free-OML verdict of two-variable
// equations.
inline constexpr const char* kFreeModelName = "F2";

// Info rows are not constrained by the entry, e.g. an OML failure on a model
// other than the witness; Open rows are unknown in the literature.
enum class RowStatus { Ok, Mismatch, Open, Info };

struct CatalogRow {
  std::string entry_id;
  std::string model;
  bool pass = true;
  // Expected verdict on this model; Unknown and unconstrained rows never fail
  // the run.
  std::optional<Expect> expected;
  RowStatus status = RowStatus::Open;
  // Index of the first failing clause and its rendered valuation.
  std::optional<int> clause;
  std::optional<std::string> counterexample;
};

struct CatalogReport {
  std::vector<CatalogRow> rows;  // entry id order, then model order
  int entries = 0;
  int mismatches = 0;
  int open = 0;
  int info = 0;
  bool ok() const { return mismatches == 0; }
};

// Checks every entry on every model. Two-variable equational entries also get
// an F2 row decided in the free OML; that row is a mismatch when it disagrees
// with the MO2 and 2^4 rows (if both are in the battery).
CatalogReport run_catalog(const std::vector<OrthoModel>& models, const std::vector<LawEntry>& entries = corpus());

// MO2, O6, 2^2..2^4 and the Greechie OMLs with at most 9 atoms and 3 blocks.
std::vector<OrthoModel> default_battery();

std::string report_json(const CatalogReport& r);
std::string report_text(const CatalogReport& r);

}  // namespace oml
