#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prenov/affine.hpp"
#include "prenov/check.hpp"
#include "prenov/form.hpp"
#include "prenov/op.hpp"

namespace prenov {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// One definition file: spaces plus named structure-constant tables and a
/// declared structure kind. Scalars are "p/q" strings; no floats.
struct WorkbenchFile {
  std::string kind;
  std::map<std::string, std::string> metadata;
  std::vector<BasisSpace> spaces;
  std::map<std::string, BilinearOp> operations;
  std::map<std::string, CoOp> cooperations;
  std::map<std::string, BilinearForm> forms;
  std::map<std::string, std::pair<std::string, Grading>> gradings;  // name -> (space, degrees)
  std::map<std::string, std::pair<std::string, Tensor2>> tensors;   // name -> (space, tensor)
  std::optional<GradedWindow> window;

  const BasisSpace& space(const std::string& name) const;
  const BilinearOp& op(const std::string& name) const;
  const CoOp& coop(const std::string& name) const;
  const BilinearForm& form(const std::string& name) const;
  const Tensor2& tensor(const std::string& name) const;

  PreNovikovOps pre_novikov_ops() const;     // operations lhd, rhd
  PreNovikovCoops pre_novikov_coops() const; // cooperations alpha, beta
};

/// Parses the JSON definition format; throws ParseError with a JSON-path
/// diagnostic on schema violations, unknown names or malformed fractions.
WorkbenchFile parse_workbench(const std::string& text);

/// Canonical emission: fixed key order, sorted tables, "p/q" scalars.
/// parse(emit(f)) reproduces f exactly.
std::string emit_workbench(const WorkbenchFile& f);

/// Structure kinds with checkers (see run_check): pre-lie, novikov,
/// right-novikov, right-novikov-dialgebra, pre-novikov, pre-novikov-coalgebra,
/// right-novikov-coalgebra, right-novikov-co-dialgebra, pre-novikov-bialgebra,
/// quasi-frobenius-novikov, quadratic-pre-novikov, quadratic-right-novikov,
/// quadratic-pre-lie, pre-lie-bialgebra, lie, laurent-right-novikov, data.
std::vector<std::string> known_kinds();

/// Runs the declared (or overridden) kind's checker.
CheckReport run_check(const WorkbenchFile& f, const std::string& kind,
                      const GradedWindow& window, const CheckOptions& opts = {});

/// The embedded example corpus; every entry passes its declared kind's
/// checker (exercised by `examples verify-all`).
const std::map<std::string, WorkbenchFile>& corpus();

/// Named cross-checks wiring the corpus through every construction.
/// Returns (step name, passed) pairs.
std::vector<std::pair<std::string, bool>> corpus_cross_checks(const GradedWindow& window);

}  // namespace prenov
