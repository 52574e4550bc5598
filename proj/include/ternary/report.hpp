#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ternary/constructions.hpp"
#include "ternary/hopf/bundle.hpp"
#include "ternary/hopf/checks.hpp"
#include "ternary/predicates.hpp"

// Plain-text reports: one `key: value` per line in a fixed order, elements printed by label.
// The JSON variants are nlohmann::json objects dumped with sorted keys and two-space indent.
namespace ternary::report {

std::string properties_text(const TernaryTable& t, const PropertyReport& r,
                            const std::optional<DerivedVerdict>& derived);
std::string properties_json(const TernaryTable& t, const PropertyReport& r,
                            const std::optional<DerivedVerdict>& derived);

std::string gluskin_text(const TernaryTable& t, const GluskinDecomposition& d);
std::string post_cover_text(const TernaryTable& t, const PostCover& cover);
std::string isomorphism_text(const TernaryTable& t, Element a, Element b, const Isomorphism& iso);

enum class Status { pass, fail, skipped };

struct SuiteLine {
  std::string name;
  Status status = Status::pass;
  std::string detail;
  bool required = true;  // a failing required line fails the suite
};

/// Every applicable checker on one bundle: algebra associativity, the three coassociativity
/// kinds at the identity permutation, comediality, bialgebra, counit laws for the stored eps,
/// antipode of the declared kind, skew-involutivity, witness checks and the kind they imply.
std::vector<SuiteLine> hopf_suite(const hopf::HopfBundle& h, bool exhaustive = false);
bool suite_passed(const std::vector<SuiteLine>& lines);
std::string suite_text(const std::vector<SuiteLine>& lines);

std::string counit_solutions_text(const hopf::TernaryCoalgebra& c, hopf::CounitKind kind,
                                  const std::vector<std::vector<hopf::FieldMatrix>>& solutions);

/// "yes", or "no (...)" naming the failed equation and its witness.
std::string group_text(const TernaryTable& t, const GroupStatus& g);

/// "yes", or "no (a, b, c)" with labels.
std::string verdict_text(const TernaryTable& t, const Verdict& v);

}  // namespace ternary::report
