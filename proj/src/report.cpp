#include "ternary/report.hpp"

#include <json.hpp>
#include <sstream>

namespace ternary::report {

namespace {

using json = nlohmann::json;

std::string elements(const TernaryTable& t, const std::vector<Element>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += t.carrier().label(xs[i]);
  }
  return out.empty() ? "-" : out;
}

std::string tuple(const TernaryTable& t, const std::vector<Element>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += t.carrier().label(xs[i]);
  }
  return out + ")";
}

std::vector<std::string> labels_of(const TernaryTable& t, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (Element x : xs) out.push_back(t.carrier().label(x));
  return out;
}

std::string map_text(const TernaryTable& t, const std::vector<Element>& map) {
  std::string out;
  for (Element x = 0; x < map.size(); ++x) {
    if (x) out += ' ';
    out += t.carrier().label(x) + "->" + t.carrier().label(map[x]);
  }
  return out;
}

json verdict_json(const TernaryTable& t, const Verdict& v) {
  json j;
  j["holds"] = v.holds;
  if (!v.holds) j["witness"] = labels_of(t, v.witness);
  return j;
}

std::string status_text(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "FAIL";
    case Status::skipped:
      return "skipped";
  }
  return "skipped";
}

SuiteLine line_from(std::string name, const hopf::Check& c, bool required = true) {
  SuiteLine l{std::move(name), c.holds ? Status::pass : Status::fail, "", required};
  if (!c.holds) {
    l.detail = c.equation;
    if (c.at) l.detail += " at (" + std::to_string(c.at->first) + ", " + std::to_string(c.at->second) + ")";
  }
  return l;
}

}  // namespace

std::string group_text(const TernaryTable& t, const GroupStatus& g) {
  if (g.is_group()) return "yes";
  if (g.witness.size() == 5) return "no (not associative)";
  static const char* kEquation[] = {"[x a b] = c", "[a y b] = c", "[a b z] = c"};
  return std::string("no (") + kEquation[g.witness[3]] + " unsolvable for a, b, c = " +
         tuple(t, {g.witness[0], g.witness[1], g.witness[2]}) + ")";
}

std::string verdict_text(const TernaryTable& t, const Verdict& v) {
  return v.holds ? "yes" : "no " + tuple(t, v.witness);
}

std::string properties_text(const TernaryTable& t, const PropertyReport& r,
                            const std::optional<DerivedVerdict>& derived) {
  std::ostringstream out;
  out << "order: " << r.order << '\n'
      << "labels: " << elements(t, [&] {
           std::vector<Element> all(r.order);
           for (Element x = 0; x < r.order; ++x) all[x] = x;
           return all;
         }()) << '\n'
      << "associative: " << verdict_text(t, r.associative) << '\n'
      << "semicommutative: " << verdict_text(t, r.semicommutative) << '\n'
      << "commutative: " << verdict_text(t, r.commutative) << '\n'
      << "medial: "
      << (r.medial ? verdict_text(t, *r.medial)
                   : "skipped (order above " + std::to_string(kMedialDefaultMaxOrder) + ", pass --exhaustive)")
      << '\n'
      << "idempotent: " << verdict_text(t, r.idempotent) << '\n'
      << "left-cancellative: " << verdict_text(t, r.left_cancellative) << '\n'
      << "middle-cancellative: " << verdict_text(t, r.middle_cancellative) << '\n'
      << "right-cancellative: " << verdict_text(t, r.right_cancellative) << '\n'
      << "autodistributive: " << verdict_text(t, r.autodistributive) << '\n'
      << "idempotents: " << elements(t, r.idempotents) << '\n'
      << "left-identities: " << elements(t, r.identities.left) << '\n'
      << "middle-identities: " << elements(t, r.identities.middle) << '\n'
      << "right-identities: " << elements(t, r.identities.right) << '\n'
      << "ternary-identities: " << elements(t, r.identities.ternary) << '\n'
      << "group: " << group_text(t, r.group) << '\n';
  if (r.group.is_group()) out << "skew: " << map_text(t, r.group.skew->table) << '\n';
  if (derived) {
    out << "derived: " << to_string(derived->answer);
    if (derived->witness) out << " (retract at " << t.carrier().label(derived->witness->identity) << ")";
    out << '\n';
  }
  return out.str();
}

std::string properties_json(const TernaryTable& t, const PropertyReport& r,
                            const std::optional<DerivedVerdict>& derived) {
  json j;
  j["order"] = r.order;
  j["labels"] = t.carrier().labels();
  j["associative"] = verdict_json(t, r.associative);
  j["semicommutative"] = verdict_json(t, r.semicommutative);
  j["commutative"] = verdict_json(t, r.commutative);
  j["medial"] = r.medial ? verdict_json(t, *r.medial) : json(nullptr);
  j["idempotent"] = verdict_json(t, r.idempotent);
  j["left_cancellative"] = verdict_json(t, r.left_cancellative);
  j["middle_cancellative"] = verdict_json(t, r.middle_cancellative);
  j["right_cancellative"] = verdict_json(t, r.right_cancellative);
  j["autodistributive"] = verdict_json(t, r.autodistributive);
  j["idempotents"] = labels_of(t, r.idempotents);
  j["identities"] = {{"left", labels_of(t, r.identities.left)},
                     {"middle", labels_of(t, r.identities.middle)},
                     {"right", labels_of(t, r.identities.right)},
                     {"ternary", labels_of(t, r.identities.ternary)}};
  json group;
  group["is_group"] = r.group.is_group();
  if (r.group.is_group())
    group["skew"] = labels_of(t, r.group.skew->table);
  else
    group["witness"] = r.group.witness;
  j["group"] = group;
  if (derived) {
    j["derived"] = to_string(derived->answer);
    if (derived->witness) j["derived_via"] = t.carrier().label(derived->witness->identity);
  }
  return j.dump(2) + "\n";
}

std::string gluskin_text(const TernaryTable& t, const GluskinDecomposition& d) {
  std::ostringstream out;
  out << "base: " << t.carrier().label(d.base) << '\n'
      << "identity: " << t.carrier().label(d.identity) << '\n'
      << "b: " << t.carrier().label(d.b) << '\n'
      << "phi: " << map_text(t, d.phi) << '\n'
      << "inverse: " << map_text(t, d.inverse) << '\n'
      << "phi-involutive: " << ([&] {
           for (Element x = 0; x < d.phi.size(); ++x)
             if (d.phi[d.phi[x]] != x) return "no";
           return "yes";
         })()
      << '\n'
      << "group-commutative: " << (is_binary_commutative(d.binary_group) ? "yes" : "no") << '\n'
      << "verified: group, automorphism, reconstruction over " << t.order() * t.order() * t.order()
      << " triples\n";
  return out.str();
}

std::string post_cover_text(const TernaryTable& t, const PostCover& cover) {
  std::ostringstream out;
  out << "base: " << t.carrier().label(cover.base) << '\n'
      << "order: " << cover.group.order() << '\n'
      << "neutral: " << cover.group.carrier().label(cover.neutral) << '\n'
      << "subgroup-H:";
  for (Element h : cover.subgroup) out << ' ' << cover.group.carrier().label(h);
  out << '\n'
      << "quotient-order: 2\n"
      << "verified: associativity, neutral, inverse formulas, H normal of index 2, embedding over "
      << t.order() * t.order() * t.order() << " triples\n";
  return out.str();
}

std::string isomorphism_text(const TernaryTable& t, Element a, Element b, const Isomorphism& iso) {
  return "retracts: " + t.carrier().label(a) + " " + t.carrier().label(b) + "\nmap: " + map_text(t, iso.map) + "\n";
}

std::vector<SuiteLine> hopf_suite(const hopf::HopfBundle& h, bool exhaustive) {
  using namespace hopf;
  std::vector<SuiteLine> lines;
  lines.push_back(line_from("algebra-associative", check_algebra_assoc(h.algebra)));
  lines.push_back(line_from("coassociative-standard", check_coassoc(h.coalgebra, Coassociativity::standard())));
  lines.push_back(line_from("coassociative-sigma-id", check_coassoc(h.coalgebra, Coassociativity::sigma({0, 1, 2})), false));
  lines.push_back(line_from("coassociative-permutational-id",
                            check_coassoc(h.coalgebra, Coassociativity::permutational({0, 1, 2, 3, 4})), false));
  if (auto c = check_comedial(h.coalgebra, exhaustive))
    lines.push_back(line_from("comedial", *c, false));
  else
    lines.push_back({"comedial", Status::skipped, "dimension above " + std::to_string(kComedialDefaultMaxDim), false});
  lines.push_back(line_from("bialgebra", check_bialgebra(h)));
  if (h.counit) {
    const FieldMatrix& e = *h.counit;
    lines.push_back(line_from("counit-standard", check_counit(h.coalgebra, CounitKind::standard, std::span(&e, 1))));
    const std::vector<FieldMatrix> two{e, e}, four{e, e, e, e};
    lines.push_back(line_from("counit-polyadic", check_counit(h.coalgebra, CounitKind::polyadic, two)));
    lines.push_back(line_from("counit-long", check_counit(h.coalgebra, CounitKind::long_chain, four)));
  }
  if (h.antipode) {
    lines.push_back(line_from("antipode-" + to_string(h.antipode_kind), check_antipode(h, h.antipode_kind)));
    lines.push_back(line_from("skew-involutive", check_skew_involutive(h), false));
  }
  if (h.m2) lines.push_back(line_from("m2-witness", check_m_witness(h.algebra, *h.m2)));
  if (h.delta2) lines.push_back(line_from("delta2-witness", check_delta_witness(h.coalgebra, *h.delta2)));
  if (h.unit && h.m2) lines.push_back(line_from("unit", check_binary_unit(*h.m2, *h.unit)));
  return lines;
}

bool suite_passed(const std::vector<SuiteLine>& lines) {
  for (const auto& l : lines)
    if (l.required && l.status == Status::fail) return false;
  return true;
}

std::string suite_text(const std::vector<SuiteLine>& lines) {
  std::ostringstream out;
  for (const auto& l : lines) {
    out << l.name << ": " << status_text(l.status);
    if (!l.detail.empty()) out << " (" << l.detail << ")";
    out << '\n';
  }
  return out.str();
}

std::string counit_solutions_text(const hopf::TernaryCoalgebra& c, hopf::CounitKind kind,
                                  const std::vector<std::vector<hopf::FieldMatrix>>& solutions) {
  std::ostringstream out;
  out << "kind: " << hopf::to_string(kind) << '\n'
      << "p: " << c.field.modulus() << '\n'
      << "n: " << c.dim << '\n'
      << "solutions: " << solutions.size() << '\n';
  for (const auto& sol : solutions) {
    for (std::size_t i = 0; i < sol.size(); ++i) {
      out << (i ? " | " : "");
      for (std::size_t x = 0; x < sol[i].cols(); ++x) out << (x ? " " : "") << sol[i](0, x);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ternary::report
