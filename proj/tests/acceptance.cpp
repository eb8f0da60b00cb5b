#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sqs/catalog.hpp"
#include "sqs/constructs.hpp"
#include "sqs/designs.hpp"
#include "sqs/groups.hpp"
#include "sqs/kmsearch.hpp"
#include "sqs/numtheory.hpp"
#include "sqs/screen.hpp"

using namespace sqs;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Pair {
  std::string design;
  std::string group;
};

const std::vector<Pair> kPositive{
    {"boolean:3", "AGL(3,2)"},   {"boolean:3", "AGL(1,8)"},  {"boolean:3", "AGammaL(1,8)"},
    {"boolean:4", "AGL(4,2)"},   {"boolean:4", "A7_16"},     {"boolean:5", "AGL(5,2)"},
    {"boolean:5", "AGammaL(1,32)"}, {"pgl:2", "PGL(2,9)"},   {"pgl:2", "PGammaL(2,9)"},
    {"pgl:3", "PSL(2,27)"},      {"netto:7", "PSL(2,7)"},    {"netto:19", "PSL(2,19)"},
    {"netto:31", "PSL(2,31)"}};

Design design_of(const std::string& name) { return construct(parse_construction(name)); }
PermGroup group_of(const std::string& spec) { return build_group(parse_group_spec(spec)); }

void construction_counts(Outcome& o) {
  const std::vector<std::pair<std::string, std::size_t>> expected{
      {"boolean:3", 14}, {"boolean:4", 140}, {"boolean:5", 1240}, {"pgl:2", 30},
      {"pgl:3", 819},    {"netto:7", 14},    {"netto:19", 285},   {"netto:31", 1240}};
  for (const auto& [name, blocks] : expected) {
    auto d = design_of(name);
    const std::uint64_t v = d.v();
    o.check(blocks == v * (v - 1) * (v - 2) / 24, name + " expected count");
    o.check(d.block_count() == blocks, name + " has " + std::to_string(d.block_count()) + " blocks");
    o.check(static_cast<bool>(verify_sqs(d)), name + " fails verify_sqs");
  }
}

void positive_matrix(Outcome& o) {
  for (const auto& p : kPositive) {
    o.check(is_flag_transitive(design_of(p.design), group_of(p.group)), p.design + " with " + p.group);
  }
}

void negative_controls(Outcome& o) {
  o.check(!is_flag_transitive(boolean_sqs(5), agl1(32)), "boolean:5 with AGL(1,32) is flag-transitive");
  o.check(find_flag_transitive_sqs(psl2(13)).empty(), "PSL(2,13) search not empty");
}

void uniqueness(Outcome& o) {
  auto b5 = find_flag_transitive_sqs(a_gamma_l1(32));
  o.check(b5.size() == 1, "AGammaL(1,32) search found " + std::to_string(b5.size()));
  if (!b5.empty()) {
    o.check(b5[0] == boolean_sqs(5), "AGammaL(1,32) design differs from boolean:5");
    o.check(are_isomorphic(b5[0], boolean_sqs(5)).has_value(), "AGammaL(1,32) design not isomorphic to boolean:5");
  }
  auto p7 = find_flag_transitive_sqs(psl2(7));
  const auto classes = isomorphism_class_representatives(p7).size();
  o.notes.push_back("PSL(2,7): " + std::to_string(p7.size()) + " labelled designs, " + std::to_string(classes) +
                    " isomorphism class");
  o.check(p7.size() == 1, "PSL(2,7) search found " + std::to_string(p7.size()) + " designs");
  for (const auto& d : p7) o.check(d.block_count() == 14, "PSL(2,7) design without 14 blocks");
  o.check(std::find(p7.begin(), p7.end(), netto_sqs(7)) != p7.end(), "netto:7 missing from PSL(2,7) search");
}

void derived_identifications(Outcome& o) {
  auto dp = derived_design(pgl_sqs(2), ProjectiveLine::infinity());
  o.check(dp.block_count() == 12, "derived pgl:2 has " + std::to_string(dp.block_count()) + " blocks");
  o.check(are_isomorphic(dp, ag3_lines(2)).has_value(), "derived pgl:2 not isomorphic to AG(2,3)");
  auto dn = derived_design(netto_sqs(19), ProjectiveLine::infinity());
  o.check(dn.block_count() == 57, "derived netto:19 block count");
  o.check(dn == netto_triples(19), "derived netto:19 differs from the Netto triple system");
  auto b3 = boolean_sqs(3);
  auto first = derived_design(b3, 0);
  for (Point x = 0; x < 8; ++x) {
    auto dx = derived_design(b3, x);
    o.check(dx.block_count() == 7 && verify_sts(dx), "derived boolean:3 at " + std::to_string(x) + " not an STS(7)");
    o.check(are_isomorphic(dx, first).has_value(), "derived boolean:3 at " + std::to_string(x) + " not isomorphic");
  }
}

void order_formulas(Outcome& o) {
  const std::vector<std::pair<std::string, std::uint64_t>> expected{
      {"AGammaL(1,8)", 8 * 7 * 3}, {"AGammaL(1,32)", 32 * 31 * 5}, {"AGL(3,2)", 1344}, {"AGL(4,2)", 322560},
      {"PGL(2,9)", 720},           {"PSL(2,27)", 9828},            {"A7_16", 40320}};
  for (const auto& [spec, order] : expected) {
    const auto got = group_of(spec).order();
    o.check(got == order, spec + " order " + std::to_string(got));
  }
  o.check(order_gl(3, 2).value() == 168 && order_gl(4, 2).value() == 20160, "GL closed forms");
  o.check(order_psl(2, 27).value() == 9828 && order_pgl(2, 9).value() == 720, "PSL/PGL closed forms");
}

void invariant_suites(Outcome& o) {
  for (const auto& p : kPositive) {
    const auto d = design_of(p.design);
    const auto g = group_of(p.group);
    const auto tag = p.design + " with " + p.group;
    const std::uint64_t order = g.order();
    const std::uint64_t r = replication_number(d.v());
    if (is_flag_transitive(d, g)) o.check(is_t_transitive(g, 2), tag + ": not 2-transitive");
    for (Point x = 0; x < d.v(); ++x) {
      const std::uint64_t gx = g.point_stabilizer(x).order();
      o.check(gx % r == 0, tag + ": r does not divide |G_x| at " + std::to_string(x));
      o.check(g.orbit(x).size() * gx == order, tag + ": orbit-stabilizer at point " + std::to_string(x));
    }
    const auto st = g.setwise_stabilizer(d.block(0));
    o.check(st.orbit_length * st.order == order, tag + ": orbit-stabilizer on a block");
    o.check(st.orbit_length == block_orbit_size(d, g), tag + ": block orbit length");
    if (p.group.rfind("PSL", 0) == 0) {
      o.check(st.order == 12, tag + ": block stabilizer order " + std::to_string(st.order));
      const auto orb = PermGroup(d.v(), st.generators).orbit(d.block(0)[0]);
      o.check(std::includes(orb.begin(), orb.end(), d.block(0).begin(), d.block(0).end()),
              tag + ": block stabilizer not transitive on the block");
    }
  }
}

void screening(Outcome& o) {
  const auto report = run_screen(10, 128);
  std::ifstream in(std::string(SQS_GOLDEN_DIR) + "/screen_d10_q128.txt", std::ios::binary);
  std::stringstream golden;
  golden << in.rdbuf();
  o.check(!golden.str().empty() && format_report_text(report) == golden.str(), "golden report differs");

  for (const auto* c : report.survivors()) {
    o.check(!c->entry.fate_note.empty(), c->entry.group + " survives without a tag");
    if (c->status == CaseStatus::Realized) {
      const auto& note = c->entry.fate_note;
      const bool known = note.rfind("boolean:", 0) == 0 || note.rfind("pgl:", 0) == 0 || note.rfind("netto:", 0) == 0;
      o.check(known, c->entry.group + " realized by an unknown construction");
    }
  }

  std::vector<std::uint32_t> passing;
  for (std::uint32_t d = 3; d <= 40; ++d) {
    const std::uint64_t v = 1ULL << d;
    if (divisibility_filter(v, Factorization(d) * (v - 1))) passing.push_back(d);
  }
  o.check(passing == std::vector<std::uint32_t>{3, 5}, "AGammaL(1,2^d) divisibility survivors");

  auto expect_all = [&](const std::string& family, const std::string& prefix, std::uint64_t v, EliminatedBy by) {
    bool seen = false;
    for (const auto& c : report.cases) {
      if (c.entry.family != family || c.entry.group.rfind(prefix, 0) != 0 || (v != 0 && c.entry.v != v)) continue;
      seen = true;
      o.check(c.filter == by, c.entry.group + " on " + std::to_string(c.entry.v) + " eliminated by " +
                                  to_string(c.filter) + ", expected " + to_string(by));
    }
    o.check(seen, family + " " + prefix + " missing from the report");
  };
  expect_all("B4", "Sz", 0, EliminatedBy::Hanani);
  expect_all("B5", "Ree", 0, EliminatedBy::Hanani);
  for (const char* m : {"M11", "M12", "M23", "M24"}) expect_all("B9", m, 0, EliminatedBy::Hanani);
  expect_all("B7", "PSL(2,11)", 11, EliminatedBy::Hanani);
  expect_all("B10", "M11", 12, EliminatedBy::Hanani);
  expect_all("B11", "A7", 15, EliminatedBy::Hanani);
  expect_all("B13", "Co3", 276, EliminatedBy::Hanani);
  expect_all("B3", "PSU(3,3)", 28, EliminatedBy::Divisibility);
  expect_all("B8", "PSL(2,8)", 28, EliminatedBy::Divisibility);
  expect_all("B12", "HS", 176, EliminatedBy::Divisibility);
  expect_all("A5", "A6", 16, EliminatedBy::Divisibility);
  o.notes.push_back(std::to_string(report.cases.size()) + " cases, " +
                    std::to_string(report.count(CaseStatus::Eliminated)) + " eliminated, " +
                    std::to_string(report.survivors().size()) + " survivors");
}

void classification_probe(Outcome& o) {
  const bool verdict = is_flag_transitive(pgl_sqs(2), psl2(9));
  o.notes.push_back(std::string("is_flag_transitive(pgl:2, PSL(2,9)) = ") + (verdict ? "true" : "false"));
  o.check(preserves_design(psl2(9), pgl_sqs(2)), "PSL(2,9) does not preserve pgl:2");
}

void zsigmondy_oracle(Outcome& o) {
  for (std::uint32_t n = 2; n <= 20; ++n) {
    std::uint64_t m = (1ULL << n) - 1;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
    if (m > 1) primes.push_back(m);
    std::vector<std::uint64_t> brute;
    for (auto p : primes) {
      std::uint64_t k = 1, x = 2 % p;
      while (x != 1) x = x * 2 % p, ++k;
      if (k == n) brute.push_back(p);
    }
    o.check(zsigmondy(2, n) == brute, "zsigmondy(2," + std::to_string(n) + ")");
  }
  o.check(zsigmondy(2, 6).empty(), "zsigmondy(2,6) not empty");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"construction counts", construction_counts},
      {"flag-transitive positive matrix", positive_matrix},
      {"negative controls", negative_controls},
      {"uniqueness searches", uniqueness},
      {"derived-design identifications", derived_identifications},
      {"group order formulas", order_formulas},
      {"invariant suites", invariant_suites},
      {"screening report", screening},
      {"classification probe", classification_probe},
      {"primitive divisor oracle", zsigmondy_oracle}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = o.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
    for (const auto& n : o.notes) std::cout << " [" << n << "]";
    std::cout << "\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
