// One line per acceptance criterion; exit status 1 if any fails.
#include "ihtw/constructions.hpp"
#include "ihtw/properties.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace ihtw;

namespace {

const CoefficientRing Z = CoefficientRing::integers();
const CoefficientRing Q = CoefficientRing::parse("Q");
const CoefficientRing F2 = CoefficientRing::modular(2);

const FilteredComplex& sphere() {
  static const FilteredComplex k = builtin_complex("s4");
  return k;
}
const FilteredComplex& suspended_rp3() {
  static const FilteredComplex k = builtin_complex("sigma-rp3");
  return k;
}

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " [failed: " << what << "]";
    }
  }
  void report(const std::string& what, const Report& r) {
    if (r.passed) return;
    passed = false;
    detail << " [" << what << ":";
    for (const auto& line : r.lines) detail << " " << line << ";";
    detail << "]";
  }
};

Outcome diagram() {
  Outcome o;
  const auto& k = suspended_rp3();
  auto chains = std::make_shared<const PresentedComplex>(k.chain_complex(Z));
  auto ic0 = intersection_complex(k, Perversity::zero(4), chains);
  auto ic1 = intersection_complex(k, Perversity::clip(1, 4), chains);
  auto ict = intersection_complex(k, Perversity::top(4), chains);
  const std::string h3 = homology(*simplicial_cochains(k, Z), -3).to_string();
  const std::string gm2 = homology(gm_cochain_complex(ict), -3).to_string();
  const std::string gm1 = homology(gm_cochain_complex(ic1), -3).to_string();
  const std::string ih0 = homology(ic0.complex(), 1).to_string();
  const std::string ih1 = homology(ic1.complex(), 1).to_string();
  const bool beta = induced_map(beta_map(ic0, ic1), 1).is_isomorphism();
  o.expect(h3 == "Z/2", "H^3 = " + h3);
  o.expect(gm2 == "Z/2", "GM top H^3 = " + gm2);
  o.expect(gm1 == "0", "GM clip:1 H^3 = " + gm1);
  o.expect(ih0 == "Z/2", "IH zero H_1 = " + ih0);
  o.expect(ih1 == "Z/2", "IH clip:1 H_1 = " + ih1);
  o.expect(beta, "beta zero -> clip:1 in degree 1");
  o.detail << " H^3=" << h3 << " GM_2^3=" << gm2 << " GM_1^3=" << gm1 << " IH^0_1=" << ih0 << " IH^1_1=" << ih1
           << " beta " << (beta ? "iso" : "not iso");
  return o;
}

Outcome factorization() {
  Outcome o;
  const std::vector<Perversity> named{Perversity::zero(4), Perversity::clip(1, 4), Perversity::top(4)};
  for (const auto* k : {&sphere(), &suspended_rp3()})
    for (const auto& ring : {Z, Q}) o.report(ring.symbol(), verify_factorization(*k, named, ring));
  o.detail << " s4, sigma-rp3 x Z, Q x {zero, clip:1, top}";
  return o;
}

Outcome chain_identity() {
  Outcome o;
  for (const auto* k : {&sphere(), &suspended_rp3()}) {
    Report r = check_chain_level_identity(*k, Z);
    o.report("chain identity", r);
    if (r.passed)
      for (const auto& line : r.lines) o.detail << " " << line << ";";
  }
  return o;
}

Outcome local_comparison() {
  Outcome o;
  for (const auto* k : {&sphere(), &suspended_rp3()}) {
    Report r = check_local_comparison(*k);
    o.report("mu^*", r);
    if (r.passed) o.detail << " " << r.lines.front() << ";";
  }
  return o;
}

Outcome local_cap() {
  Outcome o;
  for (const auto* k : {&sphere(), &suspended_rp3()}) {
    Report r = check_local_cap_identity(*k, Z);
    o.report("local cap", r);
    if (r.passed) o.detail << " " << r.lines.front() << ";";
  }
  return o;
}

Outcome zero_top() {
  Outcome o;
  struct Run {
    const FilteredComplex* k;
    CoefficientRing ring;
    const char* verdict;
  };
  for (const Run& run : {Run{&sphere(), Z, "PASS: (i) holds, (ii) holds, equivalence OK"},
                         Run{&suspended_rp3(), Q, "PASS: (i) holds, (ii) holds, equivalence OK"},
                         Run{&suspended_rp3(), Z, "PASS: (i) fails, (ii) fails, equivalence OK"}}) {
    Report r = check_zero_top(*run.k, run.ring);
    const std::string& got = r.lines.back();
    o.expect(r.passed && got == run.verdict, got);
    o.detail << " " << run.ring.symbol() << ": " << got.substr(6) << ";";
  }
  return o;
}

Outcome properties() {
  Outcome o;
  std::size_t complexes = 0;
  for (const char* name : {"s0", "s1", "s2", "s3", "s4", "rp2", "rp3", "rp3-hex", "sigma-rp3", "cone:s2", "susp:rp2"}) {
    const FilteredComplex k = builtin_complex(name);
    for (const auto& ring : {Z, F2}) {
      Report r = check_square_zero(k, ring);
      o.report(std::string("d^2 on ") + name, r);
      ++complexes;
    }
  }
  o.detail << " d^2 = 0 on " << complexes << " complex/ring runs;";
  std::uint32_t seed = 20241015;
  for (const auto* k : {&sphere(), &suspended_rp3()}) {
    PairCheck pairs = check_cap_pairs(*k, 120, 100, seed++);
    o.report("cap pairs", pairs.report);
    o.expect(pairs.nonzero >= 100, "fewer than 100 nonzero pairs");
    o.detail << " " << pairs.pairs << " pairs, " << pairs.nonzero << " nonzero, Leibniz failures "
             << pairs.leibniz_failures << ", bookkeeping failures " << pairs.bookkeeping_failures
             << " (closed-skeleton reading: " << pairs.closed_skeleton_failures << ");";
  }
  Report lattice = check_monotonicity(suspended_rp3(), Z);
  o.report("monotonicity", lattice);
  if (lattice.passed) o.detail << " " << lattice.lines.front();
  return o;
}

std::vector<std::string> homology_strings(const FilteredComplex& k, const CoefficientRing& ring) {
  PresentedComplex c = k.chain_complex(ring);
  std::vector<std::string> out;
  for (int d = 0; d <= k.top_dimension(); ++d) out.push_back(homology(c, d).to_string());
  return out;
}

std::pair<std::size_t, std::vector<Integer>> reduced(const HomologyGroup& h) {
  std::size_t r = h.rank();
  if (h.degree() == 0 && r > 0) --r;
  return {r, h.torsion()};
}

Outcome constructions() {
  Outcome o;
  for (const char* name : {"rp3", "rp3-hex"}) {
    const FilteredComplex k = builtin_complex(name);
    o.expect(homology_strings(k, Z) == std::vector<std::string>{"Z", "Z/2", "0", "Z"}, std::string(name) + " over Z");
    o.expect(homology_strings(k, F2) == std::vector<std::string>{"Z/2", "Z/2", "Z/2", "Z/2"},
             std::string(name) + " over Z/2");
  }
  std::size_t checked = 0;
  for (const char* name : {"s0", "s1", "s2", "s3", "s4", "rp2", "rp3", "rp3-hex", "cone:s1", "susp:rp2", "sigma-rp3"}) {
    const FilteredComplex k = builtin_complex(name);
    const FilteredComplex sk = suspension(k);
    const PresentedComplex ck = k.chain_complex(Z), csk = sk.chain_complex(Z);
    bool ok = reduced(homology(csk, 0)).first == 0 && reduced(homology(csk, 0)).second.empty();
    for (int d = 1; d <= sk.top_dimension(); ++d) ok = ok && reduced(homology(csk, d)) == reduced(homology(ck, d - 1));
    o.expect(ok, std::string("suspension of ") + name);
    ++checked;
  }
  o.detail << " RP^3 over Z and Z/2 from two triangulations; suspension isomorphism on " << checked << " builtins";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"suspended RP^3 diagram", diagram},
      {"factorization through Thom-Whitney cochains", factorization},
      {"chain-level comparison identity", chain_identity},
      {"mu^* per simplex", local_comparison},
      {"local cap identity", local_cap},
      {"zero/top truth table", zero_top},
      {"property suites", properties},
      {"construction self-checks", constructions},
  };
  bool all = true;
  int index = 1;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, " (%.1fs)", seconds);
    std::cout << (o.passed ? "PASS" : "FAIL") << " " << index++ << ". " << c.name << ":" << o.detail.str() << timing
              << std::endl;
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
