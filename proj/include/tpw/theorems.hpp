#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tpw/classify.hpp"
#include "tpw/tnn.hpp"

namespace tpw {

// u^{-1} g u = b = u' diag(t) with u lower unipotent and u' upper unipotent.
struct AttractingConjugator {
  GroupElt u;
  GroupElt b;
  TorusElt t;
};
// Requires g oscillatory with rational spectrum.
AttractingConjugator attracting_conjugator(const GroupElt& g);

struct ConjStep {
  int i = 0;
  Rat a, c, b;
  GroupElt result;  // y_i(-b) t u y_i(b)
};
ConjStep torus_conj_step(const TorusElt& t, int i, const GroupElt& u);

struct TorusConj {
  GroupElt u_prime;  // product of the y_i(b) in step order
  GroupElt result;   // u'^{-1} t u u'
  std::vector<ConjStep> steps;
  DominantTorus dominant;
};
TorusConj torus_conj(const TorusElt& t, const GroupElt& u);

// u1 = x-word product, u2 = y-word product; the torus part is constructed.
struct CellWords {
  int n = 0;
  std::vector<int> word1;
  QVec params1;
  std::vector<int> word2;
  QVec params2;
};

struct TraceStep {
  std::string label;
  GroupElt m;
};

struct WitnessReport {
  std::string kind;  // "rss", "non-rss" or "non-regular"
  CellWords input;
  CellWords used;    // differs from input only when a parameter was pinned
  bool pinned = false;
  IndexSet K;
  std::optional<int> j;
  TorusElt t;
  GroupElt element;  // u1 u2 t
  CellPoint cell;    // the same element as u1 t u2'
  bool outcome = false;
  // Factors whose product is element, in order.
  std::vector<TraceStep> trace;
  // Conjugating elements used by the construction (not part of the product).
  std::vector<TraceStep> conjugators;
};

GroupElt trace_product(const WitnessReport& r);

WitnessReport rss_witness(const CellWords& in);
// Requires supp(w1) != I or supp(w2) != I.
WitnessReport non_rss_witness(const CellWords& in);
// Requires supp(w1) != I and supp(w2) != I.
WitnessReport non_regular_witness(const CellWords& in);

struct RegularUnipotentReport {
  int n = 0;
  int full_support_samples = 0;
  int mixed_samples = 0;
  std::vector<std::string> violations;
};
RegularUnipotentReport regular_unipotent_classification(int n, int sample_count, std::uint64_t seed);

}  // namespace tpw
