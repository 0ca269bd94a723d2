#pragma once

#include <optional>
#include <vector>

#include "tpw/tnn.hpp"

namespace tpw {

bool is_regular(const GroupElt& g);
bool is_regular_semisimple(const GroupElt& g);
bool is_unipotent(const GroupElt& g);
bool is_regular_unipotent(const GroupElt& g);

struct LeviData {
  GroupElt h;  // h^{-1} s h = diag(t_std)
  IndexSet J;  // I(t_std)
  TorusElt t_std;
};

struct JordanPair {
  GroupElt s;
  GroupElt u;
  std::optional<LeviData> levi;  // present when s has a rational spectrum
};

JordanPair jordan(const GroupElt& g);
LeviData centralizer_levi(const GroupElt& s);
// {i : alpha_i(t) = 1}
IndexSet levi_type(const TorusElt& t);
std::vector<int> bplus_eigenspace_dims(const GroupElt& g);

// Default power bound for the oscillatory test. Demazure powers of any
// full-support element reach w0 by the (n-1)-st power.
int default_oscillatory_bound(int n);

struct ClassReport {
  bool regular = false;
  bool regular_semisimple = false;
  bool unipotent = false;
  bool regular_unipotent = false;
  std::optional<int> oscillatory_order;  // only computed for totally nonnegative input
};
ClassReport classify(const GroupElt& g);

}  // namespace tpw
