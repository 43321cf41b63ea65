#include "alphaspec/report.hpp"

namespace alphaspec {

void TheoremReport::merge(const TheoremReport& other) {
  instances_checked += other.instances_checked;
  instances_skipped += other.instances_skipped;
  certified_ties += other.certified_ties;
  if (other.smallest_gap) observe_gap(*other.smallest_gap);
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  extremal_witnesses.insert(extremal_witnesses.end(), other.extremal_witnesses.begin(),
                            other.extremal_witnesses.end());
  equality_witnesses.insert(equality_witnesses.end(), other.equality_witnesses.begin(),
                            other.equality_witnesses.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

}  // namespace alphaspec
