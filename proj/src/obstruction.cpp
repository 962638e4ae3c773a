#include "tropsurf/obstruction.hpp"

#include "tropsurf/blowup.hpp"
#include "tropsurf/error.hpp"

namespace tropsurf {

ObstructionReport obstruction_report(const DeltaComplex2& complex, int bound, int threads) {
  ObstructionReport r;
  r.bound = bound;
  r.decomposition = find_decomposition(complex);
  if (r.decomposition) {
    r.verification = verify_decomposition(complex, *r.decomposition);
    r.hyperbolic_certified = r.verification->valid && r.verification->hyperbolic;
    r.notes.push_back(r.hyperbolic_certified
                          ? "hyperbolic manifold with fins and ornaments: no tropical or "
                            "at-most-one structure exists"
                          : "decomposition is not hyperbolic: hyperbolic obstruction does not apply");
  } else {
    r.notes.push_back("no decomposition found: hyperbolic obstruction does not apply");
  }

  SearchSpec spec{complex, bound, SearchMode::Tropical, false, true, threads, 0, {}};
  r.tropical = search(spec);
  spec.mode = SearchMode::AtMostOne;
  r.at_most_one = search(spec);

  if (r.hyperbolic_certified &&
      (!r.tropical.witnesses.empty() || !r.at_most_one.witnesses.empty())) {
    r.consistent = false;
    r.notes.push_back("fatal: witness found on a certified hyperbolic complex");
  }
  for (const auto& alpha : r.at_most_one.witnesses) {
    try {
      const RobustifyResult out = robustify(WeakTropicalSurface(complex, alpha));
      if (classify(out.surface).verdict == Verdict::Tropical) ++r.robustified;
    } catch (const std::exception& e) {
      r.consistent = false;
      r.notes.push_back(std::string("fatal: robustify failed: ") + e.what());
    }
  }
  return r;
}

}  // namespace tropsurf
