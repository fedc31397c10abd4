#include "locunc/robust_cut.hpp"

#include <algorithm>
#include <chrono>

#include "locunc/errors.hpp"
#include "locunc/evalc.hpp"
#include "locunc/families.hpp"
#include "locunc/io.hpp"

namespace locunc {

namespace {

// The family members with one running max per member; adding a scenario only
// touches the new column.
class Master {
 public:
  Master(const Instance& inst, const Caps& caps)
      : inst_(inst), members_(enumerate_family(inst.family(), inst.graph(), caps)), worst_(members_.size(), 0.0) {
    if (members_.empty()) throw Infeasible("the family has no members");
  }

  void add(const Scenario& u) {
    std::vector<double> w(inst_.m());
    for (EdgeId e = 0; e < inst_.m(); ++e) {
      const Edge& ed = inst_.graph().edge(e);
      w[e] = inst_.space()(inst_.location(u, ed.u), inst_.location(u, ed.v));
    }
    for (size_t k = 0; k < members_.size(); ++k) worst_[k] = std::max(worst_[k], total_weight(w, members_[k]));
  }

  MasterResult solve() const {
    size_t best = 0;
    for (size_t k = 1; k < members_.size(); ++k)
      if (worst_[k] < worst_[best]) best = k;
    return {members_[best], worst_[best]};
  }

 private:
  const Instance& inst_;
  std::vector<EdgeSubset> members_;
  std::vector<double> worst_;
};

}  // namespace

MasterResult solve_master(const Instance& inst, const std::vector<Scenario>& scenarios, const Caps& caps) {
  Master master(inst, caps);
  if (scenarios.empty()) master.add(Scenario{std::vector<int>(inst.n(), 0)});
  for (const auto& u : scenarios) master.add(u);
  return master.solve();
}

CutResult cutting_plane(const Instance& inst, std::optional<Scenario> initial, const Caps& caps) {
  const auto start = std::chrono::steady_clock::now();
  Master master(inst, caps);
  CutResult r;
  CutState& st = r.state;
  st.scenarios.push_back(initial ? *initial : barycenter_scenario(inst));
  master.add(st.scenarios.back());
  for (int it = 1;; ++it) {
    const MasterResult mr = master.solve();
    EvalResult ev = eval_c(inst, mr.F, caps);
    CutIteration log;
    log.iteration = it;
    log.master_value = mr.value;
    log.eval_value = ev.value;
    log.incumbent = mr.F;
    st.incumbent = mr.F;
    st.master_value = mr.value;
    // a scenario already in the set cannot cut the incumbent beyond float noise
    const bool cut = ev.value > mr.value + kTol &&
                     std::find(st.scenarios.begin(), st.scenarios.end(), ev.witness) == st.scenarios.end();
    if (cut) {
      st.scenarios.push_back(ev.witness);
      master.add(ev.witness);
    }
    log.added = cut;
    log.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    st.log.push_back(std::move(log));
    if (!cut) {
      r.F = mr.F;
      r.value = ev.value;
      return r;
    }
  }
}

void write_iteration_log_csv(const CutState& state, std::ostream& out, bool with_time) {
  out << "iteration,master_value,eval_value,added" << (with_time ? ",seconds" : "") << "\n";
  for (const auto& it : state.log) {
    out << it.iteration << ',' << format_double(it.master_value) << ',' << format_double(it.eval_value) << ','
        << (it.added ? 1 : 0);
    if (with_time) out << ',' << format_double(it.seconds);
    out << "\n";
  }
}

}  // namespace locunc
