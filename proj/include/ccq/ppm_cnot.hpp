#pragma once

#include <functional>

#include "ccq/tableau.hpp"

namespace ccq {

// Measurement-based CNOT: control c, auxiliary a prepared in |+>, target t.
// Joint ZZ(c,a), then XX(a,t), then Z(a); corrections Z_c^{m_xx} and
// X_t^{m_zz xor m_z}.
struct PpmCnotReport {
    std::size_t branches_checked = 0;
    std::size_t product_states_checked = 0;
    bool channel_ok = false;    // Choi check across every branch
    bool states_ok = false;     // every stabilizer product input, every branch
    bool ok() const { return channel_ok && states_ok; }
};

namespace detail {

// explores every random-measurement branch of a circuit runner
inline void explore_branches(StabTableau t,
                             const std::vector<std::function<StabTableau::Outcome(StabTableau&, std::optional<int>)>>& meas,
                             std::size_t idx, std::vector<int>& outcomes,
                             const std::function<void(StabTableau&, const std::vector<int>&)>& done,
                             std::size_t& count) {
    if (idx == meas.size()) {
        done(t, outcomes);
        ++count;
        return;
    }
    StabTableau probe = t;
    auto o = meas[idx](probe, 0);
    if (o.deterministic) {
        outcomes.push_back(o.value);
        explore_branches(std::move(probe), meas, idx + 1, outcomes, done, count);
        outcomes.pop_back();
        return;
    }
    for (int v : {0, 1}) {
        StabTableau branch = t;
        meas[idx](branch, v);
        outcomes.push_back(v);
        explore_branches(std::move(branch), meas, idx + 1, outcomes, done, count);
        outcomes.pop_back();
    }
}

}  // namespace detail

inline PpmCnotReport verify_ppm_cnot() {
    PpmCnotReport rep;
    // qubits: 0 control, 1 auxiliary, 2 target, 3/4 references
    auto zz = [](StabTableau& t, std::optional<int> f) {
        return t.measure(PauliVec{t.num_qubits(), 0, 0b011, +1}, f);
    };
    auto xx = [](StabTableau& t, std::optional<int> f) {
        return t.measure(PauliVec{t.num_qubits(), 0b110, 0, +1}, f);
    };
    auto za = [](StabTableau& t, std::optional<int> f) {
        return t.measure(PauliVec{t.num_qubits(), 0, 0b010, +1}, f);
    };
    std::vector<std::function<StabTableau::Outcome(StabTableau&, std::optional<int>)>> meas = {zz, xx, za};

    // channel equality via reference pairs on control and target
    StabTableau init(5);
    init.h(0); init.cnot(0, 3);
    init.h(2); init.cnot(2, 4);
    init.h(1);
    StabTableau ref(5);
    ref.h(0); ref.cnot(0, 3);
    ref.h(2); ref.cnot(2, 4);
    ref.cnot(0, 2);
    auto ref_rows = ref.restricted_stabilizers(0b11101);

    rep.channel_ok = true;
    std::vector<int> outcomes;
    std::size_t count = 0;
    detail::explore_branches(init, meas, 0, outcomes,
        [&](StabTableau& t, const std::vector<int>& m) {
            if (m[1]) t.z(0);
            if (m[0] ^ m[2]) t.x(2);
            if (t.restricted_stabilizers(0b11101) != ref_rows) rep.channel_ok = false;
        }, count);
    rep.branches_checked = count;

    // all single-qubit stabilizer inputs on control and target
    rep.states_ok = true;
    auto prep = [](StabTableau& t, std::size_t q, int state) {
        switch (state) {           // |0>, |1>, |+>, |->, |i>, |-i>
            case 0: break;
            case 1: t.x(q); break;
            case 2: t.h(q); break;
            case 3: t.x(q); t.h(q); break;
            case 4: t.h(q); t.s(q); break;
            case 5: t.x(q); t.h(q); t.s(q); break;
        }
    };
    for (int sc = 0; sc < 6; ++sc)
        for (int st = 0; st < 6; ++st) {
            StabTableau in(3);
            prep(in, 0, sc);
            prep(in, 2, st);
            in.h(1);
            StabTableau want(3);
            prep(want, 0, sc);
            prep(want, 2, st);
            want.cnot(0, 2);
            auto want_rows = want.restricted_stabilizers(0b101);
            std::vector<int> out2;
            std::size_t cnt2 = 0;
            detail::explore_branches(in, meas, 0, out2,
                [&](StabTableau& t, const std::vector<int>& m) {
                    if (m[1]) t.z(0);
                    if (m[0] ^ m[2]) t.x(2);
                    if (t.restricted_stabilizers(0b101) != want_rows) rep.states_ok = false;
                }, cnt2);
            ++rep.product_states_checked;
        }
    return rep;
}

}  // namespace ccq
