// Copyright 2026 The dqc1sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"
#include "dqc1/exact_sim.hpp"
#include "dqc1/iqp.hpp"
#include "dqc1/random.hpp"
#include "dqc1/strong_sim.hpp"
#include "oracle.hpp"

using namespace dqc1;

namespace {

Dqc1Spec all_outputs(Circuit c, Qubit clean = 0) {
    c.clean_qubit = clean;
    c.outputs.clear();
    for (Qubit q = 0; q < c.num_qubits; ++q) {
        c.outputs.push_back(q);
    }
    return Dqc1Spec::from(c);
}

Bits bits_of(std::size_t index, std::size_t width) {
    Bits z(width);
    for (std::size_t j = 0; j < width; ++j) {
        z[j] = (index >> j) & 1;
    }
    return z;
}

}  // namespace

TEST_SUITE("strong-sim") {

TEST_CASE("point examples") {
    Circuit x;
    x.num_qubits = 4;
    x.add(Gate::x(0));
    const Dqc1Spec spec = all_outputs(x);
    for (std::size_t rest = 0; rest < 8; ++rest) {
        Bits z = bits_of(rest << 1, 4);
        CHECK(strongsim_constdepth_point(spec, z) == 0.0);
        z[0] = 1;
        CHECK(strongsim_constdepth_point(spec, z) == 0.125);
    }
    Circuit empty;
    empty.num_qubits = 3;
    CHECK(strongsim_constdepth_point(all_outputs(empty), {0, 1, 1}) == 0.25);
    CHECK(strongsim_constdepth_point(all_outputs(empty), {1, 1, 1}) == 0.0);
    CHECK_THROWS_AS(strongsim_constdepth_point(spec, {0, 1}), ValidationError);
    CHECK_THROWS_AS(strongsim_constdepth_point(spec, {0, 1, 2, 0}), ValidationError);
}

TEST_CASE("marginal examples") {
    Circuit h;
    h.num_qubits = 3;
    h.add(Gate::h(0));
    const Dqc1Spec spec = all_outputs(h);
    CHECK(strongsim_constdepth_marginal(spec, {0}, {0}) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(strongsim_constdepth_marginal(spec, {0}, {1}) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(strongsim_constdepth_marginal(spec, {2}, {0}) == 0.5);
    CHECK(strongsim_constdepth_marginal(spec, {2}, {1}) == 0.5);
    CHECK(strongsim_constdepth_marginal(spec, {}, {}) == 1.0);
    CHECK_THROWS_AS(strongsim_constdepth_marginal(spec, {1, 1}, {0, 0}), ValidationError);
    CHECK_THROWS_AS(strongsim_constdepth_marginal(spec, {5}, {0}), ValidationError);
}

TEST_CASE("shallow circuits match the density-matrix oracle") {
    Rng rng(61);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const Dqc1Spec spec = random_shallow_spec(n, 1 + trial % 3, rng);
        const auto want = oracle::dqc1_probs(spec.circuit, spec.clean, spec.outputs);
        const auto dist = strongsim_constdepth_distribution(spec);
        CHECK(std::abs(dist.total() - 1.0) < 1e-10);
        for (std::size_t i = 0; i < want.size(); ++i) {
            CHECK(std::abs(strongsim_constdepth_point(spec, bits_of(i, n)) - want[i]) < 1e-10);
            CHECK(std::abs(dist.probs[i] - want[i]) < 1e-10);
        }
        // Every pair of wires.
        for (Qubit a = 0; a < n; ++a) {
            for (Qubit b = a + 1; b < n; ++b) {
                const auto m = oracle::dqc1_probs(spec.circuit, spec.clean, {a, b});
                double total = 0;
                for (std::size_t i = 0; i < 4; ++i) {
                    const double got = strongsim_constdepth_marginal(spec, {a, b}, bits_of(i, 2));
                    total += got;
                    CHECK(std::abs(got - m[i]) < 1e-10);
                }
                CHECK(std::abs(total - 1.0) < 1e-10);
            }
        }
    }
}

TEST_CASE("wide shallow circuit beyond the ensemble oracle") {
    // 40 wires, but every cone is tiny.
    Circuit c;
    c.num_qubits = 40;
    c.add(Gate::cx(1, 0));
    for (Qubit q = 2; q + 1 < 40; q += 2) {
        c.add(Gate::h(q)).add(Gate::cx(q, q + 1));
    }
    const Dqc1Spec spec = all_outputs(c, 0);
    // The clean wire copies its mixed partner; every other pair is uniform.
    CHECK(strongsim_constdepth_marginal(spec, {0, 1}, {1, 1}) == doctest::Approx(0.5));
    CHECK(strongsim_constdepth_marginal(spec, {0, 1}, {1, 0}) == 0.0);
    CHECK(strongsim_constdepth_marginal(spec, {2, 3}, {1, 0}) == 0.25);
    Bits z(40, 0);
    CHECK(strongsim_constdepth_point(spec, z) == std::ldexp(1.0, -39));
}

TEST_CASE("deep circuits exceed the cone cap") {
    Circuit c;
    c.num_qubits = 25;
    for (Qubit q = 0; q + 1 < 25; ++q) {
        c.add(Gate::cx(q + 1, q));
    }
    const Dqc1Spec spec = all_outputs(c, 0);
    CHECK_THROWS_WITH_AS(strongsim_constdepth_point(spec, Bits(25, 0)),
                         doctest::Contains("light cone exceeds cap"), CapExceeded);
    CHECK_THROWS_AS(strongsim_constdepth_distribution(spec), CapExceeded);
    CHECK_NOTHROW(strongsim_constdepth_point(spec, Bits(25, 0), {30}));
}

TEST_CASE("IQP isolated and connected clean vertex") {
    IqpSpec iso;
    iso.l = 3;
    iso.theta = {0, 5, 7, 1};
    iso.edges = {{1, 2}, {2, 3}};
    const auto d = strongsim_iqp_distribution(iso);
    for (std::size_t i = 0; i < d.probs.size(); ++i) {
        CHECK(d.probs[i] == ((i & 1) ? 0.0 : 0.125));
    }
    iso.theta[0] = 2;
    CHECK(iqp_clean_probability(iso, false) == doctest::Approx(0.5).epsilon(1e-15));
    iso.theta[0] = 1;
    CHECK(iqp_clean_probability(iso, false) == doctest::Approx(std::pow(std::cos(M_PI / 8), 2)).epsilon(1e-14));

    IqpSpec joined = iso;
    joined.edges.push_back({0, 3});
    for (int k = 0; k < 16; ++k) {
        joined.theta[0] = k;
        CHECK(iqp_clean_probability(joined, false) == 0.5);
        CHECK(iqp_clean_probability(joined, true) == 0.5);
    }
}

TEST_CASE("ZZ coupling on an otherwise isolated clean vertex is not uniform") {
    IqpSpec s;
    s.l = 1;
    s.theta = {0, 0};
    s.zz = {{0, 1, 1}};
    const double want = oracle::dqc1_probs(build_iqp_dqc1(s), 0, {0})[0];
    CHECK(std::abs(want - 0.5 * (1 + std::cos(M_PI / 4))) < 1e-12);
    CHECK(std::abs(iqp_clean_probability(s, false) - want) < 1e-12);
}

TEST_CASE("IQP matches the density-matrix oracle") {
    Rng rng(62);
    for (int trial = 0; trial < 40; ++trial) {
        IqpSpec spec = random_iqp_spec(4, trial % 2 == 1, rng);
        if (trial % 3 == 0 && spec.l > 0) {
            spec.outputs = {static_cast<Qubit>(spec.l), 0};
        }
        const Circuit c = build_iqp_dqc1(spec);
        const auto want = oracle::dqc1_probs(c, 0, spec.output_qubits());
        const auto got = strongsim_iqp_distribution(spec);
        CHECK(std::abs(got.total() - 1.0) < 1e-12);
        for (std::size_t i = 0; i < want.size(); ++i) {
            CHECK(std::abs(got.probs[i] - want[i]) < 1e-10);
        }
    }
}

TEST_CASE("IQP probability depends only on the clean bit") {
    Rng rng(63);
    for (int trial = 0; trial < 20; ++trial) {
        const IqpSpec spec = random_iqp_spec(6, trial % 2 == 0, rng);
        const auto d = strongsim_iqp_distribution(spec);
        for (std::size_t i = 2; i < d.probs.size(); ++i) {
            CHECK(d.probs[i] == d.probs[i & 1]);
        }
    }
}

TEST_CASE("IQP spec validation and circuit round trip") {
    IqpSpec s;
    s.l = 2;
    s.theta = {1, 2};
    CHECK_THROWS_AS(validate(s), ValidationError);
    s.theta = {1, 2, 3};
    s.edges = {{1, 1}};
    CHECK_THROWS_AS(validate(s), ValidationError);
    s.edges = {{0, 3}};
    CHECK_THROWS_AS(validate(s), ValidationError);
    s.edges = {{2, 0}, {1, 2}};
    s.zz = {{1, 0, 19}};
    s.outputs = {0, 1, 2};
    const IqpSpec norm = normalized(s);
    CHECK(norm.edges[0] == std::pair<Qubit, Qubit>{0, 2});
    CHECK(norm.zz[0].k == 3);
    CHECK(iqp_from_circuit(build_iqp_dqc1(s)) == norm);

    IqpSpec trivial;
    trivial.theta = {0};
    const Circuit hh = build_iqp_dqc1(trivial);
    CHECK(hh.gates.size() == 2);
    CHECK(dqc1_acceptance(Dqc1Spec::from(hh)) == 0.0);

    Circuit not_iqp = hh;
    not_iqp.gates.insert(not_iqp.gates.begin() + 1, Gate::x(0));
    CHECK_THROWS_AS(iqp_from_circuit(not_iqp), ValidationError);
    Circuit odd = hh;
    odd.gates.insert(odd.gates.begin() + 1, Gate::p8(3, 0));
    CHECK_THROWS_AS(iqp_from_circuit(odd), ValidationError);
}

}
