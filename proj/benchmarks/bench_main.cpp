// Copyright 2026 the cqa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The point of rewriting: repair enumeration is exponential in the number
// of inconsistent blocks, formula evaluation is not. The range parameter
// scales the number of two-fact blocks per relation.

#include <benchmark/benchmark.h>

#include "cqa/circuit.hpp"
#include "cqa/randgen.hpp"
#include "cqa/repairs.hpp"
#include "cqa/rewrite.hpp"
#include "cqa/semantics.hpp"

namespace {

cqa::KDatabase chain_db(std::size_t blocks) {
    cqa::KDatabase db({{"R", 2, 1}, {"S", 2, 1}}, cqa::semiring("nat"));
    for (std::size_t i = 0; i < blocks; ++i) {
        std::string a = "a" + std::to_string(i);
        for (const char* b : {"u", "v"}) {
            db.insert("R", {a, b}, cqa::Value::of_nat(1 + i % 3));
            db.insert("S", {b, a}, cqa::Value::of_nat(1 + (i + 1) % 3));
        }
    }
    return db;
}

const cqa::ConjunctiveQuery& qpath() {
    static const cqa::ConjunctiveQuery q = cqa::parse_query("q() :- R(x;y), S(y;z).");
    return q;
}

void BM_RepairOracle(benchmark::State& state) {
    cqa::KDatabase db = chain_db(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cqa::mca_oracle(qpath(), db, {}, 1u << 22));
}
BENCHMARK(BM_RepairOracle)->DenseRange(2, 10, 2);

void BM_RewritingEval(benchmark::State& state) {
    cqa::KDatabase db = chain_db(static_cast<std::size_t>(state.range(0)));
    cqa::Rewriting rw = cqa::rewrite(qpath());
    for (auto _ : state)
        benchmark::DoNotOptimize(cqa::eval_lk(*rw.formula, db));
}
BENCHMARK(BM_RewritingEval)->DenseRange(2, 10, 2);

void BM_CompileCircuit(benchmark::State& state) {
    cqa::Rewriting rw = cqa::rewrite(qpath());
    std::vector<cqa::RelationSig> schema = qpath().induced_schema();
    for (auto _ : state)
        benchmark::DoNotOptimize(cqa::Circuit::compile(
            *rw.formula, static_cast<std::size_t>(state.range(0)), schema,
            cqa::semiring("nat")));
}
BENCHMARK(BM_CompileCircuit)->DenseRange(2, 10, 2);

void BM_CircuitEval(benchmark::State& state) {
    cqa::KDatabase db = chain_db(3);
    std::size_t n = db.active_domain().size();
    cqa::Rewriting rw = cqa::rewrite(qpath());
    cqa::Circuit c =
        cqa::Circuit::compile(*rw.formula, n, qpath().induced_schema(), cqa::semiring("nat"));
    std::vector<cqa::Value> enc = cqa::encode(db, {}, n);
    for (auto _ : state) benchmark::DoNotOptimize(c.evaluate(enc));
}
BENCHMARK(BM_CircuitEval);

} // namespace

BENCHMARK_MAIN();
