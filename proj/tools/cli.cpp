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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cqa/attack.hpp"
#include "cqa/circuit.hpp"
#include "cqa/error.hpp"
#include "cqa/io.hpp"
#include "cqa/randgen.hpp"
#include "cqa/reduce.hpp"
#include "cqa/repairs.hpp"
#include "cqa/rewrite.hpp"
#include "cqa/semantics.hpp"

namespace cqa::cli {

namespace {

struct Options {
    std::string schema;
    std::string data;
    std::string semiring;
    bool json = false;

    std::string query_file;
    std::string formula_file;
    std::vector<std::string> binds;

    bool count_only = false;
    bool list = false;
    std::size_t list_max = 20;

    bool possible = false;

    std::string dot_file;
    bool trace = false;
    bool desugar = false;

    std::uint64_t seed = 1;
    std::uint64_t trials = 100;
    std::string out_dir;

    std::size_t domain_size = 0;
    std::string json_out;
    std::string eval_dir;

    std::string target_relation;
    double epsilon = 1.0;
};

std::uint64_t repair_cap() {
    if (const char* env = std::getenv("CQA_REPAIR_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw ParseError("CQA_REPAIR_CAP must be a positive integer, got '" + std::string(env) +
                         "'");
    }
    return kDefaultRepairCap;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const Semiring& require_semiring(const Options& o) {
    if (o.semiring.empty()) throw UsageError("--semiring is required for this subcommand");
    return cqa::semiring(o.semiring);
}

KDatabase require_db(const Options& o) {
    if (o.schema.empty()) throw UsageError("--schema is required for this subcommand");
    if (o.data.empty()) throw UsageError("--data is required for this subcommand");
    return load_database(o.schema, o.data, require_semiring(o));
}

ConjunctiveQuery require_query(const Options& o) {
    if (o.query_file.empty()) throw UsageError("--query is required for this subcommand");
    std::string text = slurp(o.query_file);
    if (!o.schema.empty()) return parse_query(text, load_schema(o.schema));
    return parse_query(text);
}

Assignment parse_binds(const std::vector<std::string>& binds) {
    Assignment alpha;
    for (const std::string& b : binds) {
        auto pos = b.find('=');
        if (pos == std::string::npos || pos == 0 || pos + 1 == b.size())
            throw UsageError("--bind expects var=value, got '" + b + "'");
        alpha[b.substr(0, pos)] = b.substr(pos + 1);
    }
    return alpha;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << content;
}

int cmd_repairs(const Options& o, std::ostream& out) {
    KDatabase db = require_db(o);
    RepairSpace space = RepairSpace::of(db);
    if (o.list) {
        RepairEnumerator en(space, repair_cap());
        std::size_t shown = 0;
        nlohmann::json jl = nlohmann::json::array();
        while (auto repair = en.next()) {
            if (shown++ >= o.list_max) break;
            if (o.json) {
                nlohmann::json jr = nlohmann::json::array();
                for (const Fact& f : repair->facts()) {
                    nlohmann::json jt = {{"rel", f.relation},
                                         {"tuple", f.tuple},
                                         {"ann", db.semiring().print(f.annotation)}};
                    jr.push_back(std::move(jt));
                }
                jl.push_back(std::move(jr));
            } else {
                out << "repair " << shown << ":\n";
                for (const Fact& f : repair->facts()) {
                    out << "  " << f.relation << "(";
                    for (std::size_t i = 0; i < f.tuple.size(); ++i)
                        out << (i ? "," : "") << f.tuple[i];
                    out << ") = " << db.semiring().print(f.annotation) << "\n";
                }
            }
        }
        if (o.json)
            out << nlohmann::json{{"count", space.repair_count().to_decimal()},
                                  {"repairs", jl}}
                       .dump(2)
                << "\n";
        return 0;
    }
    if (o.json)
        out << nlohmann::json{{"count", space.repair_count().to_decimal()}}.dump(2) << "\n";
    else
        out << space.repair_count().to_decimal() << "\n";
    return 0;
}

int cmd_mca(const Options& o, std::ostream& out) {
    KDatabase db = require_db(o);
    ConjunctiveQuery q = require_query(o);
    Assignment alpha = parse_binds(o.binds);
    Value v = o.possible ? mca_possible(q, db, alpha, repair_cap())
                         : mca_oracle(q, db, alpha, repair_cap());
    if (o.json)
        out << nlohmann::json{{"value", db.semiring().print(v)}}.dump(2) << "\n";
    else
        out << db.semiring().print(v) << "\n";
    return 0;
}

int cmd_attack(const Options& o, std::ostream& out) {
    ConjunctiveQuery q = require_query(o);
    AttackGraph g = AttackGraph::of(q);
    if (!o.dot_file.empty()) write_file(o.dot_file, g.to_dot());
    if (o.json) {
        nlohmann::json je = nlohmann::json::array();
        for (const AttackEdge& e : g.edges())
            je.push_back({{"from", e.from}, {"to", e.to}, {"witness", e.witness}});
        out << nlohmann::json{{"acyclic", g.is_acyclic()},
                              {"edges", je},
                              {"unattacked", g.unattacked_atoms()}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << (g.is_acyclic() ? "acyclic" : "cyclic") << "\n";
    for (const AttackEdge& e : g.edges()) {
        out << e.from << " -> " << e.to << "  (witness:";
        for (const std::string& w : e.witness) out << " " << w;
        out << ")\n";
    }
    return 0;
}

int cmd_rewrite(const Options& o, std::ostream& out) {
    ConjunctiveQuery q = require_query(o);
    Rewriting rw = rewrite(q);
    LkPtr formula = o.desugar ? desugar_guarded(rw.formula) : rw.formula;
    if (o.json) {
        nlohmann::json j{{"formula", print_lk(*formula)}};
        if (o.trace) {
            nlohmann::json jt = nlohmann::json::array();
            for (const RewriteStep& s : rw.trace)
                jt.push_back({{"atom", s.atom.relation},
                              {"peeled_keys", s.peeled_key_vars},
                              {"peeled_nonkeys", s.peeled_nonkey_vars},
                              {"residual", s.residual.to_string()}});
            j["trace"] = std::move(jt);
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << print_lk(*formula) << "\n";
    if (o.trace) {
        for (const RewriteStep& s : rw.trace) {
            out << "peel " << s.atom.relation << "  keys:";
            for (const std::string& v : s.peeled_key_vars) out << " " << v;
            out << "  nonkeys:";
            for (const std::string& v : s.peeled_nonkey_vars) out << " " << v;
            out << "  residual: " << s.residual.to_string() << "\n";
        }
    }
    return 0;
}

int cmd_eval(const Options& o, std::ostream& out) {
    if (o.formula_file.empty() == o.query_file.empty())
        throw UsageError("eval needs exactly one of --formula or --query");
    KDatabase db = require_db(o);
    Assignment alpha = parse_binds(o.binds);
    Value v;
    if (!o.formula_file.empty()) {
        LkPtr f = parse_lk(slurp(o.formula_file));
        v = eval_lk(*f, db, alpha);
    } else {
        v = eval_cq(require_query(o), db, alpha);
    }
    if (o.json)
        out << nlohmann::json{{"value", db.semiring().print(v)}}.dump(2) << "\n";
    else
        out << db.semiring().print(v) << "\n";
    return 0;
}

// Oracle cross-check: the compiled formula must evaluate to the repair
// minimum on every database. Stops at the first discrepancy and serializes
// the offending database as CSV fixtures.
int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    ConjunctiveQuery q = require_query(o);
    const Semiring& sr = require_semiring(o);
    Rewriting rw = rewrite(q);
    std::vector<RelationSig> schema =
        o.schema.empty() ? q.induced_schema() : load_schema(o.schema);

    for (std::uint64_t t = 0; t < o.trials; ++t) {
        std::uint64_t trial_seed = o.seed + t;
        KDatabase db = random_database(schema, sr, trial_seed);
        Assignment alpha = random_assignment(q.free_vars(), db, trial_seed);
        Value expected = mca_oracle(q, db, alpha, repair_cap());
        Value got = eval_lk(*rw.formula, db, alpha);
        if (!sr.equals(expected, got)) {
            std::string dir = o.out_dir.empty() ? "counterexample" : o.out_dir;
            save_database(db, dir);
            err << "discrepancy at seed " << trial_seed << ": repair minimum "
                << sr.print(expected) << ", rewriting " << sr.print(got)
                << "; database saved to " << dir << "\n";
            return 1;
        }
    }
    if (o.json)
        out << nlohmann::json{{"trials", o.trials}, {"discrepancies", 0}}.dump(2) << "\n";
    else
        out << "ok: " << o.trials << " trials, no discrepancy\n";
    return 0;
}

int cmd_circuit(const Options& o, std::ostream& out) {
    if (o.formula_file.empty()) throw UsageError("--formula is required for circuit");
    if (o.domain_size == 0) throw UsageError("--domain-size is required for circuit");
    if (o.schema.empty()) throw UsageError("--schema is required for circuit");
    const Semiring& sr = require_semiring(o);
    LkPtr f = parse_lk(slurp(o.formula_file));
    std::vector<RelationSig> schema = load_schema(o.schema);
    std::set<std::string> frees = lk_free_vars(*f);
    std::vector<std::string> slots(frees.begin(), frees.end());
    Circuit c = Circuit::compile(*f, o.domain_size, schema, sr, slots);
    Circuit::Stats st = c.stats();

    nlohmann::json j{{"depth", st.depth}, {"size", st.size}, {"inputs", c.layout().total}};
    if (!o.dot_file.empty()) write_file(o.dot_file, c.to_dot());
    if (!o.json_out.empty()) write_file(o.json_out, c.to_json_string());
    if (!o.eval_dir.empty()) {
        KDatabase db = load_database(o.schema, o.eval_dir, sr);
        Assignment alpha = parse_binds(o.binds);
        Value v = c.evaluate(encode(db, alpha, o.domain_size, slots));
        j["value"] = sr.print(v);
        if (!o.json) {
            out << sr.print(v) << "\n";
            out << "depth " << st.depth << ", size " << st.size << ", inputs "
                << c.layout().total << "\n";
            return 0;
        }
    } else if (!o.json) {
        out << "depth " << st.depth << ", size " << st.size << ", inputs " << c.layout().total
            << "\n";
        return 0;
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_reduce(const Options& o, std::ostream& out) {
    if (o.target_relation.empty()) throw UsageError("--target is required for reduce");
    if (o.out_dir.empty()) throw UsageError("--out is required for reduce");
    if (o.schema.empty() || o.data.empty())
        throw UsageError("reduce needs --schema and --data for the Boolean input");
    KDatabase db0 = load_database(o.schema, o.data, cqa::semiring("bool"));
    ReductionConfig cfg{o.target_relation, o.epsilon};
    KDatabase reduced = hardness_reduce(db0, cfg);
    save_database(reduced, o.out_dir);
    if (o.json)
        out << nlohmann::json{{"weight", cfg.weight()}, {"out", o.out_dir}}.dump(2) << "\n";
    else
        out << "wrote counting-semiring instance with target weight " << cfg.weight() << " to "
            << o.out_dir << "\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"consistent query answering over semiring-annotated databases"};
    app.fallthrough();
    app.require_subcommand(0, 1);
    app.add_option("--schema", o.schema, "schema JSON file");
    app.add_option("--data", o.data, "directory of <Rel>.csv files");
    app.add_option("--semiring", o.semiring, "bool|nat|trop|viterbi|fuzzy");
    app.add_flag("--json", o.json, "machine-readable output");

    CLI::App* repairs = app.add_subcommand("repairs", "count or list the repairs");
    repairs->add_flag("--count", o.count_only, "print the repair count (default)");
    repairs->add_flag("--list", o.list, "materialize repairs");
    repairs->add_option("--max", o.list_max, "list at most this many repairs");

    CLI::App* mca = app.add_subcommand("mca", "consistent answers by repair enumeration");
    mca->add_option("--query", o.query_file, "query file")->required();
    mca->add_option("--bind", o.binds, "free-variable binding var=value");
    mca->add_flag("--possible", o.possible, "greatest value over repairs instead of least");

    CLI::App* attack = app.add_subcommand("attack", "attack graph of a query");
    attack->add_option("--query", o.query_file, "query file")->required();
    attack->add_option("--dot", o.dot_file, "write the graph in DOT format");

    CLI::App* rewrite = app.add_subcommand("rewrite", "compile a query to the rewriting logic");
    rewrite->add_option("--query", o.query_file, "query file")->required();
    rewrite->add_flag("--trace", o.trace, "show the peeling steps");
    rewrite->add_flag("--desugar", o.desugar, "eliminate single-variable guards");

    CLI::App* eval = app.add_subcommand("eval", "evaluate a formula or query on the database");
    eval->add_option("--formula", o.formula_file, "rewriting-logic formula file");
    eval->add_option("--query", o.query_file, "query file");
    eval->add_option("--bind", o.binds, "free-variable binding var=value");

    CLI::App* verify = app.add_subcommand("verify", "cross-check a rewriting against repairs");
    verify->add_option("--query", o.query_file, "query file")->required();
    verify->add_option("--seed", o.seed, "base seed (default 1)");
    verify->add_option("--trials", o.trials, "number of random databases (default 100)");
    verify->add_option("--out", o.out_dir, "where to save a counterexample");

    CLI::App* circuit = app.add_subcommand("circuit", "compile a formula to a circuit");
    circuit->add_option("--formula", o.formula_file, "rewriting-logic formula file")->required();
    circuit->add_option("--domain-size", o.domain_size, "number of domain slots")->required();
    circuit->add_option("--dot", o.dot_file, "write the circuit in DOT format");
    circuit->add_option("--json-out", o.json_out, "write the circuit as JSON");
    circuit->add_option("--eval", o.eval_dir, "encode this data directory and evaluate");
    circuit->add_option("--bind", o.binds, "assignment-slot binding var=value");

    CLI::App* reduce = app.add_subcommand("reduce", "build an approximation-hardness instance");
    reduce->add_option("--target", o.target_relation, "relation to reweight")->required();
    reduce->add_option("--epsilon", o.epsilon, "approximation guarantee (>= 1)");
    reduce->add_option("--out", o.out_dir, "output data directory")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (repairs->parsed()) return cmd_repairs(o, out);
        if (mca->parsed()) return cmd_mca(o, out);
        if (attack->parsed()) return cmd_attack(o, out);
        if (rewrite->parsed()) return cmd_rewrite(o, out);
        if (eval->parsed()) return cmd_eval(o, out);
        if (verify->parsed()) return cmd_verify(o, out, err);
        if (circuit->parsed()) return cmd_circuit(o, out);
        if (reduce->parsed()) return cmd_reduce(o, out);
        out << app.help();
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace cqa::cli
