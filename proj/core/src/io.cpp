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

#include "cqa/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cqa/error.hpp"

namespace cqa {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

} // namespace

std::vector<RelationSig> load_schema(const std::filesystem::path& schema_json) {
    std::ifstream in(schema_json);
    if (!in) throw IoError("cannot open schema file " + schema_json.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("malformed schema JSON in " + schema_json.string() + ": " + e.what());
    }
    if (!j.contains("relations") || !j["relations"].is_array())
        throw IoError("schema file must contain a \"relations\" array");
    std::vector<RelationSig> out;
    for (const auto& r : j["relations"]) {
        RelationSig sig;
        try {
            sig.name = r.at("name").get<std::string>();
            sig.arity = r.at("arity").get<std::size_t>();
            sig.key_len = r.at("key").get<std::size_t>();
        } catch (const nlohmann::json::exception& e) {
            throw IoError(std::string("bad relation entry in schema: ") + e.what());
        }
        if (sig.arity == 0) throw IoError("relation " + sig.name + " has arity 0");
        if (sig.key_len > sig.arity)
            throw IoError("relation " + sig.name + " has key width " + std::to_string(sig.key_len) +
                          " > arity " + std::to_string(sig.arity));
        out.push_back(std::move(sig));
    }
    return out;
}

KDatabase load_database(const std::filesystem::path& schema_json,
                        const std::filesystem::path& data_dir, const Semiring& sr) {
    KDatabase db(load_schema(schema_json), sr);
    for (const RelationSig& sig : db.schema()) {
        std::filesystem::path file = data_dir / (sig.name + ".csv");
        std::ifstream in(file);
        if (!in) continue; // empty relation
        std::string line;
        if (!std::getline(in, line))
            throw IoError(file.string() + " is missing its header row");
        std::size_t lineno = 1;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::vector<std::string> fields = split_csv_line(line);
            if (fields.size() != sig.arity + 1)
                throw IoError(file.string() + ":" + std::to_string(lineno) + ": expected " +
                              std::to_string(sig.arity + 1) + " columns, got " +
                              std::to_string(fields.size()));
            Value ann;
            try {
                ann = sr.parse(fields.back());
            } catch (const Error& e) {
                throw IoError(file.string() + ":" + std::to_string(lineno) + ": " + e.what());
            }
            fields.pop_back();
            if (sr.is_zero(ann))
                throw IoError(file.string() + ":" + std::to_string(lineno) +
                              ": zero annotation (absent tuples are simply not listed)");
            db.insert(sig.name, std::move(fields), std::move(ann));
        }
    }
    return db;
}

void save_database(const KDatabase& db, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    nlohmann::json schema;
    schema["relations"] = nlohmann::json::array();
    for (const RelationSig& sig : db.schema()) {
        schema["relations"].push_back(
            {{"name", sig.name}, {"arity", sig.arity}, {"key", sig.key_len}});
        std::ofstream out(dir / (sig.name + ".csv"));
        if (!out) throw IoError("cannot write " + (dir / (sig.name + ".csv")).string());
        for (std::size_t i = 1; i <= sig.arity; ++i) out << "c" << i << ",";
        out << "ann\n";
        for (const auto& [tuple, ann] : db.relation(sig.name)) {
            for (const std::string& v : tuple) out << v << ",";
            out << db.semiring().print(ann) << "\n";
        }
    }
    std::ofstream sout(dir / "schema.json");
    if (!sout) throw IoError("cannot write " + (dir / "schema.json").string());
    sout << schema.dump(2) << "\n";
}

} // namespace cqa
