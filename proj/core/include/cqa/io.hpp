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

#ifndef CQA_IO_HPP
#define CQA_IO_HPP

#include <filesystem>
#include <vector>

#include "cqa/kdb.hpp"

namespace cqa {

// Schema file: {"relations":[{"name":"R","arity":3,"key":2}, ...]} where
// "key" is the number of leading key positions.
std::vector<RelationSig> load_schema(const std::filesystem::path& schema_json);

// Data directory layout: one <Rel>.csv per relation, header row
// c1,...,c<arity>,ann; a missing file is an empty relation. Annotations are
// parsed by the given semiring and must be nonzero.
KDatabase load_database(const std::filesystem::path& schema_json,
                        const std::filesystem::path& data_dir, const Semiring& sr);

// Writes <Rel>.csv files (and schema.json) for db into dir, creating it if
// needed. Inverse of load_database for every semiring with exact printing.
void save_database(const KDatabase& db, const std::filesystem::path& dir);

} // namespace cqa

#endif
