// Copyright (c) 2026 hwt developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "character.hpp"
#include "hwmodule.hpp"
#include "polyhedron.hpp"
#include "rootsys.hpp"

namespace hwt {

// Insertion-ordered JSON throughout: reports are byte-deterministic.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json weight_json(const Weight& w);           // array of "p/q" strings
Json qvec_json(const QVec& v);               // same, raw vector
Json ivec_json(const IVec& v);               // array of ints
Json indexset_json(IndexSet J);              // sorted 1-based indices
Json rootsys_json(const RootSystem& rs);     // {type, rank, cartan, positive_roots, form}
Json tws_json(const TruncatedWeightSet& t);  // {lambda, depth, count, weights}
Json character_json(const FormalCharacter& c);
// {vertices (fund coords), rays (root coords, primitive)}
Json vpoly_json(const VPolyhedron& p, const RootSystem& rs);
Json hpoly_json(const HPolyhedron& h);  // [{normal, offset}]

// Report envelope shared by every command: tool, version, schema, command,
// and the canonical job spec.
Json envelope(const std::string& command, Json spec, Json result);

}  // namespace hwt
