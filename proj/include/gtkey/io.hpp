#pragma once

// JSON encodings shared by the CLI, the cache and the tests.

#include <string>

#include <json.hpp>

#include "gtkey/ehrhart.hpp"
#include "gtkey/gt.hpp"
#include "gtkey/kogan.hpp"
#include "gtkey/multipoly.hpp"
#include "gtkey/unipoly.hpp"

namespace gtkey {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const WeightVector& w);
Json to_json(const Permutation& p);
Json to_json(const Word& w);
/// {"rows": [...]} bottom to top.
Json to_json(const GTPattern& p);
Json to_json(const SkewGTPattern& p);
/// {"shape": [...], "rows": [[...], ...]}; skew adds "inner".
Json to_json(const SSYT& t);
Json to_json(const SkewSSYT& t);
/// {"n": 4, "cells": [[i, j], ...]}
Json to_json(const KoganFace& f);
/// [{"coeff": "p/q", "exp": [...]}, ...] in graded lex order.
Json to_json(const MultiPoly& f);
/// {"coeffs": [...] lowest degree first, "string": ..., "scaled": ...}
Json to_json(const UniPoly& p);
/// Canonical descriptor, also used as the cache key.
Json to_json(const CountedObject& o);
Json to_json(const EhrhartResult& r);

GTPattern pattern_from_json(const Json& j);
KoganFace face_from_json(const Json& j);
MultiPoly poly_from_json(const Json& j, int nvars);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace gtkey
