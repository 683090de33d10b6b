#pragma once

#include "qsnake/qlaurent.hpp"
#include "qsnake/torus.hpp"

#include <json.hpp>

namespace qsnake {

/// Integers that fit in int64 are JSON numbers, larger ones decimal strings.
nlohmann::json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

/// [[doubled_exponent, coefficient], ...] sorted by exponent.
nlohmann::json to_json(const QLaurent& p);
QLaurent qlaurent_from_json(const nlohmann::json& j);

/// {"m": m, "lambda": [[...]], "terms": [{"exp": [...], "coeff": [[e, c], ...]}, ...]}
/// with terms in the lexicographic monomial order.
nlohmann::json to_json(const TorusElement& x);
TorusElement torus_from_json(const nlohmann::json& j);

}  // namespace qsnake
