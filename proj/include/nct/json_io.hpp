#pragma once

#include <json.hpp>

#include "nct/grassmann.hpp"
#include "nct/group.hpp"
#include "nct/heisenberg.hpp"
#include "nct/ktheory.hpp"
#include "nct/torus_rep.hpp"

namespace nct {

using Json = nlohmann::json;

// shared wire formats: rationals as "p/q" strings, matrices as
// {"rows": r, "cols": c, "entries": [[...], ...]}

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

Json to_json(const SkewMatrix& s);
SkewMatrix skew_from_json(const Json& j);

Json to_json(const GroupElement& g);
GroupElement group_from_json(const Json& j);

Json to_json(const GeneratorToken& t);
GeneratorToken token_from_json(const Json& j);

Json to_json(const GeneratorWord& w);
GeneratorWord word_from_json(const Json& j);

Json to_json(const GrassmannElement& e);
GrassmannElement grassmann_from_json(const Json& j);

Json to_json(const KLatticeElement& x);
KLatticeElement klattice_from_json(const Json& j);

Json to_json(const RationalTheta& rt);
RationalTheta rational_theta_from_json(const Json& j);

Json to_json(const EmbeddingData& e);
Json to_json(const DomainReport& r);
Json to_json(const CounterexampleReport& r);

/// Parse with InputError on malformed documents.
Json parse_json(const std::string& text);

} // namespace nct
