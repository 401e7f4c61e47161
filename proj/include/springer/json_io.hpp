#pragma once

#include <json.hpp>

#include "springer/circle.hpp"
#include "springer/cup_diagram.hpp"
#include "springer/domino.hpp"
#include "springer/proj_line.hpp"
#include "springer/spaltenstein.hpp"
#include "springer/sphere.hpp"
#include "springer/subspace.hpp"
#include "springer/syt.hpp"
#include "springer/verify.hpp"

namespace springer {

using Json = nlohmann::ordered_json;

// Scalars as strings "a/b+c/d*i"; matrices and subspaces as arrays of them.
Json to_json(const GaussianRational& z);
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

// {m, cups:[{from,to,dot}], rays:[{at,dot}]}
Json to_json(const CupDiagram& d);
CupDiagram cup_diagram_from_json(const Json& j);

// {shape:[a,b], flavor:"D"|"C", dominoes:[{label, cells:[[r,c],[r,c]], sign?}]}
Json to_json(const SignedDominoTableau& t);
SignedDominoTableau tableau_from_json(const Json& j);

Json to_json(const StandardYoungTableau& t);
StandardYoungTableau syt_from_json(const Json& j);

Json to_json(const ProjLine& l);
ProjLine proj_line_from_json(const Json& j);

// Flags as lists of spaces, each a list of basis vectors of scalar strings.
Json to_json(const Flag& flag);
Flag flag_from_json(const Json& j);

Json to_json(const IntersectionResult& r);
Json to_json(const CircleDiagram& c);
Json to_json(const IntersectionGraph& g);

Json to_json(const SolveResult& r);
Json to_json(const VerifyReport& r);

}  // namespace springer
