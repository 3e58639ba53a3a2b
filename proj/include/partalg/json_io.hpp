#ifndef PARTALG_JSON_IO_HPP
#define PARTALG_JSON_IO_HPP

#include <json.hpp>

#include "partalg/potts.hpp"
#include "partalg/reptheory.hpp"

namespace partalg {

using Json = nlohmann::ordered_json;

Json to_json(const SetPartition& p);  // {"n","m","blocks":[[1,2,"3'"],...]}
SetPartition set_partition_from_json(const Json& j);
Json to_json(const Diagram& d);
Json to_json(const Poly& p);          // {"var":"delta","coeffs":["0","-1","1"]}
Poly poly_from_json(const Json& j);
Json to_json(const Factorization& f);
Json to_json(const SmithForm& s);
Json to_json(const SparseIntMatrix& m);  // {"rows","cols","coo":[[r,c,"v"],...]}
Json to_json(const LinComb& x);
Json to_json(const GramReport& r);
Json to_json(const BratelliGraph& g);
Json to_json(const SemisimpleReport& r);
Json to_json(const OddEvenResult& r, int n);

std::string gram_entry_token(const Poly& entry);  // "d^2", "d", "1", "0"
std::string gram_csv(const GramMatrix& g);
std::string bratelli_dot(const BratelliGraph& g);

}  // namespace partalg

#endif
