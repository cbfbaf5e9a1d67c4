#ifndef CORRHOM_JSON_IO_HH
#define CORRHOM_JSON_IO_HH

#include <corrhom/model.hh>
#include <corrhom/transforms.hh>

#include <string>
#include <vector>

namespace corrhom
{
    // TargetGraph wire format:
    //   {"vertices":[ids],"edges":[[id,id],...],"side":{"id":"black"|"white",...}?}
    TargetGraph parse_target(const std::string & text);
    std::string emit_target(const TargetGraph & t);

    // Instance wire format:
    //   {"target":<TargetGraph>,"gVertices":[ids],
    //    "edges":[{"u":id,"v":id,"pi":{hid:hid,...},"rho":{...}},...],
    //    "lists":{gid:[hids]}?,"mode":"standard"|"by-side","gSide":{...}?}
    // Edge order and repeated records are significant (parallel edges).
    Instance parse_instance(const std::string & text);
    std::string emit_instance(const Instance & inst);

    // Formula wire format: {"variables":[names],"clauses":[[v,v,v],...]}
    // with exactly-one-true semantics per clause.
    CnfFormula parse_cnf(const std::string & text);

    // A plain simple graph in the TargetGraph format, loops and sides
    // rejected; used as 3-colourability input.
    TargetGraph parse_plain_graph(const std::string & text);

    std::string witness_json(const Instance & inst, const Assignment & f);
}

#endif
