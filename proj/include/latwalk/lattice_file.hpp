#ifndef LATWALK_LATTICE_FILE_HPP
#define LATWALK_LATTICE_FILE_HPP

#include "latwalk/lattice.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace latwalk {

// On-disk description of a lattice with optional named vectors, wall
// classes and candidate negative classes. Integers are preserved exactly:
// values beyond 64 bits must be written as decimal strings, and are
// emitted that way.
struct LatticeFile {
    Lattice lattice;
    std::map<std::string, Vec> vectors;
    IntMat walls;
    IntMat mbm;
};

LatticeFile parse_lattice_json(const std::string& text, const std::string& origin);
LatticeFile load_lattice_file(const std::string& path);

// exact JSON encodings
nlohmann::json json_int(const Int& v);
nlohmann::json json_rat(const Rat& v); // {"num": ..., "den": ...}
nlohmann::json json_vec(const Vec& v);
nlohmann::json json_mat(const IntMat& m);
nlohmann::json json_signature(const Signature& s);

Int int_from_json(const nlohmann::json& j, const std::string& where);
Int int_from_string(const std::string& text, const std::string& where);

} // namespace latwalk

#endif
