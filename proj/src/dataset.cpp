#include "braidforge/dataset.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "braidforge/dsl.hpp"
#include "braidforge/regeneration.hpp"

namespace braidforge {

std::string data_dir() {
    if (const char* env = std::getenv("BRAIDFORGE_DATA")) return env;
#ifdef BRAIDFORGE_SOURCE_DATA_DIR
    return BRAIDFORGE_SOURCE_DATA_DIR;
#else
    return "data";
#endif
}

std::string read_data_file(const std::string& relative) {
    std::string path = data_dir() + "/" + relative;
    std::ifstream in(path);
    if (!in) throw braid_error("cannot open data file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

IncidenceModel load_incidence(const std::string& name) {
    return parse_incidence(read_data_file(name + ".inc"));
}

Factorization load_phi(const std::string& dataset) {
    IncidenceModel m = load_incidence(dataset);
    if (dataset == "magician") return assemble_phi2(m);
    if (dataset == "pillow") return assemble_phi1(m);
    throw braid_error("unknown dataset " + dataset);
}

Factorization load_phi_prebranch(const std::string& dataset) {
    IncidenceModel m = load_incidence(dataset);
    if (dataset == "magician") return assemble_phi2_prebranch(m);
    throw braid_error("pre-branch assembly only applies to the magician dataset");
}

}  // namespace braidforge
