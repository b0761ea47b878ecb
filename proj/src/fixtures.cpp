#include "qhopf/fixtures.hpp"

namespace qhopf {

// n = 2 commutation tables in canonical rendered form. The xx and xv tables
// follow the explicit listings (including the two correction families); the
// vv table is the star-conjugate family oriented at its descending words.
const std::vector<std::pair<std::string, std::string>>& golden_rules(RelationFamily family) {
    static const std::vector<std::pair<std::string, std::string>> xx = {
        {"x2*x1", "q^-1*x1*x2"},
        {"x3*x1", "q^-1*x1*x3"},
        {"x3*x2", "(q^-3 - q^-1)*x1*x4 + q^-2*x2*x3"},
        {"x4*x1", "q^-2*x1*x4"},
        {"x4*x2", "q^-1*x2*x4"},
        {"x4*x3", "q^-1*x3*x4"},
    };
    static const std::vector<std::pair<std::string, std::string>> vv = {
        {"xb3*xb4", "q^-1*xb4*xb3"},
        {"xb2*xb4", "q^-1*xb4*xb2"},
        {"xb2*xb3", "(q^-3 - q^-1)*xb4*xb1 + q^-2*xb3*xb2"},
        {"xb1*xb4", "q^-2*xb4*xb1"},
        {"xb1*xb3", "q^-1*xb3*xb1"},
        {"xb1*xb2", "q^-1*xb2*xb1"},
    };
    static const std::vector<std::pair<std::string, std::string>> xv = {
        {"x1*xb4", "q^-2*xb4*x1"},
        {"x1*xb3", "q^-1*xb3*x1"},
        {"x1*xb2", "q^-1*xb2*x1"},
        {"x1*xb1", "xb1*x1"},
        {"x2*xb4", "q^-1*xb4*x2 + (q^-3 - q^-1)*xb3*x1"},
        {"x2*xb3", "q^-2*xb3*x2"},
        {"x2*xb2", "xb2*x2 + (-q^-2 + 1)*xb1*x1"},
        {"x2*xb1", "q^-1*xb1*x2"},
        {"x3*xb4", "q^-1*xb4*x3 + (-q^-5 + q^-3)*xb2*x1"},
        {"x3*xb3", "xb3*x3 + (-q^-4 + 1)*xb2*x2 + (-q^-2 + 1)*xb1*x1"},
        {"x3*xb2", "q^-2*xb2*x3"},
        {"x3*xb1", "q^-1*xb1*x3"},
        {"x4*xb4",
         "xb4*x4 + (-q^-2 + 1)*xb3*x3 + (-q^-2 + 1)*xb2*x2 + (-q^-6 + q^-4 - q^-2 + 1)*xb1*x1"},
        {"x4*xb3", "q^-1*xb3*x4 + (-q^-5 + q^-3)*xb1*x2"},
        {"x4*xb2", "q^-1*xb2*x4 + (q^-3 - q^-1)*xb1*x3"},
        {"x4*xb1", "q^-2*xb1*x4"},
    };
    static const std::vector<std::pair<std::string, std::string>> sphere = {
        {"xb1*x1", "1 - xb4*x4 - xb3*x3 - xb2*x2"},
    };
    switch (family) {
        case RelationFamily::XX: return xx;
        case RelationFamily::VV: return vv;
        case RelationFamily::XV: return xv;
        case RelationFamily::SPHERE: return sphere;
    }
    return xx;
}

}  // namespace qhopf
