#include "liext/catalog.hpp"

namespace liext {

namespace {

Vec basis_multiple(std::size_t dim, std::size_t k, std::int64_t c, const FieldSpec& field) {
    Vec v = zero_vec(dim, field);
    v[k] = Scalar::from_int(c, field);
    return v;
}

LieAlgebra build_heisenberg3(const FieldSpec& field) {
    return LieAlgebra::from_entries("heisenberg3", field, 3,
                                    {{0, 1, basis_multiple(3, 2, 1, field)}});
}

LieAlgebra build_sl2(const FieldSpec& field) {
    std::vector<BracketEntry> entries;
    entries.push_back({0, 1, basis_multiple(3, 2, 1, field)});   // [e1,e2] = e3
    entries.push_back({0, 2, basis_multiple(3, 0, -2, field)});  // [e1,e3] = -2 e1
    entries.push_back({1, 2, basis_multiple(3, 1, 2, field)});   // [e2,e3] = 2 e2
    return LieAlgebra::from_entries("sl2", field, 3, entries);
}

// Basis order e11, e12, e21, e22; bracket [a,b] = ab - ba on matrix units.
LieAlgebra build_gl2(const FieldSpec& field) {
    std::vector<BracketEntry> entries;
    entries.push_back({0, 1, basis_multiple(4, 1, 1, field)});   // [e11,e12] = e12
    entries.push_back({0, 2, basis_multiple(4, 2, -1, field)});  // [e11,e21] = -e21
    Vec h = zero_vec(4, field);                                  // [e12,e21] = e11 - e22
    h[0] = Scalar::one(field);
    h[3] = -Scalar::one(field);
    entries.push_back({1, 2, h});
    entries.push_back({1, 3, basis_multiple(4, 1, 1, field)});   // [e12,e22] = e12
    entries.push_back({2, 3, basis_multiple(4, 2, -1, field)});  // [e21,e22] = -e21
    return LieAlgebra::from_entries("gl2", field, 4, entries);
}

LieAlgebra build_perfect5(const FieldSpec& field) {
    std::vector<BracketEntry> entries;
    entries.push_back({0, 1, basis_multiple(5, 2, 1, field)});   // [e1,e2] = e3
    entries.push_back({0, 2, basis_multiple(5, 0, -2, field)});  // [e1,e3] = -2 e1
    entries.push_back({0, 4, basis_multiple(5, 3, 1, field)});   // [e1,e5] = e4
    entries.push_back({1, 2, basis_multiple(5, 1, 2, field)});   // [e2,e3] = 2 e2
    entries.push_back({1, 3, basis_multiple(5, 4, 1, field)});   // [e2,e4] = e5
    entries.push_back({2, 3, basis_multiple(5, 3, 1, field)});   // [e3,e4] = e4
    entries.push_back({2, 4, basis_multiple(5, 4, -1, field)});  // [e3,e5] = -e5
    return LieAlgebra::from_entries("perfect5", field, 5, entries);
}

}  // namespace

LieAlgebra catalog(const std::string& name, const FieldSpec& field) {
    if (name.rfind("abelian:", 0) == 0) {
        const std::string tail = name.substr(8);
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos) {
            throw Error("bad abelian dimension in catalog name: '" + name + "'");
        }
        const std::size_t n = static_cast<std::size_t>(std::stoull(tail));
        if (n > 64) throw Error("abelian dimension too large: '" + name + "'");
        return LieAlgebra(name, field, n);
    }
    if (name == "heisenberg3") return build_heisenberg3(field);
    if (name == "sl2") return build_sl2(field);
    if (name == "gl2") return build_gl2(field);
    if (name == "perfect5") return build_perfect5(field);
    throw Error("unknown catalog algebra: '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"abelian:n", "heisenberg3", "sl2", "gl2", "perfect5"};
}

}  // namespace liext
