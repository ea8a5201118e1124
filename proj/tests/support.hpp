#pragma once

#include "infhom/document.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testing_support {

inline std::string fixture_path(const std::string& name) { return std::string(INFHOM_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline infhom::AlgebraDocument load_document(const std::string& name) {
    auto r = infhom::parse_document(read_fixture(name));
    if (!r.ok()) throw std::runtime_error("fixture " + name + " does not parse");
    return *r.document;
}

inline infhom::AInftyAlgebra load_ainfty(const std::string& name) { return infhom::to_ainfty(load_document(name)); }
inline infhom::LInftyAlgebra load_linfty(const std::string& name) { return infhom::to_linfty(load_document(name)); }

inline infhom::Scalar random_scalar(std::mt19937& rng, int range = 3) {
    std::uniform_int_distribution<int> d(-range, range);
    return infhom::Scalar(d(rng));
}

inline infhom::SparseVector random_vector(std::mt19937& rng, std::size_t dim, int range = 3) {
    std::vector<std::pair<infhom::Index, infhom::Scalar>> t;
    for (std::size_t i = 0; i < dim; ++i) t.emplace_back(i, random_scalar(rng, range));
    return infhom::SparseVector::from_unsorted(std::move(t));
}

}  // namespace testing_support
