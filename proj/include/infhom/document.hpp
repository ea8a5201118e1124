#pragma once

#include "infhom/constructions.hpp"

#include <string_view>

namespace infhom {

enum class AlgebraKind { associative, dga, ainfty, linfty };
std::string to_string(AlgebraKind k);
std::optional<AlgebraKind> parse_kind(std::string_view s);

struct OpEntry {
    std::size_t arity = 0;
    std::vector<std::string> inputs;
    std::vector<std::pair<Scalar, std::string>> output;
    friend bool operator==(const OpEntry&, const OpEntry&) = default;
};

/// One schema for all kinds. Degrees are unsuspended; every operation of
/// arity k raises the total degree of its inputs by k - 2. For associative
/// and dga documents the ops are the ordinary product (arity 2) and the
/// differential (arity 1); for ainfty and linfty documents they are the
/// suspended structure maps m_k and l_k.
struct AlgebraDocument {
    std::string name;
    AlgebraKind kind = AlgebraKind::associative;
    std::vector<BasisElement> basis;
    std::optional<std::string> unit;
    std::vector<OpEntry> ops;
    std::optional<WeightCap> caps;
    friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

struct Diagnostic {
    std::string pointer;  // JSON pointer of the offending value
    std::size_t line = 0;
    std::size_t column = 0;
    std::string message;
    std::string format() const;
};

struct ParseResult {
    std::optional<AlgebraDocument> document;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return document.has_value() && diagnostics.empty(); }
};

ParseResult parse_document(std::string_view text);
std::string serialize_document(const AlgebraDocument& doc);

/// Builders. Associative and dga documents go through the axiom checks of
/// from_associative / from_dga and throw AxiomViolation on failure.
std::shared_ptr<const GradedSpace> document_space(const AlgebraDocument& doc);
AssociativeTable to_associative_table(const AlgebraDocument& doc);
AInftyAlgebra to_ainfty(const AlgebraDocument& doc);
LInftyAlgebra to_linfty(const AlgebraDocument& doc);

AlgebraDocument from_ainfty(const AInftyAlgebra& a);
AlgebraDocument from_linfty(const LInftyAlgebra& l);

}  // namespace infhom
