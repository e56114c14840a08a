#pragma once

#include <optional>
#include <string>

#include "corings/bicells.hpp"
#include "corings/descent.hpp"

namespace corings {

/// Structural error in an interchange document, with the 1-based line
/// number where parsing stopped.
struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_no, const std::string& what);
};

/// One serialisable object. Exactly the payload matching `kind` is set.
/// Quotient coordinates are never stored: maps into or out of tensor
/// products are written on the ambient tensor spaces.
struct Document {
    std::string kind;
    Field field;
    std::optional<Algebra> algebra;
    std::optional<AlgebraMap> algebra_map;
    std::optional<Bimodule> bimodule;
    std::optional<Coring> coring;
    std::optional<Comodule> comodule;
    std::optional<ModuleMorphism> module_morphism;
    std::optional<DescentDatum> descent_datum;
    std::optional<OneCellRight> one_cell;
    std::optional<TwoCell> two_cell;
};

std::string serialize_document(const Document& doc);
Document parse_document(const std::string& text);

Document document_of(const Algebra& a);
Document document_of(const AlgebraMap& f);
Document document_of(const Bimodule& m);
Document document_of(const Coring& c);
Document document_of(const Comodule& m);
Document document_of(const ModuleMorphism& m);
Document document_of(const DescentDatum& d);
Document document_of(const OneCellRight& s);
Document document_of(const TwoCell& t);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace corings
