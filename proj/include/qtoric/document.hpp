#pragma once

#include "qtoric/charmap.hpp"
#include "qtoric/charsearch.hpp"
#include "qtoric/complexes.hpp"
#include "qtoric/cyclic.hpp"

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace qtoric {

/// One self-describing input. All indices in the text form are 1-based.
struct Document {
    using Payload = std::variant<SimplicialComplex, SimplePolytope, CharacteristicMap,
                                 OrientationData, AngleSpec, SearchConfig, PointConfiguration>;
    Payload payload;

    std::string kind() const;
};

/**
 * Parses one document object, or a JSON array of them.
 *
 * Malformed JSON raises ParseError with line and column; structural problems
 * raise SchemaError naming the offending field. Unknown fields are rejected.
 */
std::vector<Document> parse_documents(const std::string& text);
Document parse_document(const nlohmann::json& node);

nlohmann::json serialize(const Document& doc);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string to_text(const nlohmann::json& node);

nlohmann::json serialize_sqrt2(const Sqrt2Number& value);
Sqrt2Number parse_sqrt2(const nlohmann::json& node, const std::string& field);
/// Integers fitting in 64 bits are written as numbers, larger ones as strings.
nlohmann::json serialize_int(const BigInt& value);

}  // namespace qtoric

namespace qtoric {

/// First payload of type T among the documents, or nullptr.
template <typename T>
const T* find_payload(const std::vector<Document>& docs) {
    for (const auto& d : docs)
        if (const T* p = std::get_if<T>(&d.payload)) return p;
    return nullptr;
}

}  // namespace qtoric
