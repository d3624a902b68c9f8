#pragma once

// JSON documents for algebras, modules, crossed modules, sequences, extensions and reports.
// Output is canonical: object keys sorted, coefficients reduced to [0, p).

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "rlie/sequences.hpp"

namespace rlie::io {

using Json = nlohmann::json;

/// Malformed input; the message starts with a JSON path such as $.brackets[2].
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json load_file(const std::string& path);
std::string dump(const Json& j);  // two-space indent, trailing newline

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, Coeff p, std::size_t rows, std::size_t cols, const std::string& where);

Json to_json(const RestrictedLieAlgebra& l);
/// {"p", "dim", "basis", "brackets": [[i, j, [coeffs]]...], "pmap"}, or
/// {"standard": name, "p", "n"[, "f"]} for the standard algebras.
RestrictedLieAlgebra algebra_from_json(const Json& j, const std::string& where = "$");

/// The algebra is embedded unless include_algebra is false.
Json to_json(const BeckModule& b, bool include_algebra = true);
/// context supplies the algebra when the document has none; an embedded one must match it.
BeckModule beck_from_json(const Json& j, const RestrictedLieAlgebra* context = nullptr, const std::string& where = "$");

Json to_json(const CrossedModule& x);
CrossedModule crossed_from_json(const Json& j, const std::string& where = "$");

Json to_json(const ShortExactSequence& s);
ShortExactSequence sequence_from_json(const Json& j, const std::string& where = "$");

/// Base, module and cocycle data; the total algebra is rebuilt on load.
Json to_json(const AbelianExtension& e);
struct ExtensionData {
  RestrictedLieAlgebra base;
  BeckModule module;
  CocycleData data;
};
ExtensionData extension_from_json(const Json& j, const std::string& where = "$");

Json to_json(const Report& r);
Json to_json(const SequenceReport& r);

/// "type" field of a document, or empty.
std::string document_type(const Json& j);

}  // namespace rlie::io
