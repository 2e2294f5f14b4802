#include "qcorr/state_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "qcorr/errors.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string &pointer, const std::string &what) {
    throw SchemaError(pointer + ": " + what);
}

std::string element_pointer(const std::string &pointer, std::size_t index) {
    return pointer + "/" + std::to_string(index);
}

double require_number(const json &node, const std::string &pointer) {
    if (!node.is_number()) {
        schema_error(pointer, "expected a number");
    }
    return node.get<double>();
}

std::size_t require_index(const json &node, const std::string &pointer) {
    if (!node.is_number_integer() || node.get<long long>() < 0) {
        schema_error(pointer, "expected a non-negative integer");
    }
    return node.get<std::size_t>();
}

Complex require_complex(const json &node, const std::string &pointer) {
    if (!node.is_array() || node.size() != 2) {
        schema_error(pointer, "expected an [re, im] pair");
    }
    return {require_number(node[0], element_pointer(pointer, 0)),
            require_number(node[1], element_pointer(pointer, 1))};
}

std::pair<std::size_t, std::size_t> parse_dims(const json &doc) {
    if (!doc.contains("dims")) {
        schema_error("/dims", "missing required field");
    }
    const json &dims = doc["dims"];
    if (!dims.is_array() || dims.size() != 2) {
        schema_error("/dims", "expected [dimA, dimB]");
    }
    std::size_t out[2];
    for (std::size_t k = 0; k < 2; ++k) {
        const std::string pointer = element_pointer("/dims", k);
        if (!dims[k].is_number_integer() || dims[k].get<long long>() < 1) {
            schema_error(pointer, "expected a positive integer");
        }
        out[k] = dims[k].get<std::size_t>();
        if (out[k] > kMaxSubsystemDim) {
            std::ostringstream msg;
            msg << "subsystem dimension must be between 1 and " << kMaxSubsystemDim << ", got "
                << out[k];
            throw ValidationError(msg.str());
        }
    }
    return {out[0], out[1]};
}

BipartiteState parse_mixture(const json &body, std::size_t dim_a, std::size_t dim_b) {
    if (!body.is_array() || body.empty()) {
        schema_error("/mixture", "expected a non-empty array of {w, i, j} terms");
    }
    std::vector<MixtureTerm> terms;
    terms.reserve(body.size());
    for (std::size_t k = 0; k < body.size(); ++k) {
        const std::string pointer = element_pointer("/mixture", k);
        const json &entry = body[k];
        if (!entry.is_object()) {
            schema_error(pointer, "expected an object {w, i, j}");
        }
        for (const char *key : {"w", "i", "j"}) {
            if (!entry.contains(key)) {
                schema_error(pointer + "/" + key, "missing required field");
            }
        }
        for (const auto &[key, value] : entry.items()) {
            if (key != "w" && key != "i" && key != "j") {
                schema_error(pointer + "/" + key, "unknown field");
            }
        }
        terms.push_back({require_number(entry["w"], pointer + "/w"),
                         require_index(entry["i"], pointer + "/i"),
                         require_index(entry["j"], pointer + "/j")});
    }

    // Rebuild the diagonal matrix directly: the density-matrix validation
    // then reports the measured violation for out-of-balance weights
    // ("unit trace") or negative weights ("positive semidefinite").
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (terms[k].i >= dim_a || terms[k].j >= dim_b) {
            std::ostringstream msg;
            msg << "mixture term (" << terms[k].i << ", " << terms[k].j
                << ") out of range for dims " << dim_a << " x " << dim_b;
            throw ValidationError(msg.str());
        }
        for (std::size_t l = k + 1; l < terms.size(); ++l) {
            if (terms[k].i == terms[l].i && terms[k].j == terms[l].j) {
                std::ostringstream msg;
                msg << "duplicate mixture term for (" << terms[k].i << ", " << terms[k].j << ")";
                throw ValidationError(msg.str());
            }
        }
    }
    ComplexMatrix m(dim_a * dim_b);
    for (const MixtureTerm &term : terms) {
        const std::size_t flat = term.i * dim_b + term.j;
        m(flat, flat) = Complex(term.weight, 0.0);
    }
    return BipartiteState(dim_a, dim_b, DensityMatrix(std::move(m)));
}

BipartiteState parse_matrix(const json &body, std::size_t dim_a, std::size_t dim_b) {
    const std::size_t dim = dim_a * dim_b;
    if (!body.is_array() || body.size() != dim) {
        std::ostringstream msg;
        msg << "expected " << dim << " rows";
        schema_error("/matrix", msg.str());
    }
    std::vector<Complex> entries;
    entries.reserve(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::string row_pointer = element_pointer("/matrix", i);
        const json &row = body[i];
        if (!row.is_array() || row.size() != dim) {
            std::ostringstream msg;
            msg << "expected " << dim << " entries";
            schema_error(row_pointer, msg.str());
        }
        for (std::size_t j = 0; j < dim; ++j) {
            entries.push_back(require_complex(row[j], element_pointer(row_pointer, j)));
        }
    }
    return BipartiteState(dim_a, dim_b, DensityMatrix(ComplexMatrix(dim, std::move(entries))));
}

ProjectiveBasis parse_basis(const json &body, std::size_t dim, const std::string &key) {
    const std::string pointer = "/" + key;
    if (!body.is_array() || body.size() != dim) {
        std::ostringstream msg;
        msg << "expected " << dim << " basis columns";
        schema_error(pointer, msg.str());
    }
    ComplexMatrix columns(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const std::string col_pointer = element_pointer(pointer, col);
        const json &column = body[col];
        if (!column.is_array() || column.size() != dim) {
            std::ostringstream msg;
            msg << "expected " << dim << " [re, im] components";
            schema_error(col_pointer, msg.str());
        }
        for (std::size_t row = 0; row < dim; ++row) {
            columns(row, col) = require_complex(column[row], element_pointer(col_pointer, row));
        }
    }
    try {
        return ProjectiveBasis(std::move(columns));
    } catch (const ValidationError &e) {
        throw ValidationError(key + ": " + e.what());
    }
}

json fixture_term(double w, int i, int j) {
    return json{{"w", w}, {"i", i}, {"j", j}};
}

}  // namespace

StateSpec parse_state_json(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        schema_error("/", "expected a JSON object");
    }
    for (const auto &[key, value] : doc.items()) {
        if (key != "dims" && key != "mixture" && key != "matrix" && key != "basisA" &&
            key != "basisB") {
            schema_error("/" + key, "unknown field");
        }
    }

    const auto [dim_a, dim_b] = parse_dims(doc);

    const bool has_mixture = doc.contains("mixture");
    const bool has_matrix = doc.contains("matrix");
    if (has_mixture == has_matrix) {
        schema_error("/", "exactly one of \"mixture\" and \"matrix\" must be present");
    }

    BipartiteState state = has_mixture ? parse_mixture(doc["mixture"], dim_a, dim_b)
                                       : parse_matrix(doc["matrix"], dim_a, dim_b);
    ProjectiveBasis basis_a = doc.contains("basisA") ? parse_basis(doc["basisA"], dim_a, "basisA")
                                                     : ProjectiveBasis::computational(dim_a);
    ProjectiveBasis basis_b = doc.contains("basisB") ? parse_basis(doc["basisB"], dim_b, "basisB")
                                                     : ProjectiveBasis::computational(dim_b);

    return StateSpec{std::move(state), std::move(basis_a), std::move(basis_b),
                     has_mixture ? StateBody::Mixture : StateBody::Matrix};
}

StateSpec parse_state_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failure on " + path.string());
    }
    try {
        return parse_state_json(buffer.str());
    } catch (const SchemaError &e) {
        throw SchemaError(path.string() + ": " + e.what());
    } catch (const ValidationError &e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

std::string qubit_fixture_json(double alpha) {
    json doc;
    doc["dims"] = {2, 2};
    doc["mixture"] = json::array({fixture_term(alpha, 0, 0), fixture_term(1.0 - alpha, 1, 1)});
    return doc.dump(2) + "\n";
}

std::string qutrit_fixture_json() {
    const double third = 1.0 / 3.0;
    json doc;
    doc["dims"] = {3, 3};
    doc["mixture"] = json::array(
        {fixture_term(third, 1, 1), fixture_term(third, 2, 0), fixture_term(third, 2, 2)});
    return doc.dump(2) + "\n";
}

std::vector<std::filesystem::path> write_fixture_files(const std::filesystem::path &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
    }
    const std::vector<std::pair<std::filesystem::path, std::string>> files = {
        {dir / "qubit_alpha.json", qubit_fixture_json(0.3)},
        {dir / "qutrit.json", qutrit_fixture_json()},
    };
    std::vector<std::filesystem::path> written;
    for (const auto &[path, contents] : files) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << contents;
        if (!out) {
            throw IoError("cannot write " + path.string());
        }
        written.push_back(path);
    }
    return written;
}

}  // namespace qcorr
