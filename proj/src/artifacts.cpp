#include "zkmatch/artifacts.hpp"

#include <json.hpp>

#include "zkmatch/digest.hpp"
#include "zkmatch/io.hpp"

namespace zkmatch {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        throw InputError(std::string("artifacts: malformed ") + what + " JSON");
    }
    return j;
}

void require_schema(const json& j, const char* expected_kind) {
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
        j["schema_version"].get<int>() != kSchemaVersion) {
        throw InputError("artifacts: unsupported schema_version");
    }
    if (!j.contains("kind") || j["kind"] != expected_kind) {
        throw InputError(std::string("artifacts: expected kind '") + expected_kind + "'");
    }
}

template <typename T>
T get_field(const json& j, const char* key) {
    if (!j.contains(key)) {
        throw InputError(std::string("artifacts: missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw InputError(std::string("artifacts: field '") + key + "' has the wrong type");
    }
}

} // namespace

std::vector<std::string> poly_to_hex(const Polynomial& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const FieldElement& c : p.coeffs()) out.push_back(to_hex(c));
    return out;
}

Polynomial poly_from_hex(const std::vector<std::string>& hex, const FieldParams& field) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(hex.size());
    for (const std::string& h : hex) coeffs.push_back(field_from_hex(h, field));
    return Polynomial(std::move(coeffs));
}

std::string CommitmentFile::header_fingerprint() const {
    std::string material = "commit-header|" + std::to_string(modulus) + "|" + mimc_fingerprint +
                           "|" + policy + "|" + std::to_string(window_len);
    return sha256_hex(material);
}

std::string CommitmentFile::to_json_text() const {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "commitment";
    j["header"]["modulus"] = std::to_string(modulus);
    j["header"]["mimc_fingerprint"] = mimc_fingerprint;
    j["header"]["policy"] = policy;
    j["header"]["window_len"] = window_len;
    j["header"]["depth"] = depth;
    j["header"]["leaf_count"] = leaf_count;
    j["root"] = root_hex;
    return j.dump(2) + "\n";
}

CommitmentFile CommitmentFile::from_json_text(const std::string& text) {
    json j = parse_or_throw(text, "commitment");
    require_schema(j, "commitment");
    if (!j.contains("header") || !j["header"].is_object()) {
        throw InputError("artifacts: commitment missing header");
    }
    const json& h = j["header"];
    CommitmentFile c;
    try {
        c.modulus = std::stoull(get_field<std::string>(h, "modulus"));
    } catch (const std::exception&) {
        throw InputError("artifacts: commitment modulus is not a decimal integer");
    }
    c.mimc_fingerprint = get_field<std::string>(h, "mimc_fingerprint");
    c.policy = get_field<std::string>(h, "policy");
    c.window_len = get_field<std::size_t>(h, "window_len");
    c.depth = get_field<std::size_t>(h, "depth");
    c.leaf_count = get_field<std::size_t>(h, "leaf_count");
    c.root_hex = get_field<std::string>(j, "root");
    return c;
}

std::string ProofFile::to_json_text() const {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "merkle_proof";
    j["pattern"] = pattern_hex;
    j["siblings"] = sibling_hexes;
    j["directions"] = directions;
    j["root"] = root_hex;
    j["header_fingerprint"] = header_fingerprint;
    return j.dump(2) + "\n";
}

ProofFile ProofFile::from_json_text(const std::string& text) {
    json j = parse_or_throw(text, "merkle proof");
    require_schema(j, "merkle_proof");
    ProofFile p;
    p.pattern_hex = get_field<std::string>(j, "pattern");
    p.sibling_hexes = get_field<std::vector<std::string>>(j, "siblings");
    p.directions = get_field<std::vector<std::uint8_t>>(j, "directions");
    for (std::uint8_t d : p.directions) {
        if (d > 1) throw InputError("artifacts: proof direction bits must be 0 or 1");
    }
    p.root_hex = get_field<std::string>(j, "root");
    p.header_fingerprint = get_field<std::string>(j, "header_fingerprint");
    return p;
}

MerkleProof ProofFile::to_proof(const FieldParams& field) const {
    MerkleProof proof;
    proof.leaf_bytes = hex_to_bytes(pattern_hex);
    for (const std::string& s : sibling_hexes) proof.siblings.push_back(field_from_hex(s, field));
    proof.directions = directions;
    proof.root = field_from_hex(root_hex, field);
    return proof;
}

ProofFile ProofFile::from_proof(const MerkleProof& proof, const std::string& header_fp) {
    ProofFile p;
    p.pattern_hex = bytes_to_hex(proof.leaf_bytes);
    for (const FieldElement& s : proof.siblings) p.sibling_hexes.push_back(to_hex(s));
    p.directions = proof.directions;
    p.root_hex = to_hex(proof.root);
    p.header_fingerprint = header_fp;
    return p;
}

std::string CertificateFile::to_json_text() const {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "poly_certificate";
    j["mode"] = (mode == CertMode::Containment) ? "containment" : "absence";
    j["modulus"] = std::to_string(modulus);
    j["rolling_fingerprint"] = rolling_fingerprint;
    j["challenge_seed"] = challenge_seed;
    j["doc_id"] = doc_id;
    j["window_len"] = window_len;
    j["h"] = h_hex;
    j["window_poly"] = window_poly_hex;
    if (mode == CertMode::Containment) {
        j["quotient"] = quotient_hex;
    } else {
        j["s"] = s_hex;
        j["t"] = t_hex;
    }
    return j.dump(2) + "\n";
}

CertificateFile CertificateFile::from_json_text(const std::string& text) {
    json j = parse_or_throw(text, "certificate");
    require_schema(j, "poly_certificate");
    CertificateFile c;
    std::string mode = get_field<std::string>(j, "mode");
    if (mode == "containment") c.mode = CertMode::Containment;
    else if (mode == "absence") c.mode = CertMode::Absence;
    else throw InputError("artifacts: certificate mode must be containment|absence");
    try {
        c.modulus = std::stoull(get_field<std::string>(j, "modulus"));
    } catch (const std::exception&) {
        throw InputError("artifacts: certificate modulus is not a decimal integer");
    }
    c.rolling_fingerprint = get_field<std::string>(j, "rolling_fingerprint");
    c.challenge_seed = get_field<std::string>(j, "challenge_seed");
    c.doc_id = get_field<std::string>(j, "doc_id");
    c.window_len = get_field<std::size_t>(j, "window_len");
    c.h_hex = get_field<std::string>(j, "h");
    c.window_poly_hex = get_field<std::vector<std::string>>(j, "window_poly");
    if (c.mode == CertMode::Containment) {
        c.quotient_hex = get_field<std::vector<std::string>>(j, "quotient");
    } else {
        c.s_hex = get_field<std::vector<std::string>>(j, "s");
        c.t_hex = get_field<std::vector<std::string>>(j, "t");
    }
    return c;
}

bool CertificateFile::verify() const {
    const FieldParams& field = FieldParams::for_modulus(modulus);
    FieldElement h = field_from_hex(h_hex, field);
    Polynomial w = poly_from_hex(window_poly_hex, field);
    if (mode == CertMode::Containment) {
        return verify_containment(w, h, poly_from_hex(quotient_hex, field), challenge_seed);
    }
    BezoutCertificate cert{poly_from_hex(s_hex, field), poly_from_hex(t_hex, field)};
    return verify_absence(w, h, cert, challenge_seed);
}

} // namespace zkmatch
