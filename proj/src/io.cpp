#include "icx/io.hpp"

#include <algorithm>

#include "icx/errors.hpp"

namespace icx {

namespace {

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "expected an object");
    for (const auto& item : j.items()) {
        const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return item.key() == k; });
        if (!known) throw ParseError(where, "unknown key '" + item.key() + "'");
    }
}

const Json& require_key(const Json& j, const char* key, const std::string& where) {
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(where, std::string("missing key '") + key + "'");
    return *it;
}

int as_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
    return j.get<int>();
}

MessageSet as_ids(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of message ids");
    MessageSet out;
    for (std::size_t i = 0; i < j.size(); ++i) out.insert(as_int(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

Field parse_field_flag(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("--field", "expected p=<prime> or gf2m=<m>");
    const std::string key = text.substr(0, eq);
    const std::string value = text.substr(eq + 1);
    std::uint64_t v = 0;
    try {
        std::size_t used = 0;
        v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
        throw ParseError("--field", "'" + value + "' is not a number");
    }
    if (key == "p") return Field::prime(v);
    if (key == "gf2m") return Field::gf2m(static_cast<unsigned>(v));
    throw ParseError("--field", "unknown field kind '" + key + "'");
}

Json field_to_json(const Field& f) {
    Json j;
    if (f.kind() == FieldKind::prime) {
        j["kind"] = "prime";
        j["p"] = f.characteristic();
    } else {
        j["kind"] = "gf2m";
        j["m"] = f.degree();
        if (f.poly() != default_gf2_poly(f.degree())) j["poly"] = f.poly();
    }
    return j;
}

Field field_from_json(const Json& j) {
    reject_unknown_keys(j, {"kind", "p", "m", "poly"}, "field");
    const Json& kind = require_key(j, "kind", "field");
    if (!kind.is_string()) throw ParseError("field.kind", "expected a string");
    if (kind == "prime") return Field::prime(static_cast<std::uint64_t>(as_int(require_key(j, "p", "field"), "field.p")));
    if (kind == "gf2m") {
        const auto m = static_cast<unsigned>(as_int(require_key(j, "m", "field"), "field.m"));
        if (j.contains("poly")) {
            if (!j["poly"].is_number_unsigned()) throw ParseError("field.poly", "expected a non-negative integer");
            return Field::gf2m(m, j["poly"].get<std::uint64_t>());
        }
        return Field::gf2m(m);
    }
    throw ParseError("field.kind", "unknown field kind '" + kind.get<std::string>() + "'");
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of rows");
    if (j.empty()) return Matrix(f, rows, 0);
    std::vector<std::vector<std::int64_t>> data;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const std::string rw = where + "[" + std::to_string(r) + "]";
        if (!j[r].is_array()) throw ParseError(rw, "expected a row array");
        std::vector<std::int64_t> row;
        for (std::size_t c = 0; c < j[r].size(); ++c) {
            if (!j[r][c].is_number_integer()) throw ParseError(rw, "expected integer entries");
            row.push_back(j[r][c].get<std::int64_t>());
        }
        data.push_back(std::move(row));
    }
    try {
        return Matrix::from_rows(f, data);
    } catch (const Error& e) {
        throw ParseError(where, e.what());
    }
}

Json instance_to_json(const Instance& inst) {
    Json j;
    j["messages"] = inst.num_messages;
    if (inst.family) {
        const FamilyTag& t = *inst.family;
        Json fam;
        fam["kind"] = family_kind_name(t.kind);
        switch (t.kind) {
            case FamilyKind::neighboring_antidotes:
            case FamilyKind::neighboring_interference:
                fam["K"] = t.K;
                fam["U"] = t.U;
                fam["D"] = t.D;
                break;
            case FamilyKind::x_network:
                fam["K"] = t.K;
                fam["L"] = t.L;
                break;
            case FamilyKind::custom: break;
        }
        j["family"] = std::move(fam);
    }
    Json dests = Json::array();
    for (const Destination& d : inst.destinations) {
        Json dj;
        dj["id"] = d.id;
        dj["wants"] = Json(std::vector<int>(d.wants.begin(), d.wants.end()));
        dj["has"] = Json(std::vector<int>(d.has.begin(), d.has.end()));
        dests.push_back(std::move(dj));
    }
    j["destinations"] = std::move(dests);
    return j;
}

Instance instance_from_json(const Json& j, bool check) {
    reject_unknown_keys(j, {"messages", "family", "destinations"}, "instance");
    Instance inst;
    inst.num_messages = as_int(require_key(j, "messages", "instance"), "messages");
    if (j.contains("family")) {
        const Json& fj = j["family"];
        reject_unknown_keys(fj, {"kind", "K", "U", "D", "L"}, "family");
        const Json& kind = require_key(fj, "kind", "family");
        if (!kind.is_string()) throw ParseError("family.kind", "expected a string");
        FamilyTag tag;
        tag.kind = parse_family_kind(kind.get<std::string>());
        for (const char* key : {"K", "U", "D", "L"}) {
            if (!fj.contains(key)) continue;
            const int v = as_int(fj[key], std::string("family.") + key);
            (key[0] == 'K' ? tag.K : key[0] == 'U' ? tag.U : key[0] == 'D' ? tag.D : tag.L) = v;
        }
        if (tag.kind == FamilyKind::neighboring_antidotes || tag.kind == FamilyKind::neighboring_interference)
            tag.L = 1;
        inst.family = tag;
    }
    const Json& dests = require_key(j, "destinations", "instance");
    if (!dests.is_array()) throw ParseError("destinations", "expected an array");
    for (std::size_t i = 0; i < dests.size(); ++i) {
        const std::string where = "destinations[" + std::to_string(i) + "]";
        reject_unknown_keys(dests[i], {"id", "wants", "has"}, where);
        Destination d;
        d.id = as_int(require_key(dests[i], "id", where), where + ".id");
        d.wants = as_ids(require_key(dests[i], "wants", where), where + ".wants");
        d.has = dests[i].contains("has") ? as_ids(dests[i]["has"], where + ".has") : MessageSet{};
        inst.destinations.push_back(std::move(d));
    }
    const auto violations = check ? validate(inst) : std::vector<Violation>{};
    if (!violations.empty()) {
        const Violation& v = violations.front();
        throw ParseError("destination " + std::to_string(v.destination), v.what);
    }
    return inst;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
        throw ParseError("line " + std::to_string(line), "malformed JSON");
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string serialize_instance(const Instance& inst) { return dump(instance_to_json(inst)); }

Instance parse_instance(const std::string& text) { return instance_from_json(parse_json_text(text)); }

Json scheme_to_json(const LinearScheme& s) {
    Json j;
    j["field"] = field_to_json(s.field);
    j["n"] = s.n;
    Json v = Json::object();
    for (const auto& [m, mat] : s.V) v[std::to_string(m)] = matrix_to_json(mat);
    j["V"] = std::move(v);
    if (!s.U.empty()) {
        Json u = Json::object();
        for (const auto& [key, mat] : s.U) u[std::to_string(key.first) + "@" + std::to_string(key.second)] = matrix_to_json(mat);
        j["U"] = std::move(u);
    }
    return j;
}

LinearScheme scheme_from_json(const Json& j) {
    reject_unknown_keys(j, {"field", "n", "V", "U"}, "scheme");
    const Field f = field_from_json(require_key(j, "field", "scheme"));
    const int n = as_int(require_key(j, "n", "scheme"), "n");
    if (n < 1) throw ParseError("n", "block length must be >= 1");
    LinearScheme s(f, static_cast<std::size_t>(n));
    const Json& v = require_key(j, "V", "scheme");
    if (!v.is_object()) throw ParseError("V", "expected an object keyed by message id");
    auto parse_id = [](const std::string& text, const std::string& where) {
        try {
            std::size_t used = 0;
            const int id = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return id;
        } catch (const std::exception&) {
            throw ParseError(where, "bad id '" + text + "'");
        }
    };
    for (const auto& item : v.items()) {
        const std::string where = "V." + item.key();
        s.V.emplace(parse_id(item.key(), where), matrix_from_json(f, item.value(), s.n, where));
    }
    if (j.contains("U")) {
        const Json& u = j["U"];
        if (!u.is_object()) throw ParseError("U", "expected an object keyed by m@k");
        for (const auto& item : u.items()) {
            const std::string where = "U." + item.key();
            const auto at = item.key().find('@');
            if (at == std::string::npos) throw ParseError(where, "key must be m@k");
            const int m = parse_id(item.key().substr(0, at), where);
            const int k = parse_id(item.key().substr(at + 1), where);
            s.U.emplace(std::make_pair(m, k), matrix_from_json(f, item.value(), 0, where));
        }
    }
    // Empty U rows carry no column count; give them n columns.
    for (auto& [key, mat] : s.U)
        if (mat.rows() == 0) mat = Matrix(f, 0, s.n);
    return s;
}

std::string serialize_scheme(const LinearScheme& s) { return dump(scheme_to_json(s)); }

LinearScheme parse_scheme(const std::string& text) { return scheme_from_json(parse_json_text(text)); }

}  // namespace icx
