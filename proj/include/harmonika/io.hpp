#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "algebra.hpp"
#include "duality.hpp"
#include "group.hpp"
#include "irreps.hpp"
#include "spectral.hpp"

namespace harmonika {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Deterministic serialization: insertion-ordered keys, floats printed with 15
// significant digits, so repeated runs are byte-identical.
// ---------------------------------------------------------------------------

namespace detail {

inline void dump_deterministic(const Json& j, std::string& out, int indent, int depth) {
    auto pad = [&](int d) { out.append(static_cast<std::size_t>(d) * indent, ' '); };
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                pad(depth + 1);
                out += Json(it.key()).dump();
                out += ": ";
                dump_deterministic(it.value(), out, indent, depth + 1);
            }
            out += "\n";
            pad(depth);
            out += "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",\n";
                first = false;
                pad(depth + 1);
                dump_deterministic(v, out, indent, depth + 1);
            }
            out += "\n";
            pad(depth);
            out += "]";
            return;
        }
        case Json::value_t::number_float: {
            char buf[40];
            double v = j.get<double>();
            if (v == 0.0) v = 0.0;  // normalize -0
            std::snprintf(buf, sizeof(buf), "%.15g", v);
            out += buf;
            return;
        }
        default: out += j.dump(); return;
    }
}

}  // namespace detail

inline std::string dump_deterministic(const Json& j, int indent = 2) {
    std::string out;
    detail::dump_deterministic(j, out, indent, 0);
    out += "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Schema helpers. Complex numbers are [re, im] pairs.
// ---------------------------------------------------------------------------

inline Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw SchemaError("expected complex number as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline Json matrix_to_json(const CMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline CMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw SchemaError("expected a non-empty matrix");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    CMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[r].size()) != cols) throw SchemaError("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

inline Json group_to_json(const GroupTable& g) {
    Json j;
    j["label"] = g.label;
    j["order"] = g.order;
    j["mul"] = g.mul;
    j["inv"] = g.inv;
    j["identity"] = g.identity;
    return j;
}

inline Json element_to_json(const AlgebraElement& f) {
    Json j;
    j["group"] = f.group;
    Json vals = Json::array();
    for (int i = 0; i < f.size(); ++i) vals.push_back(complex_to_json(f.values[i]));
    j["values"] = std::move(vals);
    return j;
}

inline AlgebraElement element_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("values"))
        throw SchemaError("algebra element JSON must have {group, values}");
    const Json& vals = j["values"];
    if (!vals.is_array() || vals.empty()) throw SchemaError("values must be a non-empty array");
    AlgebraElement f{j["group"].get<std::string>(), CVector(vals.size())};
    for (std::size_t i = 0; i < vals.size(); ++i) f.values[static_cast<int>(i)] = complex_from_json(vals[i]);
    return f;
}

inline Json blocks_to_json(const SpectralBlocks& b) {
    Json j;
    j["group"] = b.group;
    Json blocks;
    for (const auto& [label, blk] : b.blocks) blocks[label] = matrix_to_json(blk);
    j["blocks"] = std::move(blocks);
    return j;
}

inline SpectralBlocks blocks_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("blocks"))
        throw SchemaError("spectral blocks JSON must have {group, blocks}");
    SpectralBlocks b{j["group"].get<std::string>(), {}};
    for (auto it = j["blocks"].begin(); it != j["blocks"].end(); ++it)
        b.blocks[it.key()] = matrix_from_json(it.value());
    return b;
}

inline Json irrep_to_json(const Irrep& d) {
    Json j;
    j["label"] = d.label;
    j["dim"] = d.dim;
    Json mats;
    for (std::size_t e = 0; e < d.matrices.size(); ++e) mats[std::to_string(e)] = matrix_to_json(d.matrices[e]);
    j["matrices"] = std::move(mats);
    return j;
}

inline Json dual_to_json(const DualGroup& dg, const DualFunction& f) {
    Json j;
    j["group"] = f.group;
    Json vals;
    const int r = static_cast<int>(dg.factors.size());
    for (int c = 0; c < dg.size(); ++c) {
        std::string key;
        int idx = c;
        std::vector<int> kd(r);
        for (int i = r - 1; i >= 0; --i) {
            kd[i] = idx % dg.factors[i];
            idx /= dg.factors[i];
        }
        for (int i = 0; i < r; ++i) key += (i ? "," : "") + std::to_string(kd[i]);
        vals[key] = complex_to_json(f.values[c]);
    }
    j["values"] = std::move(vals);
    return j;
}

inline DualFunction dual_from_json(const DualGroup& dg, const Json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("values"))
        throw SchemaError("dual function JSON must have {group, values}");
    if (j["group"].get<std::string>() != dg.group)
        throw SchemaError("dual function group does not match");
    const Json& vals = j["values"];
    if (!vals.is_object() || static_cast<int>(vals.size()) != dg.size())
        throw SchemaError("dual function must list every character tuple once");
    DualFunction f{dg.group, CVector::Zero(dg.size())};
    const int r = static_cast<int>(dg.factors.size());
    for (auto it = vals.begin(); it != vals.end(); ++it) {
        std::istringstream ss(it.key());
        int idx = 0;
        for (int i = 0; i < r; ++i) {
            int k;
            char comma;
            if (!(ss >> k) || (i + 1 < r && !(ss >> comma))) throw SchemaError("bad character tuple key: " + it.key());
            if (k < 0 || k >= dg.factors[i]) throw SchemaError("character tuple out of range: " + it.key());
            idx = idx * dg.factors[i] + k;
        }
        f.values[idx] = complex_from_json(it.value());
    }
    return f;
}

/// DensityState/Observable files are AlgebraElement JSON with a leading role tag.
inline Json wrapped_element_to_json(const std::string& role, const AlgebraElement& f) {
    Json j;
    j["role"] = role;
    Json inner = element_to_json(f);
    j["group"] = inner["group"];
    j["values"] = inner["values"];
    return j;
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file: " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw SchemaError("invalid JSON in file: " + path);
    return j;
}

}  // namespace harmonika
