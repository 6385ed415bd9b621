// Copyright (c) lorentz-polar contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cctype>
#include <cstdio>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lorentz/core.hpp"
#include "lorentz/decompose.hpp"
#include "lorentz/errors.hpp"
#include "lorentz/matrix.hpp"

namespace lorentz::io {

enum class Format { json, text };

/// Numbers are serialized with 17 significant digits in both formats, enough
/// for a lossless double round trip.
inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// Matrix input: JSON objects {"matrix": [[... 4 rows of 4 ...]]}, bare JSON
// 2-d arrays, or whitespace-separated 16-number plain text, row-major, time
// row first. Streams may hold any number of matrices.
// ---------------------------------------------------------------------------

namespace detail {

inline Mat4 matrix_from_json(const nlohmann::json& rows) {
    if (!rows.is_array() || rows.size() != 4)
        throw ParseError("\"matrix\" must be an array of 4 rows");
    Mat4 m;
    for (int r = 0; r < 4; ++r) {
        const auto& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || row.size() != 4)
            throw ParseError("matrix row " + std::to_string(r) + " must hold 4 numbers");
        for (int c = 0; c < 4; ++c) {
            const auto& cell = row[static_cast<std::size_t>(c)];
            if (!cell.is_number()) throw ParseError("matrix entries must be numbers");
            m(r, c) = cell.get<double>();
        }
    }
    return m;
}

inline bool looks_like_matrix_rows(const nlohmann::json& j) {
    return j.is_array() && j.size() == 4 && j[0].is_array();
}

inline int skip_whitespace(std::istream& in) {
    int ch = in.peek();
    while (ch != EOF && std::isspace(ch)) {
        in.get();
        ch = in.peek();
    }
    return ch;
}

}  // namespace detail

inline std::vector<Mat4> read_matrices(std::istream& in) {
    std::vector<Mat4> matrices;
    const int first = detail::skip_whitespace(in);
    if (first == EOF) throw ParseError("empty input, expected a matrix");

    if (first == '{' || first == '[') {
        try {
            while (detail::skip_whitespace(in) != EOF) {
                nlohmann::json j;
                in >> j;
                if (j.is_object()) {
                    if (!j.contains("matrix")) throw ParseError("object is missing \"matrix\"");
                    matrices.push_back(detail::matrix_from_json(j["matrix"]));
                } else if (detail::looks_like_matrix_rows(j)) {
                    matrices.push_back(detail::matrix_from_json(j));
                } else {
                    throw ParseError("expected {\"matrix\": ...} or a 4x4 array");
                }
            }
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(e.what());
        }
        return matrices;
    }

    // plain text: any whitespace-separated run of 16 numbers per matrix
    std::vector<double> numbers;
    double value = 0.0;
    while (in >> value) numbers.push_back(value);
    if (!in.eof()) throw ParseError("invalid numeric token in matrix input");
    if (numbers.empty() || numbers.size() % 16 != 0)
        throw ParseError("expected a multiple of 16 numbers, got " +
                         std::to_string(numbers.size()));
    for (std::size_t base = 0; base < numbers.size(); base += 16) {
        Mat4 m;
        for (std::size_t i = 0; i < 16; ++i) m.e[i] = numbers[base + i];
        matrices.push_back(m);
    }
    return matrices;
}

inline Mat4 read_matrix(std::istream& in) {
    const std::vector<Mat4> all = read_matrices(in);
    if (all.size() != 1)
        throw ParseError("expected exactly one matrix, got " + std::to_string(all.size()));
    return all.front();
}

inline std::string format_matrix(const Mat4& m, Format format) {
    std::ostringstream out;
    if (format == Format::json) {
        out << "{\"matrix\": [";
        for (int r = 0; r < 4; ++r) {
            out << (r ? ", [" : "[");
            for (int c = 0; c < 4; ++c) out << (c ? ", " : "") << format_double(m(r, c));
            out << "]";
        }
        out << "]}\n";
    } else {
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) out << (c ? " " : "") << format_double(m(r, c));
            out << "\n";
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Rotation input: raw 3x3 or axis-angle, auto-detected by shape.
// ---------------------------------------------------------------------------

struct RotationInput {
    bool axis_angle = false;
    Mat3 matrix = Mat3::identity();
    Vec3 axis{0.0, 0.0, 1.0};
    double angle = 0.0;

    RotationMatrix build(double tol = kGroupTol) const {
        return axis_angle ? RotationMatrix::from_axis_angle(axis, angle)
                          : RotationMatrix::from_matrix(matrix, tol);
    }
};

/// 9 numbers = row-major 3x3; 4 numbers = axis (3) + angle in radians.
inline RotationInput rotation_from_numbers(const std::vector<double>& n) {
    RotationInput r;
    if (n.size() == 9) {
        for (std::size_t i = 0; i < 9; ++i) r.matrix.e[i] = n[i];
    } else if (n.size() == 4) {
        r.axis_angle = true;
        r.axis = {n[0], n[1], n[2]};
        r.angle = n[3];
    } else {
        throw ParseError("rotation needs 9 numbers (3x3) or 4 numbers (axis + angle), got " +
                         std::to_string(n.size()));
    }
    return r;
}

inline std::vector<double> parse_number_list(const std::string& text) {
    std::istringstream in(text);
    std::vector<double> numbers;
    double value = 0.0;
    while (in >> value) numbers.push_back(value);
    if (!in.eof()) throw ParseError("invalid number in \"" + text + "\"");
    return numbers;
}

// ---------------------------------------------------------------------------
// Factor records: what `decompose` writes and `compose` reads back.
// ---------------------------------------------------------------------------

struct FactorRecord {
    RotationInput rotation;
    Vec3 velocity;
    std::optional<FactorOrder> order;
};

inline const char* order_tag(FactorOrder order) {
    return order == FactorOrder::RotationBoost ? "rb" : "br";
}

inline FactorOrder parse_order_tag(const std::string& tag) {
    if (tag == "rb" || tag == "rotation-boost") return FactorOrder::RotationBoost;
    if (tag == "br" || tag == "boost-rotation") return FactorOrder::BoostRotation;
    throw ParseError("unknown order \"" + tag + "\", expected rb or br");
}

namespace detail {

inline RotationInput rotation_from_json(const nlohmann::json& j) {
    RotationInput r;
    if (j.is_object()) {
        if (!j.contains("axis") || !j.contains("angle"))
            throw ParseError("rotation object needs \"axis\" and \"angle\"");
        const auto& axis = j["axis"];
        if (!axis.is_array() || axis.size() != 3)
            throw ParseError("rotation \"axis\" must hold 3 numbers");
        r.axis_angle = true;
        r.axis = {axis[0].get<double>(), axis[1].get<double>(), axis[2].get<double>()};
        r.angle = j["angle"].get<double>();
        return r;
    }
    if (j.is_array() && j.size() == 3 && j[0].is_array()) {
        for (int i = 0; i < 3; ++i) {
            const auto& row = j[static_cast<std::size_t>(i)];
            if (!row.is_array() || row.size() != 3)
                throw ParseError("rotation rows must hold 3 numbers");
            for (int k = 0; k < 3; ++k) r.matrix(i, k) = row[static_cast<std::size_t>(k)].get<double>();
        }
        return r;
    }
    if (j.is_array() && j.size() == 4) {
        r.axis_angle = true;
        r.axis = {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
        r.angle = j[3].get<double>();
        return r;
    }
    throw ParseError("rotation must be a 3x3 array, [ax, ay, az, angle], or {axis, angle}");
}

}  // namespace detail

inline std::vector<FactorRecord> read_factor_records(std::istream& in) {
    std::vector<FactorRecord> records;
    const int first = detail::skip_whitespace(in);
    if (first == EOF) throw ParseError("empty input, expected factor records");
    if (first != '{')
        throw ParseError("factor records must be JSON objects (pipe with --format json)");
    try {
        while (detail::skip_whitespace(in) != EOF) {
            nlohmann::json j;
            in >> j;
            if (!j.is_object() || !j.contains("rotation") || !j.contains("velocity"))
                throw ParseError("factor record needs \"rotation\" and \"velocity\"");
            FactorRecord record;
            record.rotation = detail::rotation_from_json(j["rotation"]);
            const auto& vel = j["velocity"];
            if (!vel.is_array() || vel.size() != 3)
                throw ParseError("\"velocity\" must hold 3 numbers");
            record.velocity = {vel[0].get<double>(), vel[1].get<double>(), vel[2].get<double>()};
            if (j.contains("order")) record.order = parse_order_tag(j["order"].get<std::string>());
            records.push_back(record);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    return records;
}

inline std::string format_factor_report(const CartanFactors& f, double reassembly_residual,
                                        Format format) {
    const Mat3& r = f.rotation.matrix();
    const Vec3& v = f.boost.velocity();
    std::ostringstream out;
    if (format == Format::json) {
        out << "{\"order\": \"" << order_tag(f.order) << "\", \"rotation\": [";
        for (int i = 0; i < 3; ++i) {
            out << (i ? ", [" : "[");
            for (int j = 0; j < 3; ++j) out << (j ? ", " : "") << format_double(r(i, j));
            out << "]";
        }
        out << "], \"velocity\": [" << format_double(v.x) << ", " << format_double(v.y) << ", "
            << format_double(v.z) << "], \"gamma\": " << format_double(f.boost.gamma())
            << ", \"reassembly_residual\": " << format_double(reassembly_residual) << "}\n";
    } else {
        out << "order: " << (f.order == FactorOrder::RotationBoost ? "rotation-boost" : "boost-rotation")
            << "\nrotation:\n";
        for (int i = 0; i < 3; ++i) {
            out << " ";
            for (int j = 0; j < 3; ++j) out << " " << format_double(r(i, j));
            out << "\n";
        }
        out << "velocity: " << format_double(v.x) << " " << format_double(v.y) << " "
            << format_double(v.z) << "\ngamma: " << format_double(f.boost.gamma())
            << "\nreassembly residual: " << format_double(reassembly_residual) << "\n";
    }
    return out.str();
}

inline std::string format_verification_report(std::size_t index, const VerificationReport& report,
                                              Format format) {
    std::ostringstream out;
    if (format == Format::json) {
        out << "{\"index\": " << index
            << ", \"rotation_factor_residual\": " << format_double(report.rotation_factor_residual)
            << ", \"boost_factor_residual\": " << format_double(report.boost_factor_residual)
            << ", \"group_residual\": " << format_double(report.group_residual)
            << ", \"reassembly_residual\": " << format_double(report.reassembly_residual)
            << ", \"verdict\": " << (report.verdict ? "true" : "false") << "}\n";
    } else {
        char line[256];
        std::snprintf(line, sizeof(line),
                      "matrix %zu: rotation_factor=%.3e boost_factor=%.3e group=%.3e "
                      "reassembly=%.3e verdict=%s\n",
                      index, report.rotation_factor_residual, report.boost_factor_residual,
                      report.group_residual, report.reassembly_residual,
                      report.verdict ? "pass" : "FAIL");
        out << line;
    }
    return out.str();
}

}  // namespace lorentz::io
