#include "grid.hpp"

#include "output.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace bpswf::cli {

namespace {

std::vector<int> parse_counts(const std::string &text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, 'x')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != item.size() || item.empty() || value < 1)
            throw UsageError("bad grid resolution '" + text + "'");
        out.push_back(value);
    }
    return out;
}

double lin(int i, int count) { return count == 1 ? 0.0 : -1.0 + 2.0 * i / (count - 1); }

} // namespace

FieldGridSpec parse_grid(const std::string &text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("grid must look like kind:AxB, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);

    FieldGridSpec spec;
    std::size_t expected = 2;
    if (kind == "slice-z") {
        spec.kind = GridKind::slice_z;
    } else if (kind == "slice-y") {
        spec.kind = GridKind::slice_y;
    } else if (kind == "ball3d") {
        spec.kind = GridKind::ball3d;
        expected = 3;
    } else if (kind == "sphere-shell") {
        spec.kind = GridKind::sphere_shell;
        spec.offset = 0.95;
    } else {
        throw UsageError("unknown grid kind '" + kind + "'");
    }

    if (const auto at = rest.find('@'); at != std::string::npos) {
        if (spec.kind == GridKind::ball3d)
            throw UsageError("ball3d grids take no offset");
        std::size_t used = 0;
        const std::string num = rest.substr(at + 1);
        try {
            spec.offset = std::stod(num, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != num.size() || num.empty())
            throw UsageError("bad grid offset '" + num + "'");
        rest = rest.substr(0, at);
    }
    spec.resolution = parse_counts(rest);
    if (spec.resolution.size() != expected)
        throw UsageError("grid '" + kind + "' needs " + std::to_string(expected) + " counts");
    if (spec.kind == GridKind::sphere_shell ? !(spec.offset > 0.0 && spec.offset <= 1.0)
                                            : !(std::abs(spec.offset) <= 1.0))
        throw UsageError("grid offset out of range");
    return spec;
}

GridPoints generate_grid(const FieldGridSpec &spec, bool drop_axis) {
    GridPoints out;
    auto keep = [&](Vec3 p) {
        if (norm(p) > 1.0) {
            ++out.outside;
            return;
        }
        if (drop_axis && p.x == 0.0 && p.y == 0.0) {
            ++out.on_axis;
            return;
        }
        out.points.push_back(p);
    };
    const auto &r = spec.resolution;
    switch (spec.kind) {
    case GridKind::slice_z:
        for (int i = 0; i < r[0]; ++i)
            for (int j = 0; j < r[1]; ++j)
                keep({lin(i, r[0]), lin(j, r[1]), spec.offset});
        break;
    case GridKind::slice_y:
        for (int i = 0; i < r[0]; ++i)
            for (int j = 0; j < r[1]; ++j)
                keep({lin(i, r[0]), spec.offset, lin(j, r[1])});
        break;
    case GridKind::ball3d:
        for (int i = 0; i < r[0]; ++i)
            for (int j = 0; j < r[1]; ++j)
                for (int k = 0; k < r[2]; ++k)
                    keep({lin(i, r[0]), lin(j, r[1]), lin(k, r[2])});
        break;
    case GridKind::sphere_shell:
        for (int i = 0; i < r[0]; ++i) {
            const double theta = std::numbers::pi * (i + 0.5) / r[0];
            for (int j = 0; j < r[1]; ++j) {
                const double phi = 2.0 * std::numbers::pi * j / r[1];
                Vec3 p{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
                p = p * spec.offset;
                // keep radius-1 shells inside the ball despite rounding
                if (const double n = norm(p); n > 1.0)
                    p = p * ((1.0 - 1e-15) / n);
                keep(p);
            }
        }
        break;
    }
    return out;
}

} // namespace bpswf::cli
