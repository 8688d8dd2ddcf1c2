#include "commands.hpp"

#include "output.hpp"

#include "bpswf/bouwkamp.hpp"
#include "bpswf/pswf.hpp"

#include <ostream>
#include <sstream>

namespace bpswf::cli {

namespace {

std::string header(const std::string &columns) {
    return "# schema_version=" + std::to_string(kSchemaVersion) + "\n" + columns + "\n";
}

ModeKind kind_of(bool scalar) { return scalar ? ModeKind::scalar : ModeKind::vectorial; }

} // namespace

std::string eigenvalues_csv(double alpha, double c, int N, bool scalar) {
    if (N < 0)
        throw UsageError("--N must be non-negative");
    const auto table = solve_modes(N, alpha, c, kind_of(scalar));
    std::string out = header("alpha,c,n,k,chi");
    // std::map keys are (n, k), so iteration order is already sorted
    for (const auto &[key, e] : table.entries)
        out += format_double(alpha) + "," + format_double(c) + "," + std::to_string(e.n) + "," +
               std::to_string(e.k) + "," + format_double(e.chi) + "\n";
    return out;
}

std::string coeffs_csv(const ModeOptions &mode) {
    const auto radial = solve_mode(mode.n, mode.k, mode.alpha, mode.c, kind_of(mode.scalar));
    std::string out = header("j,beta_j");
    for (std::size_t j = 0; j < radial.beta.size(); ++j)
        if (radial.beta[j] != 0.0)
            out += std::to_string(j) + "," + format_double(radial.beta[j]) + "\n";
    return out;
}

std::string field_csv(const ModeOptions &mode, const FieldGridSpec &grid, std::ostream &log) {
    const ModeIndex index{mode.alpha, mode.c, mode.n, mode.k, mode.ell};
    index.validate(kind_of(mode.scalar));
    const auto pts = generate_grid(grid, !mode.scalar);
    if (pts.outside > 0)
        log << "# dropped " << pts.outside << " grid points outside the unit ball\n";
    if (pts.on_axis > 0)
        log << "# dropped " << pts.on_axis << " grid points on the polar axis\n";

    std::ostringstream out;
    if (mode.scalar) {
        const ScalarPswf s(index);
        out << header("x,y,z,value");
        for (const auto &p : pts.points)
            out << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(p.z) << ','
                << format_double(scalar_eval(s, p)) << '\n';
    } else {
        const VectorPswf v(index);
        out << header("x,y,z,vx,vy,vz");
        for (const auto &p : pts.points) {
            const Vec3 w = vector_eval(v, p);
            out << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(p.z) << ','
                << format_double(w.x) << ',' << format_double(w.y) << ',' << format_double(w.z) << '\n';
        }
    }
    return out.str();
}

} // namespace bpswf::cli
