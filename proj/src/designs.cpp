#include "kriglab/designs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace kriglab {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check_box(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
    require(lo.size() >= 1, "design box: dimension must be >= 1");
    require(lo.size() == hi.size(), "design box: lo/hi dimension mismatch");
    for (int j = 0; j < lo.size(); ++j)
        require(hi[j] > lo[j], "design box: degenerate (zero-volume) box rejected");
}

// Base-2 digital sequence (Sobol construction, direct binary expansion so
// dimension 1 reproduces the van der Corput order).  Primitive-polynomial
// data for dimensions 2..8.
struct SobolDim {
    int s;
    unsigned a;
    unsigned m[5];
};
constexpr SobolDim kSobolDims[] = {
    {1, 0, {1, 0, 0, 0, 0}},  {2, 1, {1, 3, 0, 0, 0}},   {3, 1, {1, 3, 1, 0, 0}},
    {3, 2, {1, 1, 1, 0, 0}},  {4, 1, {1, 1, 3, 3, 0}},   {4, 4, {1, 3, 5, 13, 0}},
    {5, 2, {1, 1, 5, 5, 17}},
};
constexpr int kSobolBits = 32;
constexpr int kGridMaxDim = 8;

std::vector<std::uint32_t> direction_numbers(int dim_index) {
    std::vector<std::uint32_t> v(kSobolBits);
    if (dim_index == 0) {
        for (int k = 0; k < kSobolBits; ++k) v[k] = 1u << (kSobolBits - 1 - k);
        return v;
    }
    const SobolDim& sd = kSobolDims[dim_index - 1];
    std::vector<std::uint64_t> m(kSobolBits);
    for (int k = 0; k < sd.s; ++k) m[k] = sd.m[k];
    for (int k = sd.s; k < kSobolBits; ++k) {
        std::uint64_t mk = m[k - sd.s] ^ (m[k - sd.s] << sd.s);
        for (int i = 1; i < sd.s; ++i)
            if ((sd.a >> (sd.s - 1 - i)) & 1u) mk ^= m[k - i] << i;
        m[k] = mk;
    }
    for (int k = 0; k < kSobolBits; ++k)
        v[k] = static_cast<std::uint32_t>(m[k] << (kSobolBits - 1 - k));
    return v;
}

double sobol_coordinate(const std::vector<std::uint32_t>& v, std::uint64_t index) {
    std::uint32_t x = 0;
    for (int k = 0; index != 0; ++k, index >>= 1)
        if (index & 1u) x ^= v[k];
    return x * 0x1p-32;
}

constexpr int kHaltonPrimes[16] = {2,  3,  5,  7,  11, 13, 17, 19,
                                   23, 29, 31, 37, 41, 43, 47, 53};

double radical_inverse(std::uint64_t i, int base) {
    double f = 1.0, r = 0.0;
    while (i != 0) {
        f /= base;
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

}  // namespace

Design Design::prefix(int n) const {
    require(n >= 0 && n <= size(), "Design::prefix: size out of range");
    Design d;
    d.points = points.topRows(n);
    d.box_lo = box_lo;
    d.box_hi = box_hi;
    return d;
}

Design grid_sequence(const Eigen::VectorXd& box_lo, const Eigen::VectorXd& box_hi, int n) {
    check_box(box_lo, box_hi);
    require(n >= 1, "grid_sequence: n must be >= 1");
    const int d = static_cast<int>(box_lo.size());
    require(d <= kGridMaxDim, "grid_sequence: dim > 8 unsupported (use halton_sequence)");

    std::vector<std::vector<std::uint32_t>> dirs(d);
    for (int j = 0; j < d; ++j) dirs[j] = direction_numbers(j);

    Design out;
    out.points.resize(n, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) {
            const double u = sobol_coordinate(dirs[j], static_cast<std::uint64_t>(i) + 1);
            out.points(i, j) = box_lo[j] + u * (box_hi[j] - box_lo[j]);
        }
    out.box_lo = box_lo;
    out.box_hi = box_hi;
    return out;
}

Design halton_sequence(const Eigen::VectorXd& box_lo, const Eigen::VectorXd& box_hi, int n) {
    check_box(box_lo, box_hi);
    require(n >= 1, "halton_sequence: n must be >= 1");
    const int d = static_cast<int>(box_lo.size());
    require(d <= 16, "halton_sequence: dim > 16 unsupported (prime base table bound)");

    Design out;
    out.points.resize(n, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) {
            const double u = radical_inverse(static_cast<std::uint64_t>(i) + 1, kHaltonPrimes[j]);
            out.points(i, j) = box_lo[j] + u * (box_hi[j] - box_lo[j]);
        }
    out.box_lo = box_lo;
    out.box_hi = box_hi;
    return out;
}

Design accumulate_at(const Eigen::VectorXd& x, double rate, const Eigen::VectorXd& direction,
                     int n) {
    require(x.size() >= 1, "accumulate_at: dimension must be >= 1");
    require(rate > 0.0 && rate < 1.0, "accumulate_at: rate must lie in (0, 1)");
    require(direction.size() == x.size(), "accumulate_at: direction dimension mismatch");
    require(direction.norm() > 0.0, "accumulate_at: direction must be nonzero");
    require(n >= 1, "accumulate_at: n must be >= 1");

    const Eigen::VectorXd dir = direction / direction.norm();
    Design out;
    out.points.resize(n, x.size());
    double step = 1.0;
    for (int i = 0; i < n; ++i) {
        step *= rate;
        const Eigen::VectorXd p = x + step * dir;
        if (p == x)
            throw std::invalid_argument("accumulate_at: rate^i underflow, points would coincide");
        out.points.row(i) = p.transpose();
    }
    // The closure of the sequence contains its limit x.
    out.box_lo = out.points.colwise().minCoeff().transpose().cwiseMin(x);
    out.box_hi = out.points.colwise().maxCoeff().transpose().cwiseMax(x);
    return out;
}

Design exclude_ball(const Design& design, const Eigen::VectorXd& center, double radius) {
    require(radius > 0.0, "exclude_ball: radius must be positive");
    require(center.size() == design.dim(), "exclude_ball: center dimension mismatch");
    std::vector<int> keep;
    for (int i = 0; i < design.size(); ++i)
        if ((design.point(i) - center).norm() >= radius) keep.push_back(i);
    Design out;
    out.points.resize(static_cast<int>(keep.size()), design.dim());
    for (std::size_t i = 0; i < keep.size(); ++i) out.points.row(i) = design.points.row(keep[i]);
    out.box_lo = design.box_lo;
    out.box_hi = design.box_hi;
    return out;
}

void write_design_csv(const Design& design, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw numeric_error("write_design_csv: cannot open '" + path + "'");
    for (int j = 0; j < design.dim(); ++j) out << (j ? ",x" : "x") << (j + 1);
    out << "\n";
    char buf[40];
    for (int i = 0; i < design.size(); ++i) {
        for (int j = 0; j < design.dim(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", design.points(i, j));
            out << (j ? "," : "") << buf;
        }
        out << "\n";
    }
    if (!out.good()) throw numeric_error("write_design_csv: write failed for '" + path + "'");
}

Design read_design_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("read_design_csv: cannot open '" + path + "'");
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), "read_design_csv: empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::vector<std::string> header;
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) header.push_back(cell);
    for (std::size_t j = 0; j < header.size(); ++j)
        require(header[j] == "x" + std::to_string(j + 1),
                "read_design_csv: header must be x1,...,xd (got '" + header[j] + "')");
    const int d = static_cast<int>(header.size());
    require(d >= 1, "read_design_csv: no columns");

    std::vector<double> values;
    int rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream ls(line);
        int cols = 0;
        while (std::getline(ls, cell, ',')) {
            std::size_t pos = 0;
            double v;
            try {
                v = std::stod(cell, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            require(pos == cell.size() && !cell.empty(),
                    "read_design_csv: bad number '" + cell + "'");
            values.push_back(v);
            ++cols;
        }
        require(cols == d, "read_design_csv: row with wrong column count");
        ++rows;
    }

    Design out;
    out.points.resize(rows, d);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < d; ++j) out.points(i, j) = values[static_cast<std::size_t>(i) * d + j];
    if (rows > 0) {
        out.box_lo = out.points.colwise().minCoeff().transpose();
        out.box_hi = out.points.colwise().maxCoeff().transpose();
    } else {
        out.box_lo = Eigen::VectorXd::Zero(d);
        out.box_hi = Eigen::VectorXd::Ones(d);
    }
    return out;
}

double fill_distance(const Design& design, int resolution) {
    require(design.size() >= 1, "fill_distance: empty design");
    const int d = design.dim();
    if (d == 1) {
        std::vector<double> xs(design.points.col(0).data(),
                               design.points.col(0).data() + design.size());
        std::sort(xs.begin(), xs.end());
        double h = std::max(xs.front() - design.box_lo[0], design.box_hi[0] - xs.back());
        for (std::size_t i = 0; i + 1 < xs.size(); ++i)
            h = std::max(h, 0.5 * (xs[i + 1] - xs[i]));
        return h;
    }
    // Grid scan with roughly resolution^ (1/(d-1)) points per axis beyond 1-d.
    const int per_axis = std::max(3, static_cast<int>(std::round(
                                         std::pow(static_cast<double>(resolution) * 400.0,
                                                  1.0 / d))));
    std::vector<int> idx(d, 0);
    double h = 0.0;
    Eigen::VectorXd p(d);
    while (true) {
        for (int j = 0; j < d; ++j)
            p[j] = design.box_lo[j] +
                   (design.box_hi[j] - design.box_lo[j]) * idx[j] / (per_axis - 1);
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < design.size(); ++i)
            best = std::min(best, (design.point(i) - p).norm());
        h = std::max(h, best);
        int j = 0;
        for (; j < d; ++j) {
            if (++idx[j] < per_axis) break;
            idx[j] = 0;
        }
        if (j == d) break;
    }
    return h;
}

}  // namespace kriglab
