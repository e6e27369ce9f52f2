#include "fracgrad/field_io.hpp"
#include "fracgrad/errors.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace fracgrad {

namespace {

constexpr char kMagic[4] = {'F', 'G', 'R', 'D'};
constexpr std::uint32_t kVersion = 1;

bool ends_with_csv(const std::string& path) {
    return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

template <typename T>
void put(std::ofstream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw StructuralError("read_field: truncated header");
    return v;
}

void write_csv(const std::string& path, const VectorField& f) {
    const GridSpec& g = f.grid();
    if (g.n != 1) throw StructuralError("write_field: CSV output only supports n = 1");
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_field: cannot open " + path);
    os << "x";
    if (f.dim() == 1) {
        os << ",value";
    } else {
        for (std::size_t c = 0; c < f.dim(); ++c) os << ",c" << c;
    }
    os << "\n" << std::setprecision(17);
    for (int i = 0; i < g.points; ++i) {
        os << g.coordinate(i);
        for (std::size_t c = 0; c < f.dim(); ++c) os << "," << f[c][i];
        os << "\n";
    }
    if (!os) throw std::runtime_error("write_field: write failed for " + path);
}

VectorField read_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("read_field: cannot open " + path);
    std::string line;
    if (!std::getline(is, line)) throw StructuralError("read_field: empty CSV");
    std::size_t columns = 1;
    for (char ch : line)
        if (ch == ',') ++columns;
    if (columns < 2) throw StructuralError("read_field: CSV needs x and at least one value column");
    std::vector<double> xs;
    std::vector<std::vector<double>> cols(columns - 1);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::size_t c = 0;
        while (std::getline(ss, cell, ',')) {
            if (c >= columns) throw StructuralError("read_field: ragged CSV row");
            const double v = std::stod(cell);
            if (c == 0) xs.push_back(v);
            else cols[c - 1].push_back(v);
            ++c;
        }
        if (c != columns) throw StructuralError("read_field: ragged CSV row");
    }
    if (xs.size() < 8) throw StructuralError("read_field: CSV has too few rows");
    GridSpec g;
    g.n = 1;
    g.points = static_cast<int>(xs.size());
    const double h = xs[1] - xs[0];
    g.extent = h * g.points;
    const double start = xs[0] + 0.5 * g.extent;  // 0 or h/2
    g.offset = std::fabs(start - 0.5 * h) < 1e-6 * h;
    if (!g.offset && std::fabs(start) > 1e-6 * h) throw StructuralError("read_field: CSV x column is not a grid");
    std::vector<ScalarField> comps;
    for (auto& c : cols) comps.emplace_back(g, std::move(c));
    return VectorField(std::move(comps));
}

}  // namespace

void write_field(const std::string& path, const VectorField& f) {
    if (ends_with_csv(path)) return write_csv(path, f);
    const GridSpec& g = f.grid();
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_field: cannot open " + path);
    os.write(kMagic, 4);
    put<std::uint32_t>(os, kVersion);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(g.n));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(g.points));
    put<double>(os, g.extent);
    put<std::uint32_t>(os, g.offset ? 1u : 0u);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.dim()));
    for (const auto& c : f.components())
        os.write(reinterpret_cast<const char*>(c.values().data()),
                 static_cast<std::streamsize>(c.size() * sizeof(double)));
    if (!os) throw std::runtime_error("write_field: write failed for " + path);
}

void write_field(const std::string& path, const ScalarField& field) { write_field(path, VectorField({field})); }

VectorField read_field(const std::string& path) {
    if (ends_with_csv(path)) return read_csv(path);
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_field: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0) throw StructuralError("read_field: bad magic in " + path);
    if (get<std::uint32_t>(is) != kVersion) throw StructuralError("read_field: unsupported version");
    GridSpec g;
    g.n = static_cast<int>(get<std::uint32_t>(is));
    g.points = static_cast<int>(get<std::uint32_t>(is));
    g.extent = get<double>(is);
    g.offset = get<std::uint32_t>(is) != 0;
    const std::uint32_t components = get<std::uint32_t>(is);
    g.validate();
    if (components == 0 || components > 16) throw StructuralError("read_field: bad component count");
    std::vector<ScalarField> comps;
    for (std::uint32_t c = 0; c < components; ++c) {
        std::vector<double> values(g.size());
        is.read(reinterpret_cast<char*>(values.data()), static_cast<std::streamsize>(values.size() * sizeof(double)));
        if (!is) throw StructuralError("read_field: truncated payload");
        comps.emplace_back(g, std::move(values));
    }
    return VectorField(std::move(comps));
}

}  // namespace fracgrad
