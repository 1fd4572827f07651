#include "wlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace wlab {

namespace {

std::string formatDouble(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

void writeEscaped(std::ostream& os, const std::string& s) {
    os << '"';
    for (char ch : s) {
        switch (ch) {
        case '"': os << "\\\""; break;
        case '\\': os << "\\\\"; break;
        case '\n': os << "\\n"; break;
        default: os << ch;
        }
    }
    os << '"';
}

} // namespace

JsonValue JsonValue::object() { return {}; }
JsonValue JsonValue::array() {
    JsonValue v;
    v.kind_ = Kind::Array;
    return v;
}
JsonValue JsonValue::number(double x) {
    JsonValue v;
    v.kind_ = Kind::Number;
    v.num_ = x;
    return v;
}
JsonValue JsonValue::integer(long long x) {
    JsonValue v;
    v.kind_ = Kind::Integer;
    v.int_ = x;
    return v;
}
JsonValue JsonValue::boolean(bool x) {
    JsonValue v;
    v.kind_ = Kind::Bool;
    v.bool_ = x;
    return v;
}
JsonValue JsonValue::string(std::string x) {
    JsonValue v;
    v.kind_ = Kind::String;
    v.str_ = std::move(x);
    return v;
}
JsonValue JsonValue::complexNumber(const Cd& z) {
    JsonValue v = object();
    v.set("re", number(z.real()));
    v.set("im", number(z.imag()));
    return v;
}

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
    members_.emplace_back(key, std::move(v));
    return *this;
}
JsonValue& JsonValue::push(JsonValue v) {
    items_.push_back(std::move(v));
    return *this;
}

void JsonValue::write(std::ostream& os) const {
    switch (kind_) {
    case Kind::Object: {
        os << '{';
        bool first = true;
        for (const auto& [k, v] : members_) {
            if (!first) os << ',';
            first = false;
            writeEscaped(os, k);
            os << ':';
            v.write(os);
        }
        os << '}';
        break;
    }
    case Kind::Array: {
        os << '[';
        bool first = true;
        for (const auto& v : items_) {
            if (!first) os << ',';
            first = false;
            v.write(os);
        }
        os << ']';
        break;
    }
    case Kind::Number: os << formatDouble(num_); break;
    case Kind::Integer: os << int_; break;
    case Kind::Bool: os << (bool_ ? "true" : "false"); break;
    case Kind::String: writeEscaped(os, str_); break;
    }
}

std::string JsonValue::str() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

JsonValue toJson(const CheckReport& r) {
    JsonValue v = JsonValue::object();
    v.set("type", JsonValue::string("check"));
    v.set("check", JsonValue::string(r.checkName));
    v.set("samples", JsonValue::integer(r.samples));
    v.set("max_residual", JsonValue::number(r.maxResidual));
    v.set("tolerance", JsonValue::number(r.tolerance));
    v.set("passed", JsonValue::boolean(r.passed));
    v.set("worst_point", JsonValue::complexNumber(r.worstPoint));
    return v;
}

JsonValue toJson(const HopfFitResult& r) {
    JsonValue v = JsonValue::object();
    v.set("type", JsonValue::string("hopf_fit"));
    v.set("c0", JsonValue::complexNumber(r.c0));
    v.set("residual", JsonValue::number(r.residual));
    v.set("samples", JsonValue::integer(r.samples));
    v.set("exact_constant", JsonValue::boolean(r.exactConstant));
    return v;
}

JsonValue toJson(const ImpossibilityCertificate& c) {
    JsonValue v = JsonValue::object();
    v.set("type", JsonValue::string("impossibility_certificate"));
    v.set("R", JsonValue::number(c.R));
    v.set("c0", JsonValue::complexNumber(c.c0));
    v.set("pullback", JsonValue::string(c.pullbackStatement));
    v.set("pullback_is_plus_conj", JsonValue::boolean(c.pullbackIsPlusConj));
    v.set("required_law", JsonValue::string(c.requiredLaw));
    JsonValue samples = JsonValue::array();
    for (const auto& [z, res] : c.mismatchSamples) {
        JsonValue s = JsonValue::object();
        s.set("z", JsonValue::complexNumber(z));
        s.set("mismatch", JsonValue::number(res));
        samples.push(std::move(s));
    }
    v.set("mismatch_samples", std::move(samples));
    v.set("c0_must_vanish", JsonValue::boolean(!c.consistent));
    v.set("consistent", JsonValue::boolean(c.consistent));
    JsonValue chain = JsonValue::array();
    for (const auto& line : c.chain) chain.push(JsonValue::string(line));
    v.set("chain", std::move(chain));
    return v;
}

JsonValue toJson(const SteklovSpectrum& s) {
    JsonValue v = JsonValue::object();
    v.set("type", JsonValue::string("steklov_spectrum"));
    v.set("L", JsonValue::number(s.geometry.L));
    v.set("rho1", JsonValue::number(s.geometry.rho1));
    v.set("rho2", JsonValue::number(s.geometry.rho2));
    v.set("boundary_length", JsonValue::number(s.boundaryLength));
    JsonValue entries = JsonValue::array();
    for (const auto& e : s.entries) {
        JsonValue item = JsonValue::object();
        item.set("sigma", JsonValue::number(e.sigma));
        item.set("mode", JsonValue::integer(e.mode));
        item.set("parity", JsonValue::integer(e.parity));
        item.set("multiplicity", JsonValue::integer(e.multiplicity));
        item.set("normalized", JsonValue::number(e.normalized));
        entries.push(std::move(item));
    }
    v.set("entries", std::move(entries));
    return v;
}

void writeReport(const std::vector<JsonValue>& results, const std::string& surfaceName,
                 std::ostream& os) {
    JsonValue root = JsonValue::object();
    root.set("version", JsonValue::integer(1));
    if (!surfaceName.empty()) root.set("surface", JsonValue::string(surfaceName));
    JsonValue arr = JsonValue::array();
    for (const auto& r : results) arr.push(r);
    root.set("results", std::move(arr));
    root.write(os);
    os << '\n';
}

void writeSpectrumCsv(const SteklovSpectrum& s, std::ostream& os) {
    os << "index,sigma,mode,parity,multiplicity\n";
    int index = 0;
    for (const auto& e : s.entries) {
        for (int m = 0; m < e.multiplicity; ++m) {
            os << index++ << ',' << formatDouble(e.sigma) << ',' << e.mode << ','
               << e.parity << ',' << e.multiplicity << '\n';
        }
    }
}

void writeMeshObj(const SurfaceChart& surface, const GridSpec& grid, std::ostream& os,
                  double branchClearance) {
    if (grid.nR < 2 || grid.nTheta < 2) throw ParamRangeError("mesh grid counts must be >= 2");
    if (!(grid.rMin < grid.rMax)) throw ParamRangeError("mesh grid needs rMin < rMax");
    auto branches = surface.branchPoints();

    for (int i = 0; i < grid.nR; ++i) {
        double r = grid.rMin + (grid.rMax - grid.rMin) * i / (grid.nR - 1);
        for (int j = 0; j < grid.nTheta; ++j) {
            // Half-step offset keeps the grid off the axes, where the catalog
            // surfaces put their branch points.
            double th = 2.0 * M_PI * (j + 0.5) / grid.nTheta;
            Cd z = std::polar(r, th);
            for (const auto& bp : branches)
                if (std::abs(z - bp.point) < branchClearance)
                    throw DomainError("mesh grid point too close to a branch point");
            Vec3 x = surface.position(z);
            os << "v " << formatDouble(x(0)) << ' ' << formatDouble(x(1)) << ' '
               << formatDouble(x(2)) << '\n';
        }
    }
    auto idx = [&](int i, int j) { return i * grid.nTheta + (j % grid.nTheta) + 1; };
    for (int i = 0; i + 1 < grid.nR; ++i) {
        for (int j = 0; j < grid.nTheta; ++j) {
            int a = idx(i, j), b = idx(i, j + 1), c = idx(i + 1, j + 1), d = idx(i + 1, j);
            os << "f " << a << ' ' << b << ' ' << c << '\n';
            os << "f " << a << ' ' << c << ' ' << d << '\n';
        }
    }
}

} // namespace wlab
